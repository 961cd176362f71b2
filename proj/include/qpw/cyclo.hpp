// Exact complex numbers in the cyclotomic fields Q(zeta_{p^m}).
#pragma once

#include <complex>
#include <iosfwd>
#include <string>
#include <vector>

#include "qpw/padic.hpp"

namespace qpw {

/// A rational linear combination of p^m-th roots of unity, stored on the basis
/// zeta^k, 0 <= k < phi(p^m), at the smallest order that holds the value.
/// Rationals carry prime 0 and order 1, so structural equality is value
/// equality.
class Cyclo {
 public:
  Cyclo() : coeffs_{Rational(0)} {}
  Cyclo(long v) : coeffs_{Rational(v)} {}  // NOLINT(google-explicit-constructor)
  Cyclo(const Rational& q) : coeffs_{q} { coeffs_[0].canonicalize(); }  // NOLINT(google-explicit-constructor)

  /// e^{2 pi i a}.
  static Cyclo root_of_unity(const Angle& a);
  /// zeta_{p^m}^k for any integer k.
  static Cyclo zeta(int p, int m, long k);
  /// Reduces an arbitrary coefficient vector on zeta_{p^m}^k, k < p^m.
  static Cyclo from_powers(int p, int m, std::vector<Rational> coeffs);
  /// zeta_8 + zeta_8^{-1}.
  static Cyclo sqrt2();
  /// p^{k/2}; odd k is only representable for p = 2.
  static Cyclo half_power(int p, long k);

  [[nodiscard]] int prime() const { return p_; }
  [[nodiscard]] int exponent() const { return m_; }
  [[nodiscard]] long order() const;
  [[nodiscard]] const std::vector<Rational>& coeffs() const { return coeffs_; }

  [[nodiscard]] bool is_zero() const { return m_ == 0 && coeffs_[0] == 0; }
  [[nodiscard]] bool is_rational() const { return m_ == 0; }
  [[nodiscard]] const Rational& rational() const;
  [[nodiscard]] bool is_real() const { return *this == conj(); }

  [[nodiscard]] Cyclo conj() const;
  [[nodiscard]] Cyclo inv() const;
  /// x * e^{2 pi i a}, by rotating indices.
  [[nodiscard]] Cyclo rotate(const Angle& a) const;
  /// x * conj(x).
  [[nodiscard]] Cyclo abs2() const { return *this * conj(); }

  /// The same value on the basis of zeta_{p^M}, M >= exponent(). Coefficient
  /// vector of length phi(p^M).
  [[nodiscard]] std::vector<Rational> coeffs_at(int p, int M) const;

  [[nodiscard]] std::complex<double> to_complex() const;
  [[nodiscard]] std::string str() const;

  Cyclo operator-() const;
  Cyclo& operator+=(const Cyclo& o) { return *this = *this + o; }
  Cyclo& operator-=(const Cyclo& o) { return *this = *this - o; }
  Cyclo& operator*=(const Cyclo& o) { return *this = *this * o; }
  friend Cyclo operator+(const Cyclo& a, const Cyclo& b);
  friend Cyclo operator-(const Cyclo& a, const Cyclo& b);
  friend Cyclo operator*(const Cyclo& a, const Cyclo& b);
  friend Cyclo operator/(const Cyclo& a, const Cyclo& b) { return a * b.inv(); }
  friend bool operator==(const Cyclo&, const Cyclo&) = default;

 private:
  Cyclo(int p, int m, std::vector<Rational> coeffs) : p_(p), m_(m), coeffs_(std::move(coeffs)) {}
  void minimize();

  int p_ = 0;
  int m_ = 0;
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Cyclo& x);

/// phi(p^m).
long euler_phi_pm(int p, int m);

using CycloMatrix = std::vector<std::vector<Cyclo>>;

CycloMatrix identity_matrix(std::size_t n);
CycloMatrix matmul(const CycloMatrix& a, const CycloMatrix& b);
std::vector<Cyclo> matvec(const CycloMatrix& a, const std::vector<Cyclo>& v);
/// Conjugate transpose.
CycloMatrix adjoint(const CycloMatrix& a);
bool is_identity(const CycloMatrix& m);
bool is_zero(const CycloMatrix& m);

}  // namespace qpw
