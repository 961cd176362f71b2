// Formal powers p^w with complex rational exponent, times cyclotomic scalars.
#pragma once

#include <complex>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>

#include "qpw/cyclo.hpp"

namespace qpw {

/// w = re + i im with rational parts.
struct Exponent {
  Rational re{0};
  Rational im{0};

  [[nodiscard]] bool is_zero() const { return re == 0 && im == 0; }
  [[nodiscard]] Exponent conj() const { return {re, -im}; }
  [[nodiscard]] std::string str() const;

  friend Exponent operator+(const Exponent& a, const Exponent& b) { return {a.re + b.re, a.im + b.im}; }
  friend Exponent operator-(const Exponent& a, const Exponent& b) { return {a.re - b.re, a.im - b.im}; }
  friend Exponent operator-(const Exponent& a) { return {-a.re, -a.im}; }
  friend Exponent operator*(const Rational& k, const Exponent& a) { return {k * a.re, k * a.im}; }
  friend bool operator==(const Exponent&, const Exponent&) = default;
  friend std::strong_ordering operator<=>(const Exponent& a, const Exponent& b) {
    if (int c = cmp(a.re, b.re); c != 0) return c <=> 0;
    return cmp(a.im, b.im) <=> 0;
  }
};

/// c * p^w, kept with 0 <= Re(w) < 1 by moving floor(Re w) into c. For p = 2
/// the real half power is folded into c as zeta_8 + zeta_8^{-1}. Equality is
/// componentwise after normalization.
class PowerScalar {
 public:
  PowerScalar() = default;
  PowerScalar(int p, Cyclo c, Exponent w = {});

  /// p^w.
  static PowerScalar power(int p, const Exponent& w) { return PowerScalar(p, Cyclo(1), w); }

  [[nodiscard]] int prime() const { return p_; }
  [[nodiscard]] const Cyclo& c() const { return c_; }
  [[nodiscard]] const Exponent& w() const { return w_; }
  [[nodiscard]] bool is_zero() const { return c_.is_zero(); }
  /// The value when the exponent normalizes away.
  [[nodiscard]] std::optional<Cyclo> as_cyclo() const;

  [[nodiscard]] PowerScalar conj() const { return PowerScalar(p_, c_.conj(), w_.conj()); }
  [[nodiscard]] std::complex<double> to_complex() const;
  [[nodiscard]] std::string str() const;

  friend PowerScalar power_mul(const PowerScalar& a, const PowerScalar& b);
  friend PowerScalar operator*(const PowerScalar& a, const PowerScalar& b) { return power_mul(a, b); }
  friend bool operator==(const PowerScalar&, const PowerScalar&) = default;

 private:
  int p_ = 2;
  Cyclo c_;
  Exponent w_;
};

std::ostream& operator<<(std::ostream& os, const PowerScalar& x);

/// Sum_w c_w p^w over normalized exponents with nonzero c_w.
class PowerSum {
 public:
  explicit PowerSum(int p = 2) : p_(p) {}
  PowerSum(int p, const Cyclo& c) : p_(p) { add(PowerScalar(p, c)); }
  explicit PowerSum(const PowerScalar& x) : p_(x.prime()) { add(x); }

  void add(const PowerScalar& x);

  [[nodiscard]] int prime() const { return p_; }
  [[nodiscard]] const std::map<Exponent, Cyclo>& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] std::optional<Cyclo> as_cyclo() const;
  [[nodiscard]] PowerSum conj() const;
  [[nodiscard]] std::complex<double> to_complex() const;
  [[nodiscard]] std::string str() const;

  friend PowerSum operator+(const PowerSum& a, const PowerSum& b);
  friend PowerSum operator-(const PowerSum& a, const PowerSum& b);
  friend PowerSum operator*(const PowerSum& a, const PowerSum& b);
  friend bool operator==(const PowerSum&, const PowerSum&) = default;

 private:
  int p_;
  std::map<Exponent, Cyclo> terms_;
};

std::ostream& operator<<(std::ostream& os, const PowerSum& x);

}  // namespace qpw
