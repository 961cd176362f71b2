// Exact arithmetic on finite p-adic expansions (elements of Z[1/p]), norms,
// fractional parts, characters expressed as angles, and the ball calculus.
#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qpw {

using Integer = mpz_class;
using Rational = mpq_class;

/// Valuation of zero.
inline constexpr long kInfiniteValuation = std::numeric_limits<long>::max();

/// p^k as an arbitrary-precision integer, k >= 0.
Integer ipow(int p, unsigned long k);

/// p^k as a rational, any sign of k.
Rational rpow(int p, long k);

/// An element num * p^exp of Z[1/p], stored with p not dividing num (or the
/// canonical zero num = 0, exp = 0).
class PAdicPoint {
 public:
  explicit PAdicPoint(int p = 2);
  PAdicPoint(int p, Integer num, long exp = 0);

  /// Throws std::invalid_argument unless the reduced denominator is a power of p.
  static PAdicPoint from_rational(int p, const Rational& q);
  /// Accepts "num/den" or "num".
  static PAdicPoint parse(int p, std::string_view text);

  [[nodiscard]] int prime() const { return p_; }
  [[nodiscard]] const Integer& num() const { return num_; }
  [[nodiscard]] long exp() const { return exp_; }
  [[nodiscard]] bool is_zero() const { return num_ == 0; }

  /// gamma(x) in |x|_p = p^{-gamma}; kInfiniteValuation for zero.
  [[nodiscard]] long valuation() const { return is_zero() ? kInfiniteValuation : exp_; }

  [[nodiscard]] Rational to_rational() const;
  /// Always "num/den".
  [[nodiscard]] std::string str() const;

  /// x * p^k.
  [[nodiscard]] PAdicPoint shifted(long k) const;

  PAdicPoint operator-() const;
  friend PAdicPoint operator+(const PAdicPoint& a, const PAdicPoint& b);
  friend PAdicPoint operator-(const PAdicPoint& a, const PAdicPoint& b);
  friend PAdicPoint operator*(const PAdicPoint& a, const PAdicPoint& b);

  friend bool operator==(const PAdicPoint& a, const PAdicPoint& b) {
    return a.p_ == b.p_ && a.exp_ == b.exp_ && a.num_ == b.num_;
  }
  /// Numeric order of the underlying rationals.
  friend std::strong_ordering operator<=>(const PAdicPoint& a, const PAdicPoint& b);

 private:
  void canonicalize();

  int p_;
  Integer num_;
  long exp_ = 0;
};

/// |x|_p = p^log, or 0 when log is empty.
struct PNorm {
  int prime = 2;
  std::optional<long> log;

  [[nodiscard]] bool is_zero() const { return !log.has_value(); }
  [[nodiscard]] Rational value() const { return log ? rpow(prime, *log) : Rational(0); }

  friend bool operator==(const PNorm&, const PNorm&) = default;
  friend std::strong_ordering operator<=>(const PNorm& a, const PNorm& b) {
    if (!a.log || !b.log) return a.log.has_value() <=> b.log.has_value();
    return *a.log <=> *b.log;
  }
};

PNorm norm(const PAdicPoint& x);

/// {x}_p: the digits of x at negative exponents, a rational in [0,1).
PAdicPoint frac_part(const PAdicPoint& x);

/// A point of Q_p^n with all coordinates in Z[1/p].
class PAdicVector {
 public:
  PAdicVector(int p, std::size_t n);  // zero vector
  explicit PAdicVector(std::vector<PAdicPoint> coords);

  static PAdicVector scalar(const PAdicPoint& x) { return PAdicVector({x}); }
  /// Parses each coordinate with PAdicPoint::parse.
  static PAdicVector parse(int p, const std::vector<std::string>& coords);

  [[nodiscard]] int prime() const { return p_; }
  [[nodiscard]] std::size_t dim() const { return coords_.size(); }
  [[nodiscard]] const PAdicPoint& operator[](std::size_t i) const { return coords_[i]; }
  [[nodiscard]] const std::vector<PAdicPoint>& coords() const { return coords_; }
  [[nodiscard]] bool is_zero() const;

  /// min over coordinates of the valuation.
  [[nodiscard]] long valuation() const;
  [[nodiscard]] PAdicVector shifted(long k) const;
  /// Coordinates of this vector followed by those of other.
  [[nodiscard]] PAdicVector concat(const PAdicVector& other) const;

  PAdicVector operator-() const;
  friend PAdicVector operator+(const PAdicVector& a, const PAdicVector& b);
  friend PAdicVector operator-(const PAdicVector& a, const PAdicVector& b);
  friend PAdicVector operator*(const PAdicPoint& s, const PAdicVector& v);
  friend PAdicPoint dot(const PAdicVector& a, const PAdicVector& b);

  friend bool operator==(const PAdicVector&, const PAdicVector&) = default;
  /// Lexicographic on the numeric coordinate order.
  friend std::strong_ordering operator<=>(const PAdicVector& a, const PAdicVector& b);

 private:
  int p_;
  std::vector<PAdicPoint> coords_;
};

PNorm norm(const PAdicVector& x);

/// A rational value in [0,1) with p-power denominator, standing for e^{2 pi i value}.
class Angle {
 public:
  explicit Angle(int p = 2) : value_(p) {}
  /// Reduces mod 1.
  explicit Angle(const PAdicPoint& x) : value_(frac_part(x)) {}

  [[nodiscard]] int prime() const { return value_.prime(); }
  [[nodiscard]] const PAdicPoint& value() const { return value_; }
  [[nodiscard]] bool is_zero() const { return value_.is_zero(); }

  Angle operator-() const { return Angle(-value_); }
  friend Angle operator+(const Angle& a, const Angle& b) { return Angle(a.value_ + b.value_); }
  friend Angle operator-(const Angle& a, const Angle& b) { return Angle(a.value_ - b.value_); }
  friend bool operator==(const Angle&, const Angle&) = default;

 private:
  PAdicPoint value_;
};

/// Sum over coordinates of {s_j x_j}_p, mod 1.
Angle character(const PAdicVector& s, const PAdicVector& x);

enum class BallRelation { kDisjoint, kEqual, kContains, kContainedIn };

/// The ball B_gamma^n(center) = {x : |x - center|_p <= p^gamma}. The center is
/// kept as the unique representative with digits only at exponents below -gamma,
/// so two balls are the same set iff they compare equal.
class Ball {
 public:
  Ball(const PAdicVector& center, long gamma);

  [[nodiscard]] const PAdicVector& center() const { return center_; }
  [[nodiscard]] long gamma() const { return gamma_; }
  [[nodiscard]] int prime() const { return center_.prime(); }
  [[nodiscard]] std::size_t dim() const { return center_.dim(); }

  [[nodiscard]] bool contains(const PAdicVector& x) const;
  /// Haar measure p^{n gamma}.
  [[nodiscard]] Rational measure() const;
  /// The ball of radius p^{gamma+1} containing this one.
  [[nodiscard]] Ball parent() const;
  /// p^{n(gamma - target)} disjoint balls of radius p^target covering this
  /// ball, in ascending center order. Throws if target > gamma.
  [[nodiscard]] std::vector<Ball> split(long target) const;
  [[nodiscard]] bool contains_zero() const { return center_.is_zero(); }

  friend bool operator==(const Ball&, const Ball&) = default;
  friend std::strong_ordering operator<=>(const Ball& a, const Ball& b) {
    if (auto c = a.gamma_ <=> b.gamma_; c != 0) return c;
    return a.center_ <=> b.center_;
  }

 private:
  PAdicVector center_;
  long gamma_;
};

/// The representative of x + p^{-gamma} Z_p with 0 <= value < p^{-gamma}.
PAdicPoint canonical_residue(const PAdicPoint& x, long gamma);
PAdicVector canonical_residue(const PAdicVector& x, long gamma);

Ball ball_canonicalize(const PAdicVector& center, long gamma);
BallRelation ball_relation(const Ball& b1, const Ball& b2);
/// The intersection of two balls, which is empty or the smaller one.
std::optional<Ball> intersect(const Ball& b1, const Ball& b2);
std::vector<Ball> ball_split(const Ball& b, long target);

/// All a in I_p^n with |a|_p <= p^{gamma_max}, ordered by norm, then
/// coordinate-wise numeric value. Count is p^{n gamma_max}.
std::vector<PAdicVector> enumerate_Ip(int p, long gamma_max, std::size_t n);

/// The residues m / p^gamma_max, m = 0..p^gamma_max-1, in the same order as
/// enumerate_Ip for n = 1.
std::vector<PAdicPoint> enumerate_Ip_1d(int p, long gamma_max);

}  // namespace qpw
