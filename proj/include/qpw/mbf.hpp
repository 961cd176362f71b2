// Modulated ball functions: finite sums  c * chi_p(s.x) * 1_B(x)  on Q_p^n.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qpw/cyclo.hpp"
#include "qpw/padic.hpp"

namespace qpw {

struct Term {
  Cyclo coef;
  PAdicVector freq;
  Ball ball;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Replaces freq by its residue modulo p^gamma Z_p^n and moves the constant
/// chi_p(d.center) into coef.
Term normalize_term(const Term& t);

/// The pieces of t on the p^{n(gamma - target)} subballs of radius p^target.
std::vector<Term> split_term(const Term& t, long target);

/// The function value of one term at x (0 outside the ball).
Cyclo evaluate_term(const Term& t, const PAdicVector& x);

/// Closed form of the Haar integral of one term; freq need not be normalized.
Cyclo term_integral(const Term& t);

/// A function in canonical form: pairwise disjoint balls, all of one radius,
/// that radius as large as possible, one normalized term per ball, nonzero
/// coefficients, terms sorted by (ball, freq). Zero is the empty list, so
/// equality of values is equality of term lists.
class MBF {
 public:
  MBF(int p, std::size_t n) : p_(p), n_(n) {}

  /// Arbitrary (possibly overlapping, unnormalized) terms.
  static MBF from_terms(int p, std::size_t n, std::vector<Term> terms);
  static MBF indicator(const Ball& b);
  static MBF term(const Cyclo& coef, const PAdicVector& freq, const Ball& b);

  [[nodiscard]] int prime() const { return p_; }
  [[nodiscard]] std::size_t dim() const { return n_; }
  [[nodiscard]] const std::vector<Term>& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  /// Common ball radius exponent; empty for zero.
  [[nodiscard]] std::optional<long> gamma() const;

  [[nodiscard]] Cyclo evaluate(const PAdicVector& x) const;
  /// Terms refined to radius target <= gamma().
  [[nodiscard]] std::vector<Term> split_to(long target) const;

  [[nodiscard]] MBF conjugate() const;
  /// x -> f(x - b).
  [[nodiscard]] MBF translate(const PAdicVector& b) const;
  /// x -> f(p^j x).
  [[nodiscard]] MBF dilate(long j) const;
  /// x -> chi_p(t.x) f(x).
  [[nodiscard]] MBF modulate(const PAdicVector& t) const;

  [[nodiscard]] std::string str() const;

  MBF operator-() const;
  friend MBF operator+(const MBF& f, const MBF& g);
  friend MBF operator-(const MBF& f, const MBF& g);
  friend MBF operator*(const Cyclo& c, const MBF& f);
  friend bool operator==(const MBF&, const MBF&) = default;

 private:
  // Terms already disjoint at one radius and coarsest; normalizes and sorts.
  static MBF from_shape(int p, std::size_t n, std::vector<Term> terms);

  int p_;
  std::size_t n_;
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const MBF& f);

MBF pointwise_mul(const MBF& f, const MBF& g);
/// (f (x) g)(x, y) = f(x) g(y) on Q_p^{n+m}.
MBF tensor(const MBF& f, const MBF& g);

Cyclo integral(const MBF& f);
/// Integral of f * conj(g).
Cyclo inner_product(const MBF& f, const MBF& g);

/// F[f](xi) = integral chi_p(xi.x) f(x) dx.
MBF fourier(const MBF& f);
/// F^{-1}[g](x) = integral chi_p(-x.xi) g(xi) dxi.
MBF inverse_fourier(const MBF& g);

bool is_lizorkin(const MBF& f);

struct LocalConstancy {
  long l;  // constant on cosets of B_l^n
  long N;  // supported in B_N^n
  friend bool operator==(const LocalConstancy&, const LocalConstancy&) = default;
};

/// Largest l and smallest N with f in D^l_N. Throws for the zero function.
LocalConstancy local_constancy_params(const MBF& f);

}  // namespace qpw
