// Shared helpers for the test binaries: seeded generators and oracles that
// avoid the library's closed forms.
#pragma once

#include <random>
#include <string>
#include <vector>

#include "qpw/cyclo.hpp"
#include "qpw/mbf.hpp"
#include "qpw/padic.hpp"

namespace qpw::testing {

inline PAdicPoint pt(int p, const std::string& s) { return PAdicPoint::parse(p, s); }
inline PAdicVector vec(int p, std::vector<std::string> s) { return PAdicVector::parse(p, s); }
inline PAdicVector v1(int p, const std::string& s) { return PAdicVector::scalar(pt(p, s)); }

/// All points of the ball B_N^n split at radius l (one representative per coset).
std::vector<PAdicVector> grid(int p, std::size_t n, long N, long l);

/// f evaluated term by term on the raw term list, no canonical form involved.
Cyclo raw_evaluate(const std::vector<Term>& terms, const PAdicVector& x);

/// Integral of one term by splitting its ball until the character is constant
/// on every part, then summing value times measure.
Cyclo refinement_integral(const Term& t);

/// F[f](xi) as an exact Riemann sum on a grid fine enough that chi(xi.x) and f
/// are constant on each cell.
Cyclo riemann_fourier(const MBF& f, const PAdicVector& xi);

/// Integral of f conj(g) as a Riemann sum over a common grid.
Cyclo riemann_inner(const MBF& f, const MBF& g);

/// Pointwise equality of two term lists on every coset of the given grid.
bool pointwise_equal(const std::vector<Term>& a, const std::vector<Term>& b, int p, std::size_t n, long N,
                     long l);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }
  bool coin() { return uniform(0, 1) == 1; }

  /// A point m / p^k with 0 <= m < p^{k + extra}.
  PAdicPoint point(int p, long k, long extra = 0);
  PAdicVector vector(int p, std::size_t n, long k, long extra = 0);
  /// Nonzero small rational, or a small combination of 8th roots of unity.
  Cyclo scalar(bool cyclotomic);
  /// Random exact angle with denominator dividing p^m.
  Angle angle(int p, long m);
  /// Overlapping raw terms with balls inside B_N, radii in [l, N].
  std::vector<Term> terms(int p, std::size_t n, std::size_t count, long l, long N, bool cyclotomic = true);
  MBF mbf(int p, std::size_t n, std::size_t count, long l, long N, bool cyclotomic = true) {
    return MBF::from_terms(p, n, terms(p, n, count, l, N, cyclotomic));
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace qpw::testing
