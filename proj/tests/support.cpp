#include "support.hpp"

#include <stdexcept>

namespace qpw::testing {

namespace {

Cyclo chi(const PAdicVector& s, const PAdicVector& x) { return Cyclo::root_of_unity(character(s, x)); }

long pow_long(int p, long k) {
  long r = 1;
  for (long i = 0; i < k; ++i) r *= p;
  return r;
}

}  // namespace

std::vector<PAdicVector> grid(int p, std::size_t n, long N, long l) {
  std::vector<PAdicVector> out;
  for (const auto& b : Ball(PAdicVector(p, n), N).split(l)) out.push_back(b.center());
  return out;
}

Cyclo raw_evaluate(const std::vector<Term>& terms, const PAdicVector& x) {
  Cyclo s;
  for (const auto& t : terms) {
    if ((x - t.ball.center()).valuation() < -t.ball.gamma()) continue;
    s += t.coef * chi(t.freq, x);
  }
  return s;
}

Cyclo refinement_integral(const Term& t) {
  if (t.freq.valuation() >= t.ball.gamma()) {
    return t.coef * chi(t.freq, t.ball.center()) * Cyclo(t.ball.measure());
  }
  Cyclo s;
  for (const auto& b : t.ball.split(t.ball.gamma() - 1)) s += refinement_integral(Term{t.coef, t.freq, b});
  return s;
}

Cyclo riemann_fourier(const MBF& f, const PAdicVector& xi) {
  if (f.is_zero()) return Cyclo();
  const auto lc = local_constancy_params(f);
  const long r = std::min(lc.l, xi.valuation());
  const Cyclo cell(rpow(f.prime(), r * static_cast<long>(f.dim())));
  Cyclo s;
  for (const auto& x : grid(f.prime(), f.dim(), lc.N, r)) {
    const Cyclo v = raw_evaluate(f.terms(), x);
    if (!v.is_zero()) s += v * chi(xi, x);
  }
  return s * cell;
}

Cyclo riemann_inner(const MBF& f, const MBF& g) {
  if (f.is_zero() || g.is_zero()) return Cyclo();
  const auto a = local_constancy_params(f);
  const auto b = local_constancy_params(g);
  const long l = std::min(a.l, b.l);
  const long N = std::max(a.N, b.N);
  Cyclo s;
  for (const auto& x : grid(f.prime(), f.dim(), N, l)) {
    const Cyclo u = raw_evaluate(f.terms(), x);
    if (u.is_zero()) continue;
    s += u * raw_evaluate(g.terms(), x).conj();
  }
  return s * Cyclo(rpow(f.prime(), l * static_cast<long>(f.dim())));
}

bool pointwise_equal(const std::vector<Term>& a, const std::vector<Term>& b, int p, std::size_t n, long N,
                     long l) {
  for (const auto& x : grid(p, n, N, l)) {
    if (raw_evaluate(a, x) != raw_evaluate(b, x)) return false;
  }
  return true;
}

PAdicPoint Rng::point(int p, long k, long extra) {
  const long m = uniform(0, pow_long(p, k + extra) - 1);
  return PAdicPoint(p, Integer(m), -k);
}

PAdicVector Rng::vector(int p, std::size_t n, long k, long extra) {
  std::vector<PAdicPoint> c;
  for (std::size_t i = 0; i < n; ++i) c.push_back(point(p, k, extra));
  return PAdicVector(std::move(c));
}

Cyclo Rng::scalar(bool cyclotomic) {
  while (true) {
    Cyclo c;
    const long count = cyclotomic ? uniform(1, 2) : 1;
    for (long i = 0; i < count; ++i) {
      const Rational q(uniform(-3, 3), uniform(1, 3));
      c += cyclotomic ? Cyclo(q) * Cyclo::zeta(2, 3, uniform(0, 7)) : Cyclo(q);
    }
    if (!c.is_zero()) return c;
  }
}

Angle Rng::angle(int p, long m) { return Angle(point(p, m)); }

std::vector<Term> Rng::terms(int p, std::size_t n, std::size_t count, long l, long N, bool cyclotomic) {
  if (l > N) throw std::invalid_argument("l > N");
  std::vector<Term> out;
  for (std::size_t i = 0; i < count; ++i) {
    const long gamma = uniform(l, N);
    std::vector<PAdicPoint> c, s;
    for (std::size_t k = 0; k < n; ++k) {
      c.emplace_back(p, Integer(uniform(0, pow_long(p, N - gamma + 1) - 1)), -N);
      s.emplace_back(p, Integer(uniform(0, pow_long(p, gamma - l + 1) - 1)), l);
    }
    Cyclo coef = scalar(cyclotomic);
    if (p != 2 && cyclotomic) coef = scalar(false) + Cyclo(scalar(false)) * Cyclo::zeta(p, 1, uniform(0, p - 1));
    if (coef.is_zero()) coef = Cyclo(1);
    out.push_back(Term{coef, PAdicVector(std::move(s)), Ball(PAdicVector(std::move(c)), gamma)});
  }
  return out;
}

}  // namespace qpw::testing
