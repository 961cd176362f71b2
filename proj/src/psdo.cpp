#include "qpw/psdo.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace qpw {

namespace {

// Refinement below the starting radius beyond this depth means the
// certificate never covers the ball.
constexpr long kMaxRefinement = 64;

PAdicVector unit_offset(const Ball& b) {
  std::vector<PAdicPoint> c(b.dim(), PAdicPoint(b.prime()));
  c[0] = PAdicPoint(b.prime(), 1, -b.gamma());
  return b.center() + PAdicVector(std::move(c));
}

PAdicVector eigen_point(const std::vector<bool>& e, long j) {
  std::vector<PAdicPoint> c;
  for (bool b : e) c.push_back(b ? PAdicPoint(2, -1, j - 1) : PAdicPoint(2));
  return PAdicVector(std::move(c));
}

void check_symbol(const Symbol& a, int p, std::size_t n) {
  if (a.prime() != p || a.dim() != n) throw std::invalid_argument("symbol and function live on different spaces");
}

}  // namespace

Symbol Symbol::fractional(int p, std::size_t n, const Exponent& alpha) {
  auto k_of = [](const PAdicVector& xi) {
    if (xi.is_zero()) throw std::domain_error("fractional symbol evaluated at the origin");
    return -xi.valuation();
  };
  Eval eval = [p, alpha, k_of](const PAdicVector& xi) {
    return PowerScalar(p, Cyclo(1), Rational(k_of(xi)) * alpha);
  };
  Radius radius = [k_of](const PAdicVector& xi) { return k_of(xi) - 1; };
  return Symbol(p, n, std::move(eval), std::move(radius), "fractional:alpha=" + alpha.str());
}

Symbol Symbol::constant(int p, std::size_t n, const PowerScalar& c) {
  return Symbol(
      p, n, [c](const PAdicVector&) { return c; }, [](const PAdicVector&) { return kUnboundedRadius; },
      "constant:" + c.str());
}

Symbol Symbol::locally_constant(int p, std::size_t n, Eval eval, Radius radius, std::string name) {
  return Symbol(p, n, std::move(eval), std::move(radius), std::move(name));
}

Symbol Symbol::two_valued_test(const std::vector<bool>& e, long j) {
  const Ball inner(eigen_point(e, j), -j - 1);
  Eval eval = [inner](const PAdicVector& xi) { return PowerScalar(2, Cyclo(inner.contains(xi) ? 2 : 1)); };
  Radius radius = [inner](const PAdicVector& xi) {
    if (inner.contains(xi)) return inner.gamma();
    return -(xi - inner.center()).valuation() - 1;
  };
  return Symbol(2, e.size(), std::move(eval), std::move(radius), "two-valued-test");
}

std::optional<PowerScalar> Symbol::value_on(const Ball& b) const {
  if (b.gamma() > radius(b.center())) return std::nullopt;
  const PowerScalar v = value(b.center());
  if (value(unit_offset(b)) != v) throw std::domain_error("symbol certificate contradicted on " + name_);
  return v;
}

Symbol compose(const Symbol& a, const Symbol& b) {
  if (a.p_ != b.p_ || a.n_ != b.n_) throw std::invalid_argument("symbols on different spaces");
  Symbol::Eval eval = [ea = a.eval_, eb = b.eval_](const PAdicVector& xi) { return ea(xi) * eb(xi); };
  Symbol::Radius radius = [ra = a.radius_, rb = b.radius_](const PAdicVector& xi) {
    return std::min(ra(xi), rb(xi));
  };
  return Symbol(a.p_, a.n_, std::move(eval), std::move(radius), a.name_ + "*" + b.name_);
}

PowerMBF apply(const Symbol& a, const MBF& f) {
  check_symbol(a, f.prime(), f.dim());
  if (!is_lizorkin(f)) throw std::invalid_argument("operators act on Lizorkin functions (zero mean) only");
  const int p = f.prime();
  PowerMBF out(p, f.dim());
  if (f.is_zero()) return out;
  const MBF image = fourier(f);
  const long floor = *image.gamma() - kMaxRefinement;
  const PAdicVector origin(p, f.dim());
  std::map<Exponent, std::vector<Term>> graded;
  std::vector<Term> stack(image.terms().rbegin(), image.terms().rend());
  while (!stack.empty()) {
    const Term t = std::move(stack.back());
    stack.pop_back();
    if (t.ball.contains(origin)) throw std::domain_error("Fourier image meets the origin");
    if (auto v = a.value_on(t.ball)) {
      const PowerScalar scaled = PowerScalar(p, t.coef) * *v;
      if (!scaled.is_zero()) graded[scaled.w()].push_back(Term{scaled.c(), t.freq, t.ball});
      continue;
    }
    if (t.ball.gamma() <= floor) throw std::domain_error("symbol certificate never covers the Fourier image");
    auto pieces = split_term(t, t.ball.gamma() - 1);
    stack.insert(stack.end(), pieces.rbegin(), pieces.rend());
  }
  for (auto& [w, terms] : graded) {
    out = out + PowerMBF(PowerScalar::power(p, w), inverse_fourier(MBF::from_terms(p, f.dim(), std::move(terms))));
  }
  return out;
}

PowerMBF apply(const Symbol& a, const PowerMBF& f) {
  PowerMBF out(f.prime(), f.dim());
  for (const auto& [w, g] : f.parts()) out = out + PowerScalar::power(f.prime(), w) * apply(a, g);
  return out;
}

Ball wavelet_frequency_ball(const std::vector<bool>& e, long j) { return Ball(eigen_point(e, j), -j); }

bool eigen_criterion(const Symbol& a, const std::vector<bool>& e, long j) {
  if (a.prime() != 2 || a.dim() != e.size()) throw std::invalid_argument("criterion is stated for p = 2 and dim |e|");
  const PowerScalar ref = a.value(eigen_point(e, j));
  const Ball top = wavelet_frequency_ball(e, j);
  const long floor = top.gamma() - kMaxRefinement;
  std::vector<Ball> stack{top};
  while (!stack.empty()) {
    const Ball b = stack.back();
    stack.pop_back();
    if (auto v = a.value_on(b)) {
      if (*v != ref) return false;
      continue;
    }
    if (b.gamma() <= floor) throw std::domain_error("symbol certificate never covers the ball");
    for (auto& c : b.split(b.gamma() - 1)) stack.push_back(std::move(c));
  }
  return true;
}

PowerScalar eigenvalue(const Symbol& a, const std::vector<bool>& e, long j) {
  if (!eigen_criterion(a, e, j)) throw std::domain_error("symbol is not constant on the wavelet frequency ball");
  return a.value(eigen_point(e, j));
}

EigenReport eigen_report(const Symbol& a, const WaveletIndex& idx) {
  idx.validate();
  check_symbol(a, idx.p, idx.n);
  EigenReport r;
  r.value = a.value(eigen_point(idx.e, idx.j));
  r.criterion = eigen_criterion(a, idx.e, idx.j);
  const MBF psi = tensor_wavelet(idx);
  r.direct = apply(a, psi) == PowerMBF(r.value, psi);
  return r;
}

bool verify_eigenfunction(const Symbol& a, const WaveletIndex& idx) { return eigen_report(a, idx).direct; }

bool kozyrev_spectrum_check(int p, int k, long j, const PAdicPoint& a, const Exponent& alpha) {
  const PowerMBF theta = kozyrev(p, k, j, a);
  const Symbol d = Symbol::fractional(p, 1, alpha);
  const PowerScalar lambda = PowerScalar::power(p, Rational(1 - j) * alpha);
  return apply(d, theta) == lambda * theta;
}

}  // namespace qpw
