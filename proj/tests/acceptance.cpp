// Acceptance run: one PASS/FAIL line per criterion. Every comparison is exact
// except the float gamma path, which uses kApproxTolerance.
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "qpw/mbf.hpp"
#include "qpw/mra.hpp"
#include "qpw/psdo.hpp"
#include "qpw/wavelets.hpp"
#include "support.hpp"

using namespace qpw;
using namespace qpw::testing;

namespace {

constexpr std::uint64_t kSeed = 20240601;
constexpr int kRandomGammas = 21;
constexpr int kPerturbedGammas = 6;
constexpr int kDecompositionSamples = 50;
constexpr int kFourierSamples = 100;
constexpr double kFloatTolerance = kApproxTolerance;

struct Check {
  bool ok = true;
  std::ostringstream note;
  void expect(bool cond, const std::string& what) {
    if (!cond && ok) note << "first failure: " << what << "; ";
    ok = ok && cond;
  }
};

Exponent ex(long re, long im = 0) { return Exponent{Rational(re), Rational(im)}; }

GammaVector random_gamma(Rng& rng, int s) {
  std::vector<Angle> a;
  for (int r = 0; r < (1 << s); ++r) a.push_back(rng.angle(2, rng.uniform(0, 4)));
  return GammaVector::from_angles(s, a);
}

std::vector<MBF> shifts(const MBF& f, long gamma_max) {
  std::vector<MBF> out;
  for (const auto& a : enumerate_Ip_1d(2, gamma_max)) out.push_back(f.translate(PAdicVector::scalar(a)));
  return out;
}

MBF lizorkin(Rng& rng, int p, std::size_t n) {
  while (true) {
    MBF f = rng.mbf(p, n, 3, -1, 1);
    f = f - (integral(f) * Cyclo(rpow(p, -static_cast<long>(n)))) * MBF::indicator(Ball(PAdicVector(p, n), 1));
    if (!f.is_zero()) return f;
  }
}

// x -> f(-x), term by term.
MBF reflect(const MBF& f) {
  std::vector<Term> out;
  for (const auto& t : f.terms()) out.push_back(Term{t.coef, -t.freq, Ball(-t.ball.center(), t.ball.gamma())});
  return MBF::from_terms(f.prime(), f.dim(), out);
}

WaveletIndex index_2d(std::vector<bool> e, int s, const std::vector<std::optional<GammaVector>>& g, long j,
                      PAdicVector a) {
  WaveletIndex idx;
  idx.n = 2;
  idx.j = j;
  idx.a = std::move(a);
  idx.s.assign(2, 0);
  idx.gamma.assign(2, std::nullopt);
  for (std::size_t v = 0; v < 2; ++v) {
    if (e[v] && s > 0) {
      idx.s[v] = s;
      idx.gamma[v] = g[v];
    }
  }
  idx.e = std::move(e);
  return idx;
}

void refinement(Check& c) {
  for (int p : {2, 3, 5}) {
    c.expect(check_refinement(p), "p = " + std::to_string(p));
    c.expect(phi(p) == refinement_rhs(p), "rhs p = " + std::to_string(p));
    c.expect(phi(p) != refinement_rhs(p, 0), "dropped term still equal, p = " + std::to_string(p));
  }
  c.note << "p in {2,3,5}";
}

void haar_gram(Check& c) {
  std::vector<MBF> phis;
  for (const auto& a : enumerate_Ip(2, 4, 1)) phis.push_back(phi(2).translate(a));
  c.expect(is_identity(gram_matrix(phis)), "phi shifts");
  std::vector<MBF> psis, coarse;
  for (long j = -2; j <= 2; ++j) {
    for (const auto& a : enumerate_Ip(2, 4, 1)) {
      const MBF w = Cyclo::half_power(2, -j) * psi0().translate(a).dilate(j);
      psis.push_back(w);
      if (j <= 0) coarse.push_back(w);
    }
  }
  c.expect(is_identity(gram_matrix(psis)), "psi0 family");
  c.expect(is_zero(cross_gram(shifts(psi0(), 4), phis)), "psi0 shifts against phi shifts");
  c.expect(is_zero(cross_gram(coarse, phis)), "levels j <= 0 against phi shifts");
  c.note << phis.size() << " phi shifts, " << psis.size() << " psi0 elements";
}

void unit_gamma(Check& c, Rng& rng) {
  int forward = 0;
  for (int t = 0; t < kRandomGammas; ++t) {
    const int s = 1 + t % 3;
    const GammaVector g = random_gamma(rng, s);
    const auto alpha = alpha_coeffs(g);
    c.expect(is_unitary(shift_matrix_D(alpha)), "D unitary for a unit gamma");
    c.expect(is_identity(gram_matrix(shifts(psi_from_alpha(alpha), s + 2))), "shift Gram of psi^(s)");
    std::vector<std::complex<double>> gz;
    for (const auto& z : g.gammas()) gz.push_back(z.to_complex());
    c.expect(is_unitary_approx(alpha_coeffs_approx(s, gz), kFloatTolerance), "float path");
    ++forward;
  }
  int converse = 0;
  for (int t = 0; t < kPerturbedGammas; ++t) {
    const int s = 1 + t % 3;
    auto bad = random_gamma(rng, s).gammas();
    const long r = rng.uniform(0, (1L << s) - 1);
    const Rational factors[] = {Rational(2), Rational(1, 2), Rational(3)};
    bad[r] *= Cyclo(factors[rng.uniform(0, 2)]);
    const auto alpha = alpha_coeffs_unchecked(s, bad);
    c.expect(!is_unitary(shift_matrix_D(alpha)), "perturbed D still unitary");
    c.expect(!is_identity(gram_matrix(shifts(psi_from_alpha(alpha), s + 2))), "perturbed Gram still identity");
    std::vector<std::complex<double>> gz;
    for (const auto& z : bad) gz.push_back(z.to_complex());
    c.expect(!is_unitary_approx(alpha_coeffs_approx(s, gz), kFloatTolerance), "perturbed float path");
    ++converse;
  }
  const GammaVector z8(1, {Cyclo::zeta(2, 3, -1), Cyclo::zeta(2, 3, 1)});
  const Cyclo inv_sqrt2 = Cyclo(Rational(1, 2)) * Cyclo::sqrt2();
  c.expect(alpha_coeffs(z8) == std::vector<Cyclo>{inv_sqrt2, inv_sqrt2}, "gamma = (zeta8^-1, zeta8)");
  c.note << forward << " unit gammas, " << converse << " perturbed";
}

void eigensystem(Check& c) {
  for (int s = 1; s <= 3; ++s) {
    const auto A = matrix_A(s);
    const auto es = matrix_A_eigensystem(s);
    const std::size_t N = std::size_t{1} << s;
    c.expect(es.values.size() == N && es.vectors.size() == N, "size s = " + std::to_string(s));
    for (std::size_t r = 0; r < N; ++r) {
      std::vector<Cyclo> lv;
      for (const auto& x : es.vectors[r]) lv.push_back(es.values[r] * x);
      c.expect(matvec(A, es.vectors[r]) == lv, "A v = lambda v");
      Cyclo norm(0);
      for (const auto& x : es.vectors[r]) norm += x * x.conj();
      c.expect(norm == Cyclo(1), "unit eigenvector");
      for (std::size_t q = 0; q < r; ++q) c.expect(es.values[q] != es.values[r], "distinct eigenvalues");
    }
  }
  c.note << "s = 1..3";
}

void tensor_basis(Check& c, Rng& rng) {
  std::size_t total = 0;
  for (int s : {0, 1}) {
    BasisConfig cfg;
    if (s == 1) {
      cfg.s = {1, 1};
      cfg.gamma = {random_gamma(rng, 1), random_gamma(rng, 1)};
    }
    std::vector<MBF> fs;
    for (const auto& idx : enumerate_basis(2, 2, {-1, 0, 1}, 2, cfg)) fs.push_back(tensor_wavelet(idx));
    c.expect(is_identity(gram_matrix(fs)), "s = " + std::to_string(s));
    total = fs.size();
  }
  c.note << total << " functions per Gram, s = (0,0) and (1,1)";
}

void decomposition(Check& c, Rng& rng) {
  int done = 0;
  for (int t = 0; t < kDecompositionSamples; ++t) {
    const MBF f = rng.mbf(2, 1, static_cast<std::size_t>(rng.uniform(1, 4)), -3, 3);
    const int s = static_cast<int>(rng.uniform(1, 3));
    for (const MBF& psi : {psi0(), psi_s(random_gamma(rng, s))}) {
      const Decomposition d = decompose(f, -3, psi);
      c.expect(reconstruct(d, psi) == f, "round trip");
      c.expect(coefficient_energy(d) == inner_product(f, f), "Parseval");
    }
    ++done;
  }
  c.note << done << " functions in D^{-3}_3, psi0 and random psi^(s)";
}

void eigenfunctions(Check& c, Rng& rng) {
  const std::vector<Exponent> alphas{ex(0), ex(1), ex(2), ex(-1), ex(1, 1)};
  const std::vector<std::vector<bool>> es{{true, false}, {false, true}, {true, true}};
  const std::vector<std::optional<GammaVector>> g{random_gamma(rng, 1), random_gamma(rng, 1)};
  int checked = 0;
  for (const auto& alpha : alphas) {
    const Symbol d = Symbol::fractional(2, 2, alpha);
    for (const auto& e : es) {
      for (long j = -1; j <= 1; ++j) {
        const PowerScalar expected = PowerScalar::power(2, Rational(1 - j) * alpha);
        c.expect(eigen_criterion(d, e, j), "criterion");
        c.expect(eigenvalue(d, e, j) == expected, "eigenvalue 2^{alpha(1-j)}");
        for (int s : {0, 1}) {
          for (const auto& a : enumerate_Ip(2, 1, 2)) {
            const auto idx = index_2d(e, s, g, j, a);
            const MBF w = tensor_wavelet(idx);
            c.expect(apply(d, w) == expected * PowerMBF(w), "direct D^alpha Psi");
            c.expect(verify_eigenfunction(d, idx), "verify_eigenfunction");
            ++checked;
          }
        }
      }
    }
  }
  int negatives = 0;
  for (const auto& e : es) {
    for (long j = -1; j <= 1; ++j) {
      const auto r = eigen_report(Symbol::two_valued_test(e, j), index_2d(e, 0, g, j, PAdicVector(2, 2)));
      c.expect(!r.criterion && !r.direct, "two-valued symbol accepted");
      ++negatives;
    }
  }
  c.note << checked << " eigen pairs, " << negatives << " two-valued rejections";
}

void kozyrev_family(Check& c) {
  std::vector<PowerMBF> fs;
  for (int k : {1, 2}) {
    for (long j = -1; j <= 1; ++j) {
      for (const auto& a : enumerate_Ip_1d(3, 2)) {
        fs.push_back(kozyrev(3, k, j, a));
        c.expect(kozyrev_spectrum_check(3, k, j, a, ex(1)), "D^1 theta");
        c.expect(apply(Symbol::fractional(3, 1, ex(1)), fs.back()) ==
                     PowerScalar::power(3, ex(1 - j)) * fs.back(),
                 "direct D^1 theta");
      }
    }
  }
  c.expect(is_identity(gram_matrix(fs)), "Gram");
  c.note << fs.size() << " functions, p = 3";
}

void fourier_engine(Check& c, Rng& rng) {
  int done = 0;
  for (int t = 0; t < kFourierSamples; ++t) {
    const int p = t % 2 == 0 ? 2 : 3;
    const std::size_t n = t % 4 < 2 ? 1 : 2;
    const long l = n == 1 ? -2 : -1;
    const auto raw = rng.terms(p, n, 4, l, 1);
    const MBF f = MBF::from_terms(p, n, raw);
    const MBF g = rng.mbf(p, n, 3, l + 1, 1);
    const MBF ff = fourier(f);
    c.expect(inverse_fourier(ff) == f, "inverse after forward");
    c.expect(fourier(ff) == reflect(f), "F^2 f = f(-x)");
    c.expect(inner_product(f, g) == inner_product(ff, fourier(g)), "Parseval");
    const long j = rng.uniform(-2, 2);
    const PAdicVector shift = -rng.vector(p, n, 2, 1).shifted(-j);
    c.expect(fourier(f.dilate(j).translate(shift)) ==
                 Cyclo(rpow(p, j * static_cast<long>(n))) * ff.dilate(-j).modulate(shift),
             "affine rule");
    if (!f.is_zero()) {
      const auto a = local_constancy_params(f);
      c.expect(local_constancy_params(ff) == LocalConstancy{-a.N, -a.l}, "support duality");
    }
    Cyclo sum(0);
    for (const auto& term : raw) {
      const Cyclo oracle = refinement_integral(term);
      c.expect(term_integral(term) == oracle, "term integral");
      sum += oracle;
    }
    c.expect(integral(f) == sum, "integral");
    if (t % 10 == 0 && !ff.is_zero()) {
      const PAdicVector xi = ff.terms().front().ball.center();
      c.expect(ff.evaluate(xi) == riemann_fourier(f, xi), "Riemann sum");
    }
    ++done;
  }
  c.note << done << " functions";
}

void group_law(Check& c, Rng& rng) {
  const Exponent a{Rational(1, 2), Rational(1)}, b{Rational(-3), Rational(1, 4)};
  const Symbol da = Symbol::fractional(2, 1, a), db = Symbol::fractional(2, 1, b);
  const Symbol dab = Symbol::fractional(2, 1, a + b), dneg = Symbol::fractional(2, 1, -a);
  for (long j = -2; j <= 2; ++j) {
    c.expect(eigenvalue(compose(da, db), {true}, j) == eigenvalue(dab, {true}, j), "symbol product");
  }
  int done = 0;
  for (int t = 0; t < 10; ++t) {
    const MBF f = lizorkin(rng, 2, 1);
    const PowerMBF af = apply(da, f);
    c.expect(apply(db, af) == apply(dab, f), "D^b D^a = D^{a+b}");
    c.expect(apply(dneg, af) == PowerMBF(f), "D^{-a} D^a = I");
    ++done;
  }
  // wavelet battery in n = 2
  const Symbol a2 = Symbol::fractional(2, 2, a), b2 = Symbol::fractional(2, 2, b);
  const Symbol a2neg = Symbol::fractional(2, 2, -a);
  const std::vector<std::optional<GammaVector>> g{random_gamma(rng, 1), random_gamma(rng, 1)};
  int battery = 0;
  for (const std::vector<bool>& e : {std::vector<bool>{true, false}, {false, true}, {true, true}}) {
    for (long j = -1; j <= 1; ++j) {
      const PowerScalar la = PowerScalar::power(2, Rational(1 - j) * a);
      const PowerScalar lb = PowerScalar::power(2, Rational(1 - j) * b);
      c.expect(la * lb == PowerScalar::power(2, Rational(1 - j) * (a + b)), "eigenvalue product");
      for (int s : {0, 1}) {
        const MBF w = tensor_wavelet(index_2d(e, s, g, j, rng.vector(2, 2, 1)));
        c.expect(apply(b2, apply(a2, w)) == (la * lb) * PowerMBF(w), "D^b D^a Psi");
        c.expect(apply(a2neg, apply(a2, w)) == PowerMBF(w), "D^{-a} D^a Psi");
        ++battery;
      }
    }
  }
  const MBF f2 = lizorkin(rng, 2, 2);
  const Symbol d2 = Symbol::fractional(2, 2, ex(2)), d2neg = Symbol::fractional(2, 2, ex(-2));
  c.expect(apply(d2neg, apply(d2, f2)) == PowerMBF(f2), "n = 2 inverse");
  c.note << battery << " wavelets, " << done + 1 << " Lizorkin functions";
}

}  // namespace

int main() {
  Rng rng(kSeed);
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
      {"refinement equation", refinement},
      {"Haar orthonormality", haar_gram},
      {"unit gamma <=> orthonormal psi^(s)", [&](Check& c) { unit_gamma(c, rng); }},
      {"matrix A eigensystem", eigensystem},
      {"tensor basis orthonormality n = 2", [&](Check& c) { tensor_basis(c, rng); }},
      {"decomposition round trip and Parseval", [&](Check& c) { decomposition(c, rng); }},
      {"wavelets are D^alpha eigenfunctions", [&](Check& c) { eigenfunctions(c, rng); }},
      {"Kozyrev p = 3 orthonormality and spectrum", kozyrev_family},
      {"Fourier engine", [&](Check& c) { fourier_engine(c, rng); }},
      {"fractional operator group law", [&](Check& c) { group_law(c, rng); }},
  };
  int failed = 0, k = 0;
  for (const auto& [name, run] : criteria) {
    ++k;
    Check c;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      run(c);
    } catch (const std::exception& ex) {
      c.ok = false;
      c.note << " exception: " << ex.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s C%d %s (%s; %.1fs)\n", c.ok ? "PASS" : "FAIL", k, name.c_str(), c.note.str().c_str(), secs);
    std::fflush(stdout);
    failed += c.ok ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
