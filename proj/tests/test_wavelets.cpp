#include <doctest.h>

#include "qpw/mra.hpp"
#include "qpw/wavelets.hpp"
#include "support.hpp"

using namespace qpw;
using namespace qpw::testing;

namespace {

Angle turn(const std::string& q) { return Angle(pt(2, q)); }

GammaVector random_gamma(Rng& rng, int s) {
  std::vector<Angle> a;
  for (int r = 0; r < (1 << s); ++r) a.push_back(rng.angle(2, rng.uniform(0, 4)));
  return GammaVector::from_angles(s, a);
}

std::vector<MBF> shifts(const MBF& psi, long gamma_max) {
  std::vector<MBF> out;
  for (const auto& a : enumerate_Ip_1d(2, gamma_max)) out.push_back(psi.translate(PAdicVector::scalar(a)));
  return out;
}

Cyclo energy(const std::vector<Cyclo>& v) {
  Cyclo s;
  for (const auto& c : v) s += c.abs2();
  return s;
}

}  // namespace

TEST_CASE("haar generators") {
  const MBF f = phi(2);
  CHECK(f == MBF::indicator(Ball(PAdicVector(2, 1), 0)));
  CHECK(f.evaluate(v1(2, "1")) == Cyclo(1));
  CHECK(integral(phi(3)) == Cyclo(1));
  const MBF h = psi0();
  CHECK(h.evaluate(v1(2, "0")) == Cyclo(1));
  CHECK(h.evaluate(v1(2, "1")) == Cyclo(-1));
  CHECK(is_lizorkin(h));
  // phi(x/2) - phi(x/2 - 1/2)
  const MBF half = phi(2).dilate(-1);
  CHECK(h == half - half.translate(v1(2, "1")));
  CHECK(h.translate(v1(2, "1")) == -h);
  CHECK(h.translate(v1(2, "-1")) == -h);
  CHECK(f.translate(v1(2, "1")) == f);
  CHECK(f.translate(v1(2, "-1")) == f);
}

TEST_CASE("kozyrev wavelets") {
  CHECK(kozyrev(2, 1, 0, pt(2, "0")).as_mbf() == psi0());
  CHECK(inner_product(kozyrev(3, 1, 0, pt(3, "0")), kozyrev(3, 2, 0, pt(3, "0"))).is_zero());
  CHECK(riemann_inner(kozyrev_mother(3, 1), kozyrev_mother(3, 2)).is_zero());
  for (int k : {1, 2}) {
    for (long j : {-1L, 0L, 1L, 2L}) {
      for (const auto& a : enumerate_Ip_1d(3, 1)) {
        const PowerMBF t = kozyrev(3, k, j, a);
        for (const auto& [w, g] : t.parts()) CHECK(integral(g).is_zero());
        CHECK(inner_product(t, t).as_cyclo() == Cyclo(1));
      }
    }
  }
  CHECK_THROWS_AS(kozyrev(3, 0, 0, pt(3, "0")), std::invalid_argument);
  CHECK_THROWS_AS(kozyrev(3, 3, 0, pt(3, "0")), std::invalid_argument);
}

TEST_CASE("generalized kozyrev") {
  CHECK(generalized_kozyrev(2, {1}, 0, pt(2, "0")).as_mbf() == psi0());
  const auto g = generalized_kozyrev(2, {1, 1}, 0, pt(2, "0")).as_mbf();
  REQUIRE(g.has_value());
  REQUIRE(g->terms().size() == 1);
  CHECK(g->terms()[0] == Term{Cyclo(1), v1(2, "3/4"), Ball(v1(2, "0"), 0)});
  for (long j : {-2L, -1L, 0L, 3L}) {
    for (const auto& a : enumerate_Ip_1d(3, 2)) {
      const PowerMBF t = generalized_kozyrev(3, {2, 1}, j, a);
      CHECK(inner_product(t, t).as_cyclo() == Cyclo(1));
    }
  }
  const auto f = *generalized_kozyrev(5, {3, 4}, 0, pt(5, "0")).as_mbf();
  CHECK(riemann_inner(f, f) == Cyclo(1));
  CHECK_THROWS_AS(generalized_kozyrev(3, {0, 1}, 0, pt(3, "0")), std::invalid_argument);
}

TEST_CASE("kozyrev refinable relation") {
  auto [l2, r2] = kozyrev_refinable_relation(2, 1);
  CHECK(l2 == psi0());
  CHECK(r2 == psi0());
  for (int p : {3, 5}) {
    for (int k = 1; k < p; ++k) {
      auto [l, r] = kozyrev_refinable_relation(p, k);
      CHECK(l == r);
      CHECK(pointwise_equal(l.terms(), r.terms(), p, 1, 1, -2));
    }
  }
}

TEST_CASE("alpha coefficients") {
  CHECK(alpha_coeffs(GammaVector(1, {Cyclo(1), Cyclo(1)})) == std::vector<Cyclo>{Cyclo(1), Cyclo(0)});
  const Cyclo r = Cyclo::half_power(2, -1);
  const GammaVector g(1, {Cyclo::zeta(2, 3, -1), Cyclo::zeta(2, 3, 1)});
  CHECK(alpha_coeffs(g) == std::vector<Cyclo>{r, r});
  // the second wavelet written through phi(x/2 - .)
  const MBF half = phi(2).dilate(-1);
  const MBF psi1 = r * (half + half.translate(v1(2, "1/2")) - half.translate(v1(2, "1")) -
                        half.translate(v1(2, "3/2")));
  CHECK(psi_s(g) == psi1);
  CHECK(psi_s(GammaVector(1, {Cyclo(1), Cyclo(1)})) == psi0());
  CHECK_THROWS_AS(GammaVector(1, {Cyclo(2), Cyclo(1)}), std::invalid_argument);
  CHECK_THROWS_AS(GammaVector(2, {Cyclo(1), Cyclo(1)}), std::invalid_argument);

  Rng rng(11);
  for (int s = 1; s <= 3; ++s) {
    for (int trial = 0; trial < 4; ++trial) {
      const GammaVector gv = random_gamma(rng, s);
      const auto alpha = alpha_coeffs(gv);
      CHECK(energy(alpha) == Cyclo(1));
      // float path on the same angles
      std::vector<std::complex<double>> gz;
      for (const auto& c : gv.gammas()) gz.push_back(c.to_complex());
      const auto approx = alpha_coeffs_approx(s, gz);
      for (std::size_t k = 0; k < alpha.size(); ++k) CHECK(std::abs(approx[k] - alpha[k].to_complex()) < 1e-12);
      CHECK(is_unitary_approx(approx));
      const MBF psi = psi_s(gv);
      CHECK(riemann_inner(psi, psi) == Cyclo(1));
    }
  }
}

TEST_CASE("shift matrix") {
  CHECK(is_identity(shift_matrix_D({Cyclo(1), Cyclo(0), Cyclo(0), Cyclo(0)})));
  CHECK(is_unitary(shift_matrix_D({Cyclo(1), Cyclo(0)})));
  const auto d = shift_matrix_D({Cyclo(1), Cyclo(1)});
  CHECK_FALSE(is_unitary(d));
  const auto dd = matmul(d, adjoint(d));
  CHECK(dd == CycloMatrix{{Cyclo(2), Cyclo(0)}, {Cyclo(0), Cyclo(2)}});
  CHECK_FALSE(is_unitary_approx({1.0, 1.0}));

  Rng rng(5);
  for (int s = 1; s <= 3; ++s) {
    const GammaVector gv = random_gamma(rng, s);
    const auto alpha = alpha_coeffs(gv);
    const auto D = shift_matrix_D(alpha);
    CHECK(is_unitary(D));
    // psi^(s)(x - r/2^s) = sum_k D[r][k] psi0(x - k/2^s)
    const long N = 1L << s;
    std::vector<MBF> base, fam;
    for (long k = 0; k < N; ++k) {
      const PAdicVector shift = PAdicVector::scalar(PAdicPoint(2, k, -s));
      base.push_back(psi0().translate(shift));
      fam.push_back(psi_s(gv).translate(shift));
    }
    for (long r = 0; r < N; ++r) {
      MBF sum(2, 1);
      for (long k = 0; k < N; ++k) sum = sum + D[r][k] * base[k];
      CHECK(sum == fam[r]);
    }
    // and back through D^* = D^{-1}
    for (long r = 0; r < N; ++r) {
      MBF sum(2, 1);
      for (long k = 0; k < N; ++k) sum = sum + D[k][r].conj() * fam[k];
      CHECK(sum == base[r]);
    }
    // a non-unit gamma breaks both unitarity and the norm
    auto bad = gv.gammas();
    bad[rng.uniform(0, N - 1)] *= Cyclo(2);
    const auto alpha_bad = alpha_coeffs_unchecked(s, bad);
    CHECK_FALSE(is_unitary(shift_matrix_D(alpha_bad)));
    const MBF psi_bad = psi_from_alpha(alpha_bad);
    CHECK(inner_product(psi_bad, psi_bad) != Cyclo(1));
  }
}

TEST_CASE("matrix A eigensystem") {
  const auto e1 = matrix_A_eigensystem(1);
  CHECK(e1.values == std::vector<Cyclo>{-Cyclo::zeta(2, 2, 1), Cyclo::zeta(2, 2, 1)});
  for (int s = 1; s <= 3; ++s) {
    const auto A = matrix_A(s);
    const auto es = matrix_A_eigensystem(s);
    for (std::size_t r = 0; r < es.values.size(); ++r) {
      std::vector<Cyclo> lv;
      for (const auto& c : es.vectors[r]) lv.push_back(es.values[r] * c);
      CHECK(matvec(A, es.vectors[r]) == lv);
      CHECK(energy(es.vectors[r]) == Cyclo(1));
      for (std::size_t q = 0; q < r; ++q) CHECK(es.values[q] != es.values[r]);
    }
  }
}

TEST_CASE("real families") {
  CHECK(real_wavelet(1, {turn("0")}) == psi0());
  for (const char* t : {"0", "1/8", "1/4", "3/8", "5/16", "7/8"}) {
    const Angle th = turn(t);
    CHECK(alpha_coeffs(real_gamma(1, {th})) == real_alpha_closed_form(1, {th}));
    for (const char* t2 : {"0", "1/16", "3/4"}) {
      const std::vector<Angle> two{th, turn(t2)};
      const auto alpha = alpha_coeffs(real_gamma(2, two));
      CHECK(alpha == real_alpha_closed_form(2, two));
      for (const auto& c : alpha) CHECK(c.is_real());
      const MBF w = real_wavelet(2, two);
      CHECK(w.conjugate() == w);
      CHECK(is_unitary(shift_matrix_D(alpha)));
    }
    for (auto preset : {RealPreset::kOpposite, RealPreset::kEqual, RealPreset::kQuarter}) {
      const auto angles = real_preset_angles(preset, th);
      CHECK(alpha_coeffs(real_gamma(2, angles)) == real_preset_closed_form(preset, th));
    }
  }
  // theta1 = -theta2 gives (cos, 0, sin, 0)
  const auto opp = alpha_coeffs(real_gamma(2, real_preset_angles(RealPreset::kOpposite, turn("1/8"))));
  const Cyclo r = Cyclo::half_power(2, -1);
  CHECK(opp == std::vector<Cyclo>{r, Cyclo(), r, Cyclo()});
}

TEST_CASE("tensor wavelets") {
  WaveletIndex idx;
  idx.n = 1;
  idx.e = {true};
  idx.s = {0};
  idx.gamma = {std::nullopt};
  idx.a = v1(2, "0");
  CHECK(tensor_wavelet(idx) == psi0());

  WaveletIndex two;
  two.n = 2;
  two.e = {true, true};
  two.s = {0, 0};
  two.gamma = {std::nullopt, std::nullopt};
  two.a = vec(2, {"0", "0"});
  const MBF expected = MBF::term(Cyclo(1), vec(2, {"1/2", "1/2"}), Ball(PAdicVector(2, 2), 0));
  CHECK(tensor_wavelet(two) == expected);
  const MBF ft = fourier(tensor_wavelet(two));
  REQUIRE(ft.terms().size() == 1);
  CHECK(ft.terms()[0].ball == Ball(vec(2, {"-1/2", "-1/2"}), 0));

  CHECK(enumerate_basis(2, 1, {0}, 1).size() == 2);
  CHECK(enumerate_basis(2, 2, {0}, 0).size() == 3);
  CHECK(enumerate_basis(2, 2, {}, 3).empty());

  WaveletIndex bad = two;
  bad.e = {false, false};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = two;
  bad.s = {1, 0};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = two;
  bad.a = vec(2, {"1", "0"});
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("orthonormal families") {
  Rng rng(21);
  for (int s = 1; s <= 3; ++s) {
    const GammaVector gv = random_gamma(rng, s);
    CHECK(is_identity(gram_matrix(shifts(psi_s(gv), s + 2))));
  }
  // a small tensor family against the grid oracle
  BasisConfig cfg;
  cfg.s = {1, 1};
  cfg.gamma = {random_gamma(rng, 1), random_gamma(rng, 1)};
  std::vector<MBF> fs;
  for (const auto& idx : enumerate_basis(2, 2, {-1, 0, 1}, 1, cfg)) fs.push_back(tensor_wavelet(idx));
  const auto g = gram_matrix(fs);
  CHECK(is_identity(g));
  for (std::size_t i = 0; i < fs.size(); i += 5) {
    for (std::size_t k = 0; k < fs.size(); k += 7) CHECK(riemann_inner(fs[i], fs[k]) == g[i][k]);
  }
}
