#include "qpw/wavelets.hpp"

#include <cmath>
#include <stdexcept>

namespace qpw {

namespace {

constexpr int kMaxS = 12;

PAdicVector zero1(int p) { return PAdicVector(p, 1); }

PAdicVector point1(int p, Integer num, long exp) { return PAdicVector::scalar(PAdicPoint(p, std::move(num), exp)); }

std::size_t two_pow(int s) {
  if (s < 0 || s > kMaxS) throw std::invalid_argument("s out of range");
  return std::size_t{1} << s;
}

Cyclo imag_unit() { return Cyclo::zeta(2, 2, 1); }

Angle turn(const Rational& q) { return Angle(PAdicPoint::from_rational(2, q)); }

}  // namespace

MBF phi(int p) { return MBF::indicator(Ball(zero1(p), 0)); }

MBF psi0() { return MBF::term(Cyclo(1), point1(2, 1, -1), Ball(zero1(2), 0)); }

MBF kozyrev_mother(int p, int k) {
  if (k <= 0 || k >= p) throw std::invalid_argument("kozyrev index k must lie in 1..p-1");
  return MBF::term(Cyclo(1), point1(p, k, -1), Ball(zero1(p), 0));
}

PowerMBF kozyrev(int p, int k, long j, const PAdicPoint& a) {
  const MBF f = kozyrev_mother(p, k).translate(PAdicVector::scalar(a)).dilate(j);
  return PowerMBF(PowerScalar(p, Cyclo(1), Exponent{Rational(-j, 2), 0}), f);
}

PowerMBF generalized_kozyrev(int p, const std::vector<int>& digits, long j, const PAdicPoint& a) {
  if (digits.empty()) throw std::invalid_argument("empty digit list");
  if (digits[0] == 0) throw std::invalid_argument("leading digit s_0 must be nonzero");
  Integer num = 0;
  for (std::size_t r = digits.size(); r-- > 0;) {
    if (digits[r] < 0 || digits[r] >= p) throw std::invalid_argument("digit out of range");
    num = num * p + digits[r];
  }
  const MBF base = MBF::term(Cyclo(1), point1(p, num, -static_cast<long>(digits.size())), Ball(zero1(p), 0));
  const MBF f = base.translate(PAdicVector::scalar(a)).dilate(j);
  return PowerMBF(PowerScalar(p, Cyclo(1), Exponent{Rational(-j, 2), 0}), f);
}

std::pair<MBF, MBF> kozyrev_refinable_relation(int p, int k) {
  const MBF lhs = kozyrev_mother(p, k);
  const MBF coarse = phi(p).dilate(-1);
  MBF rhs(p, 1);
  for (int r = 0; r < p; ++r) {
    const Cyclo h = Cyclo::zeta(p, 1, static_cast<long>(k) * r);
    rhs = rhs + h * coarse.translate(point1(p, r, 0));
  }
  return {lhs, rhs};
}

GammaVector::GammaVector(int s, std::vector<Cyclo> gammas) : s_(s), gammas_(std::move(gammas)) {
  if (gammas_.size() != two_pow(s)) throw std::invalid_argument("gamma vector must have 2^s entries");
  for (const auto& g : gammas_) {
    if (g.abs2() != Cyclo(1)) throw std::invalid_argument("gamma entries must have modulus 1");
  }
}

GammaVector GammaVector::from_angles(int s, const std::vector<Angle>& angles) {
  std::vector<Cyclo> g;
  for (const auto& a : angles) g.push_back(Cyclo::root_of_unity(a));
  return GammaVector(s, std::move(g));
}

std::vector<Cyclo> alpha_coeffs(const GammaVector& g) { return alpha_coeffs_unchecked(g.s(), g.gammas()); }

std::vector<Cyclo> alpha_coeffs_unchecked(int s, const std::vector<Cyclo>& gammas) {
  const std::size_t N = two_pow(s);
  if (gammas.size() != N) throw std::invalid_argument("gamma vector must have 2^s entries");
  const Cyclo scale(rpow(2, -s));
  std::vector<Cyclo> alpha;
  for (std::size_t k = 0; k < N; ++k) {
    Cyclo sum;
    for (std::size_t r = 0; r < N; ++r) {
      sum += gammas[r] * Cyclo::zeta(2, s + 1, -static_cast<long>((2 * r + 1) * k));
    }
    alpha.push_back(k % 2 ? -(scale * sum) : scale * sum);
  }
  return alpha;
}

MBF psi_from_alpha(const std::vector<Cyclo>& alpha) {
  std::size_t N = 1;
  int s = 0;
  while (N < alpha.size()) N <<= 1, ++s;
  if (N != alpha.size()) throw std::invalid_argument("alpha must have 2^s entries");
  const MBF base = psi0();
  std::vector<Term> terms;
  for (std::size_t k = 0; k < N; ++k) {
    if (alpha[k].is_zero()) continue;
    const MBF shifted = base.translate(point1(2, static_cast<long>(k), -s));
    for (const auto& t : shifted.terms()) {
      terms.push_back(Term{alpha[k] * t.coef, t.freq, t.ball});
    }
  }
  return MBF::from_terms(2, 1, std::move(terms));
}

MBF psi_s(const GammaVector& g) { return psi_from_alpha(alpha_coeffs(g)); }

CycloMatrix shift_matrix_D(const std::vector<Cyclo>& alpha) {
  const std::size_t N = alpha.size();
  CycloMatrix d(N, std::vector<Cyclo>(N));
  for (std::size_t r = 0; r < N; ++r) {
    for (std::size_t c = 0; c < N; ++c) d[r][c] = c >= r ? alpha[c - r] : -alpha[N - r + c];
  }
  return d;
}

bool is_unitary(const CycloMatrix& d) { return is_identity(matmul(d, adjoint(d))); }

CycloMatrix matrix_A(int s) {
  if (s < 1) throw std::invalid_argument("s must be positive");
  const std::size_t N = two_pow(s);
  CycloMatrix a(N, std::vector<Cyclo>(N));
  a[0][N - 1] = Cyclo(-1);
  for (std::size_t i = 1; i < N; ++i) a[i][i - 1] = Cyclo(1);
  return a;
}

Eigensystem matrix_A_eigensystem(int s) {
  if (s < 1) throw std::invalid_argument("s must be positive");
  const std::size_t N = two_pow(s);
  const Cyclo norm = Cyclo::half_power(2, -s);
  Eigensystem out;
  for (std::size_t r = 0; r < N; ++r) {
    const long odd = static_cast<long>(2 * r + 1);
    out.values.push_back(-Cyclo::zeta(2, s + 1, odd));
    std::vector<Cyclo> v;
    for (std::size_t l = 0; l < N; ++l) {
      const Cyclo z = norm * Cyclo::zeta(2, s + 1, -odd * static_cast<long>(l));
      v.push_back(l % 2 ? -z : z);
    }
    out.vectors.push_back(std::move(v));
  }
  return out;
}

std::vector<std::complex<double>> alpha_coeffs_approx(int s, const std::vector<std::complex<double>>& gammas) {
  const std::size_t N = two_pow(s);
  if (gammas.size() != N) throw std::invalid_argument("gamma vector must have 2^s entries");
  std::vector<std::complex<double>> alpha;
  for (std::size_t k = 0; k < N; ++k) {
    std::complex<double> sum = 0;
    for (std::size_t r = 0; r < N; ++r) {
      const double t = -M_PI * static_cast<double>((2 * r + 1) * k) / static_cast<double>(N);
      sum += gammas[r] * std::polar(1.0, t);
    }
    alpha.push_back((k % 2 ? -1.0 : 1.0) * sum / static_cast<double>(N));
  }
  return alpha;
}

bool is_unitary_approx(const std::vector<std::complex<double>>& alpha, double tol) {
  const std::size_t N = alpha.size();
  auto entry = [&](std::size_t r, std::size_t c) { return c >= r ? alpha[c - r] : -alpha[N - r + c]; };
  for (std::size_t r = 0; r < N; ++r) {
    for (std::size_t q = 0; q < N; ++q) {
      std::complex<double> s = 0;
      for (std::size_t c = 0; c < N; ++c) s += entry(r, c) * std::conj(entry(q, c));
      if (std::abs(s - (r == q ? 1.0 : 0.0)) > tol) return false;
    }
  }
  return true;
}

Cyclo cos_turn(const Angle& a) {
  const Cyclo z = Cyclo::root_of_unity(a);
  return (z + z.conj()) * Cyclo(Rational(1, 2));
}

Cyclo sin_turn(const Angle& a) {
  const Cyclo z = Cyclo::root_of_unity(a);
  return (z - z.conj()) * Cyclo(Rational(1, 2)) * -imag_unit();
}

GammaVector real_gamma(int s, const std::vector<Angle>& thetas) {
  if (s == 1 && thetas.size() == 1) return GammaVector::from_angles(1, {-thetas[0], thetas[0]});
  if (s == 2 && thetas.size() == 2) {
    return GammaVector::from_angles(2, {thetas[0], thetas[1], -thetas[1], -thetas[0]});
  }
  throw std::invalid_argument("real families take s = 1 with one angle or s = 2 with two");
}

MBF real_wavelet(int s, const std::vector<Angle>& thetas) { return psi_s(real_gamma(s, thetas)); }

std::vector<Angle> real_preset_angles(RealPreset preset, const Angle& theta) {
  switch (preset) {
    case RealPreset::kOpposite:
      return {theta, -theta};
    case RealPreset::kEqual:
      return {theta, theta};
    case RealPreset::kQuarter:
      return {theta, theta + turn(Rational(1, 4))};
  }
  throw std::invalid_argument("unknown preset");
}

std::vector<Cyclo> real_alpha_closed_form(int s, const std::vector<Angle>& thetas) {
  if (s == 1 && thetas.size() == 1) return {cos_turn(thetas[0]), sin_turn(thetas[0])};
  if (s != 2 || thetas.size() != 2) throw std::invalid_argument("real families take s = 1 or s = 2");
  const Cyclo c1 = cos_turn(thetas[0]), s1 = sin_turn(thetas[0]);
  const Cyclo c2 = cos_turn(thetas[1]), s2 = sin_turn(thetas[1]);
  const Cyclo half(Rational(1, 2));
  const Cyclo k = half * Cyclo::half_power(2, -1);  // 1 / (2 sqrt 2)
  return {half * (c1 + c2), -(k * (c1 - c2 + s1 + s2)), half * (s1 - s2), k * (c1 - c2 - s1 - s2)};
}

std::vector<Cyclo> real_preset_closed_form(RealPreset preset, const Angle& theta) {
  const Cyclo c = cos_turn(theta), s = sin_turn(theta);
  const Cyclo half(Rational(1, 2));
  const Cyclo r = Cyclo::half_power(2, -1);
  switch (preset) {
    case RealPreset::kOpposite:
      return {c, Cyclo(), s, Cyclo()};
    case RealPreset::kEqual:
      return {c, -(r * s), Cyclo(), -(r * s)};
    case RealPreset::kQuarter:
      return {half * (c - s), -(r * (c + s)), -(half * (c - s)), Cyclo()};
  }
  throw std::invalid_argument("unknown preset");
}

std::vector<int> WaveletIndex::k_e() const {
  std::vector<int> k;
  for (bool b : e) k.push_back(b ? 1 : 0);
  return k;
}

void WaveletIndex::validate() const {
  if (p != 2) throw std::invalid_argument("separable wavelet bases are built for p = 2");
  if (n == 0) throw std::invalid_argument("dimension must be positive");
  if (e.size() != n || s.size() != n || gamma.size() != n) throw std::invalid_argument("index arrays must have length n");
  if (a.dim() != n || a.prime() != p) throw std::invalid_argument("translation has the wrong shape");
  bool any = false;
  for (std::size_t v = 0; v < n; ++v) {
    if (frac_part(a[v]) != a[v]) throw std::invalid_argument("translation must lie in I_p^n");
    if (!e[v]) {
      if (s[v] != 0 || gamma[v]) throw std::invalid_argument("s and gamma apply only to wavelet coordinates");
      continue;
    }
    any = true;
    if (s[v] < 0) throw std::invalid_argument("s must be nonnegative");
    if (s[v] > 0 && (!gamma[v] || gamma[v]->s() != s[v])) throw std::invalid_argument("missing gamma for s > 0");
    if (s[v] == 0 && gamma[v]) throw std::invalid_argument("gamma given for s = 0");
  }
  if (!any) throw std::invalid_argument("e must be nonempty");
}

MBF tensor_mother(const WaveletIndex& idx) {
  idx.validate();
  std::optional<MBF> out;
  for (std::size_t v = 0; v < idx.n; ++v) {
    MBF factor = !idx.e[v] ? phi(2) : idx.s[v] == 0 ? psi0() : psi_s(*idx.gamma[v]);
    out = out ? tensor(*out, factor) : factor;
  }
  return *out;
}

MBF tensor_wavelet(const WaveletIndex& idx) {
  const Cyclo norm = Cyclo::half_power(2, -static_cast<long>(idx.n) * idx.j);
  return norm * tensor_mother(idx).translate(idx.a).dilate(idx.j);
}

std::vector<WaveletIndex> enumerate_basis(int p, std::size_t n, const std::vector<long>& j_range, long gamma_max,
                                          const BasisConfig& config) {
  if (p != 2) throw std::invalid_argument("separable wavelet bases are built for p = 2");
  if (n == 0 || n > 16) throw std::invalid_argument("dimension out of range");
  if (gamma_max < 0) throw std::invalid_argument("gamma_max must be nonnegative");
  if (!config.s.empty() && config.s.size() != n) throw std::invalid_argument("s must have length n");
  if (!config.gamma.empty() && config.gamma.size() != n) throw std::invalid_argument("gamma must have length n");
  const auto shifts = enumerate_Ip(p, gamma_max, n);
  std::vector<WaveletIndex> out;
  for (long j : j_range) {
    for (unsigned long mask = 1; mask < (1UL << n); ++mask) {
      WaveletIndex idx;
      idx.p = p;
      idx.n = n;
      idx.j = j;
      idx.e.assign(n, false);
      idx.s.assign(n, 0);
      idx.gamma.assign(n, std::nullopt);
      for (std::size_t v = 0; v < n; ++v) {
        if (!(mask >> v & 1UL)) continue;
        idx.e[v] = true;
        if (!config.s.empty()) idx.s[v] = config.s[v];
        if (!config.gamma.empty()) idx.gamma[v] = config.gamma[v];
      }
      for (const auto& a : shifts) {
        idx.a = a;
        idx.validate();
        out.push_back(idx);
      }
    }
  }
  return out;
}

}  // namespace qpw
