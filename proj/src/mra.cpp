#include "qpw/mra.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <thread>

#include "qpw/wavelets.hpp"

namespace qpw {

namespace {

PAdicVector as_vec(const PAdicPoint& a) { return PAdicVector::scalar(a); }

void require_haar(const MBF& f) {
  if (f.prime() != 2 || f.dim() != 1) throw std::invalid_argument("the Haar MRA is one-dimensional over Q_2");
}

// Smallest G such that the shifts a in I_2 with |a| <= 2^G reach every
// element at level j overlapping B_N, when the generator lives in B_width.
long shift_range(long N, long j, long width) { return std::max({N + j, width, 0L}); }

// Support radius exponent of psi: the smallest N with psi supported in B_N.
long support_exponent(const MBF& psi) { return psi.is_zero() ? 0 : local_constancy_params(psi).N; }

template <typename Row>
void parallel_rows(std::size_t rows, Row&& row) {
  const unsigned workers = std::min<std::size_t>(thread_count(), std::max<std::size_t>(rows, 1));
  if (workers <= 1) {
    for (std::size_t i = 0; i < rows; ++i) row(i);
    return;
  }
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < rows; i += workers) row(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace

unsigned thread_count() {
  if (const char* env = std::getenv("QPW_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

MBF refinement_rhs(int p, std::optional<int> drop) {
  const MBF coarse = phi(p).dilate(-1);
  MBF rhs(p, 1);
  for (int r = 0; r < p; ++r) {
    if (drop && *drop == r) continue;
    rhs = rhs + coarse.translate(as_vec(PAdicPoint(p, r)));
  }
  return rhs;
}

bool check_refinement(int p) { return phi(p) == refinement_rhs(p); }

MBF scaling_element(long j, const PAdicPoint& a) { return phi(a.prime()).translate(as_vec(a)).dilate(-j); }

MBF scaling_basis(long j, const PAdicPoint& a) {
  return Cyclo::half_power(a.prime(), j) * scaling_element(j, a);
}

MBF wavelet_basis(const MBF& psi, long j, const PAdicPoint& a) {
  return Cyclo::half_power(psi.prime(), j) * psi.translate(as_vec(a)).dilate(-j);
}

Expansion expand_in_Vj(const MBF& f, long j, long gamma_max) {
  require_haar(f);
  if (gamma_max < 0) throw std::invalid_argument("gamma_max must be nonnegative");
  Expansion out;
  MBF approx(2, 1);
  const Cyclo inv_norm2(rpow(2, j));
  for (const auto& a : enumerate_Ip_1d(2, gamma_max)) {
    const MBF e = scaling_element(j, a);
    const Cyclo c = inner_product(f, e) * inv_norm2;
    if (c.is_zero()) continue;
    out.coeffs.emplace(a, c);
    approx = approx + c * e;
  }
  out.residual = f - approx;
  if (out.residual.is_zero()) {
    out.status = ExpansionStatus::kMember;
    return out;
  }
  // The truncated elements cover B_{G-j}.
  const Ball covered(PAdicVector(2, 1), gamma_max - j);
  const MBF inside = pointwise_mul(out.residual, MBF::indicator(covered));
  out.status = inside.is_zero() ? ExpansionStatus::kTruncated : ExpansionStatus::kNotMember;
  return out;
}

std::map<PAdicPoint, Cyclo> project_W(const MBF& f, long j, const MBF& psi, long gamma_max) {
  require_haar(f);
  require_haar(psi);
  std::map<PAdicPoint, Cyclo> out;
  for (const auto& a : enumerate_Ip_1d(2, gamma_max)) {
    const Cyclo c = inner_product(f, wavelet_basis(psi, j, a));
    if (!c.is_zero()) out.emplace(a, c);
  }
  return out;
}

Decomposition decompose(const MBF& f, long j0, const MBF& psi) {
  require_haar(f);
  require_haar(psi);
  Decomposition d;
  d.j0 = j0;
  d.J = j0;
  if (f.is_zero()) return d;
  const auto lc = local_constancy_params(f);
  d.J = std::max(j0, -lc.l);
  for (const auto& a : enumerate_Ip_1d(2, shift_range(lc.N, j0, 0))) {
    const Cyclo c = inner_product(f, scaling_basis(j0, a));
    if (!c.is_zero()) d.v.emplace(a, c);
  }
  const long width = support_exponent(psi);
  for (long j = j0; j < d.J; ++j) {
    for (const auto& [a, c] : project_W(f, j, psi, shift_range(lc.N, j, width))) d.w.emplace(std::pair{j, a}, c);
  }
  return d;
}

MBF reconstruct(const Decomposition& d, const MBF& psi) {
  std::vector<Term> terms;
  auto push = [&](const Cyclo& c, const MBF& g) {
    for (const auto& t : g.terms()) terms.push_back(Term{c * t.coef, t.freq, t.ball});
  };
  for (const auto& [a, c] : d.v) push(c, scaling_basis(d.j0, a));
  for (const auto& [ja, c] : d.w) push(c, wavelet_basis(psi, ja.first, ja.second));
  return MBF::from_terms(2, 1, std::move(terms));
}

Cyclo coefficient_energy(const Decomposition& d) {
  Cyclo s;
  for (const auto& [a, c] : d.v) s += c.abs2();
  for (const auto& [ja, c] : d.w) s += c.abs2();
  return s;
}

bool intersection_triviality_probe(long j_min, const MBF& f) {
  require_haar(f);
  if (f.is_zero()) throw std::invalid_argument("the probe needs a nonzero function");
  const auto lc = local_constancy_params(f);
  for (long j = j_min; j <= -lc.l; ++j) {
    if (expand_in_Vj(f, j, shift_range(lc.N, j, 0)).status == ExpansionStatus::kNotMember) return true;
  }
  return false;
}

CycloMatrix gram_matrix(const std::vector<MBF>& fs) { return cross_gram(fs, fs); }

CycloMatrix cross_gram(const std::vector<MBF>& fs, const std::vector<MBF>& gs) {
  CycloMatrix g(fs.size(), std::vector<Cyclo>(gs.size()));
  parallel_rows(fs.size(), [&](std::size_t i) {
    for (std::size_t k = 0; k < gs.size(); ++k) g[i][k] = inner_product(fs[i], gs[k]);
  });
  return g;
}

std::vector<std::vector<PowerSum>> gram_matrix(const std::vector<PowerMBF>& fs) {
  const int p = fs.empty() ? 2 : fs.front().prime();
  std::vector<std::vector<PowerSum>> g(fs.size(), std::vector<PowerSum>(fs.size(), PowerSum(p)));
  parallel_rows(fs.size(), [&](std::size_t i) {
    for (std::size_t k = 0; k < fs.size(); ++k) g[i][k] = inner_product(fs[i], fs[k]);
  });
  return g;
}

bool is_identity(const std::vector<std::vector<PowerSum>>& m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i].size() != m.size()) return false;
    for (std::size_t k = 0; k < m.size(); ++k) {
      const auto c = m[i][k].as_cyclo();
      if (!c || *c != Cyclo(i == k ? 1 : 0)) return false;
    }
  }
  return true;
}

}  // namespace qpw
