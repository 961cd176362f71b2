// The Haar multiresolution analysis on Q_2: refinement, expansion in V_j,
// projection onto W_j, exact decomposition/reconstruction and Gram matrices.
//
// Level conventions: V_j is spanned by phi(2^{-j} x - a), a in I_2, so
// V_j is the space of functions constant on balls of radius 2^{-j}, and
// V_{j+1} = V_j + W_j with W_j spanned by psi(2^{-j} x - a).
#pragma once

#include <map>
#include <optional>
#include <vector>

#include "qpw/graded.hpp"
#include "qpw/mbf.hpp"

namespace qpw {

/// sum_{r<p} phi(x/p - r/p), optionally skipping one summand.
MBF refinement_rhs(int p, std::optional<int> drop = std::nullopt);
/// phi == refinement_rhs(p).
bool check_refinement(int p);

/// phi(2^{-j} x - a), the indicator of B_{-j}(2^j a).
MBF scaling_element(long j, const PAdicPoint& a);
/// 2^{j/2} phi(2^{-j} x - a).
MBF scaling_basis(long j, const PAdicPoint& a);
/// 2^{j/2} psi(2^{-j} x - a).
MBF wavelet_basis(const MBF& psi, long j, const PAdicPoint& a);

enum class ExpansionStatus { kMember, kNotMember, kTruncated };

struct Expansion {
  ExpansionStatus status = ExpansionStatus::kMember;
  /// Coefficients on the unnormalized phi(2^{-j} x - a); zero entries omitted.
  std::map<PAdicPoint, Cyclo> coeffs;
  /// f minus the expansion.
  MBF residual{2, 1};
};

/// Expands f in V_j over a in enumerate_Ip_1d(2, gamma_max). kNotMember means
/// the residual is nonzero where the truncated basis lives; kTruncated means it
/// is nonzero only outside.
Expansion expand_in_Vj(const MBF& f, long j, long gamma_max);

/// <f, 2^{j/2} psi(2^{-j} . - a)> for a in enumerate_Ip_1d(2, gamma_max); zeros omitted.
std::map<PAdicPoint, Cyclo> project_W(const MBF& f, long j, const MBF& psi, long gamma_max);

/// Coefficients on the orthonormal elements scaling_basis(j0, a) and
/// wavelet_basis(psi, j, a), j0 <= j < J.
struct Decomposition {
  long j0 = 0;
  long J = 0;
  std::map<PAdicPoint, Cyclo> v;
  std::map<std::pair<long, PAdicPoint>, Cyclo> w;
  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

inline constexpr long kDefaultBaseLevel = -3;

/// J = max(j0, -l(f)); exact for every 1-D MBF over p = 2.
Decomposition decompose(const MBF& f, long j0, const MBF& psi);
MBF reconstruct(const Decomposition& d, const MBF& psi);
/// Sum of |c|^2 over all coefficients.
Cyclo coefficient_energy(const Decomposition& d);

/// True iff f leaves V_j for some j in [j_min, -l(f)]. Throws for f = 0.
bool intersection_triviality_probe(long j_min, const MBF& f);

/// G[i][k] = <f_i, f_k>. Rows are spread over QPW_THREADS threads.
CycloMatrix gram_matrix(const std::vector<MBF>& fs);
std::vector<std::vector<PowerSum>> gram_matrix(const std::vector<PowerMBF>& fs);
/// Cross Gram G[i][k] = <f_i, g_k>.
CycloMatrix cross_gram(const std::vector<MBF>& fs, const std::vector<MBF>& gs);
bool is_identity(const std::vector<std::vector<PowerSum>>& m);

/// Worker count from QPW_THREADS, else hardware concurrency.
unsigned thread_count();

}  // namespace qpw
