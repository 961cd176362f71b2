// Haar and Kozyrev wavelet families, the psi^(s) construction with its shift
// matrix, real one-parameter families and separable tensor bases.
#pragma once

#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qpw/cyclo.hpp"
#include "qpw/graded.hpp"
#include "qpw/mbf.hpp"

namespace qpw {

/// Unit-ball indicator on Q_p.
MBF phi(int p);
/// chi_2(x/2) 1_{B_0}.
MBF psi0();

/// theta_k = chi_p(k x / p) 1_{B_0}.
MBF kozyrev_mother(int p, int k);
/// p^{-j/2} theta_k(p^j x - a).
PowerMBF kozyrev(int p, int k, long j, const PAdicPoint& a);
/// p^{-j/2} chi_p(s (p^j x - a)) 1_{B_0}(p^j x - a) with s = p^{-m} sum digits[r] p^r.
PowerMBF generalized_kozyrev(int p, const std::vector<int>& digits, long j, const PAdicPoint& a);
/// (theta_k, sum_r e^{2 pi i k r / p} phi(x/p - r/p)).
std::pair<MBF, MBF> kozyrev_refinable_relation(int p, int k);

/// 2^s unit scalars gamma_r. Construction validates |gamma_r| = 1.
class GammaVector {
 public:
  GammaVector(int s, std::vector<Cyclo> gammas);
  /// gamma_r = e^{2 pi i angles[r]}.
  static GammaVector from_angles(int s, const std::vector<Angle>& angles);

  [[nodiscard]] int s() const { return s_; }
  [[nodiscard]] const std::vector<Cyclo>& gammas() const { return gammas_; }
  friend bool operator==(const GammaVector&, const GammaVector&) = default;

 private:
  int s_;
  std::vector<Cyclo> gammas_;
};

/// alpha_k = 2^{-s} (-1)^k sum_r gamma_r e^{-i pi (2r+1) k / 2^s}.
std::vector<Cyclo> alpha_coeffs(const GammaVector& g);
/// Same formula without the unit check, for the converse direction.
std::vector<Cyclo> alpha_coeffs_unchecked(int s, const std::vector<Cyclo>& gammas);

/// sum_k alpha_k psi0(x - k / 2^s); alpha has length 2^s.
MBF psi_from_alpha(const std::vector<Cyclo>& alpha);
MBF psi_s(const GammaVector& g);

/// Row r is (-alpha_{2^s-r}, ..., -alpha_{2^s-1}, alpha_0, ..., alpha_{2^s-r-1}).
CycloMatrix shift_matrix_D(const std::vector<Cyclo>& alpha);
/// D D^* = I exactly.
bool is_unitary(const CycloMatrix& d);

/// The 2^s x 2^s matrix with A[0][2^s-1] = -1 and ones below the diagonal.
CycloMatrix matrix_A(int s);

struct Eigensystem {
  std::vector<Cyclo> values;
  std::vector<std::vector<Cyclo>> vectors;
};

/// lambda_r = -e^{i pi (2r+1) / 2^s}, (v_r)_l = 2^{-s/2} (-1)^l e^{-i pi (2r+1) l / 2^s}.
Eigensystem matrix_A_eigensystem(int s);

/// Approximate path for arbitrary unit gammas.
std::vector<std::complex<double>> alpha_coeffs_approx(int s, const std::vector<std::complex<double>>& gammas);
inline constexpr double kApproxTolerance = 1e-12;
bool is_unitary_approx(const std::vector<std::complex<double>>& alpha, double tol = kApproxTolerance);

/// Real families. Angles are fractions of a full turn.
enum class RealPreset { kOpposite, kEqual, kQuarter };

/// s = 1: gamma = (e^{-i theta}, e^{i theta}).
/// s = 2: gamma = (e^{i theta1}, e^{i theta2}, e^{-i theta2}, e^{-i theta1}).
GammaVector real_gamma(int s, const std::vector<Angle>& thetas);
MBF real_wavelet(int s, const std::vector<Angle>& thetas);
/// kOpposite: theta1 = -theta2 = theta, kEqual: theta1 = theta2 = theta,
/// kQuarter: theta2 = theta1 + quarter turn, theta1 = theta.
std::vector<Angle> real_preset_angles(RealPreset preset, const Angle& theta);
/// The coefficient vector expected for each real family, written with cos and
/// sin of the angles directly.
std::vector<Cyclo> real_alpha_closed_form(int s, const std::vector<Angle>& thetas);
std::vector<Cyclo> real_preset_closed_form(RealPreset preset, const Angle& theta);
/// cos and sin of a full-turn fraction.
Cyclo cos_turn(const Angle& a);
Cyclo sin_turn(const Angle& a);

/// One element of a separable 2-adic wavelet basis.
struct WaveletIndex {
  int p = 2;
  std::size_t n = 1;
  std::vector<bool> e;                         // coordinates carrying a wavelet factor
  std::vector<int> s;                          // 0 selects psi0
  std::vector<std::optional<GammaVector>> gamma;  // required where e and s > 0
  long j = 0;
  PAdicVector a{2, 1};

  [[nodiscard]] std::vector<int> k_e() const;
  /// Throws std::invalid_argument when malformed.
  void validate() const;
  friend bool operator==(const WaveletIndex&, const WaveletIndex&) = default;
};

/// The mother function Psi^{(s)}_e: tensor of psi^{(s_nu)} on e and phi elsewhere.
MBF tensor_mother(const WaveletIndex& idx);
/// 2^{-nj/2} Psi^{(s)}_e(2^j x - a).
MBF tensor_wavelet(const WaveletIndex& idx);

struct BasisConfig {
  std::vector<int> s;                              // per coordinate, empty means all 0
  std::vector<std::optional<GammaVector>> gamma;   // per coordinate
};

/// j outer, then e by bitmask 1..2^n-1 (bit nu-1 for coordinate nu), then a
/// in enumerate_Ip order.
std::vector<WaveletIndex> enumerate_basis(int p, std::size_t n, const std::vector<long>& j_range, long gamma_max,
                                          const BasisConfig& config = {});

}  // namespace qpw
