// Pseudo-differential operators A = F^{-1} a F with locally constant symbols.
#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qpw/graded.hpp"
#include "qpw/mbf.hpp"
#include "qpw/power.hpp"
#include "qpw/wavelets.hpp"

namespace qpw {

/// A symbol on Q_p^n minus the origin, with a certificate: value(xi) is
/// constant on B_{radius(xi)}(xi).
class Symbol {
 public:
  using Eval = std::function<PowerScalar(const PAdicVector&)>;
  using Radius = std::function<long(const PAdicVector&)>;

  /// |xi|_p^alpha.
  static Symbol fractional(int p, std::size_t n, const Exponent& alpha);
  static Symbol constant(int p, std::size_t n, const PowerScalar& c);
  static Symbol locally_constant(int p, std::size_t n, Eval eval, Radius radius, std::string name = "custom");
  /// 2 on B_{-j-1}(-2^{j-1} k_e), 1 elsewhere (p = 2).
  static Symbol two_valued_test(const std::vector<bool>& e, long j);

  [[nodiscard]] int prime() const { return p_; }
  [[nodiscard]] std::size_t dim() const { return n_; }
  [[nodiscard]] const std::string& name() const { return name_; }
  [[nodiscard]] PowerScalar value(const PAdicVector& xi) const { return eval_(xi); }
  [[nodiscard]] long radius(const PAdicVector& xi) const { return radius_(xi); }
  /// The constant value on b if the certificate covers b.
  [[nodiscard]] std::optional<PowerScalar> value_on(const Ball& b) const;

  friend Symbol compose(const Symbol& a, const Symbol& b);

 private:
  Symbol(int p, std::size_t n, Eval eval, Radius radius, std::string name)
      : p_(p), n_(n), eval_(std::move(eval)), radius_(std::move(radius)), name_(std::move(name)) {}

  int p_;
  std::size_t n_;
  Eval eval_;
  Radius radius_;
  std::string name_;
};

/// Pointwise product of symbols.
Symbol compose(const Symbol& a, const Symbol& b);

/// Certificate radius for balls on which nothing changes.
inline constexpr long kUnboundedRadius = 1L << 40;

/// F^{-1}[a F[f]]. Throws std::invalid_argument unless f is Lizorkin and
/// std::domain_error when a certificate is contradicted.
PowerMBF apply(const Symbol& a, const MBF& f);
PowerMBF apply(const Symbol& a, const PowerMBF& f);

/// The ball B_{-j}(-2^{j-1} k_e) carrying the Fourier image of a level j wavelet.
Ball wavelet_frequency_ball(const std::vector<bool>& e, long j);
/// a is constant on wavelet_frequency_ball(e, j).
bool eigen_criterion(const Symbol& a, const std::vector<bool>& e, long j);
/// a(-2^{j-1} k_e); throws std::domain_error when the criterion fails.
PowerScalar eigenvalue(const Symbol& a, const std::vector<bool>& e, long j);

struct EigenReport {
  bool criterion = false;
  bool direct = false;  // apply(a, Psi) == a(-2^{j-1} k_e) Psi
  PowerScalar value;
  [[nodiscard]] bool consistent() const { return criterion == direct; }
};

EigenReport eigen_report(const Symbol& a, const WaveletIndex& idx);
/// The direct check apply(a, Psi) == lambda Psi.
bool verify_eigenfunction(const Symbol& a, const WaveletIndex& idx);

/// D^alpha theta_{k;ja} == p^{alpha(1-j)} theta_{k;ja}.
bool kozyrev_spectrum_check(int p, int k, long j, const PAdicPoint& a, const Exponent& alpha);

}  // namespace qpw
