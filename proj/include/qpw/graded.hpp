// Sums  Sum_w p^w f_w  of modulated ball functions weighted by formal powers.
#pragma once

#include <map>
#include <optional>
#include <string>

#include "qpw/mbf.hpp"
#include "qpw/power.hpp"

namespace qpw {

/// Grades are normalized exponents (0 <= Re w < 1); zero parts are dropped.
/// Equality is gradewise, hence conservative across grades.
class PowerMBF {
 public:
  PowerMBF(int p, std::size_t n) : p_(p), n_(n) {}
  explicit PowerMBF(const MBF& f);
  PowerMBF(const PowerScalar& c, const MBF& f);

  [[nodiscard]] int prime() const { return p_; }
  [[nodiscard]] std::size_t dim() const { return n_; }
  [[nodiscard]] const std::map<Exponent, MBF>& parts() const { return parts_; }
  [[nodiscard]] bool is_zero() const { return parts_.empty(); }
  /// The plain MBF when only the grade 0 is present.
  [[nodiscard]] std::optional<MBF> as_mbf() const;

  [[nodiscard]] PowerSum evaluate(const PAdicVector& x) const;
  [[nodiscard]] PowerMBF translate(const PAdicVector& b) const;
  [[nodiscard]] PowerMBF dilate(long j) const;
  [[nodiscard]] std::string str() const;

  friend PowerMBF operator+(const PowerMBF& f, const PowerMBF& g);
  friend PowerMBF operator-(const PowerMBF& f, const PowerMBF& g);
  friend PowerMBF operator*(const PowerScalar& c, const PowerMBF& f);
  friend bool operator==(const PowerMBF&, const PowerMBF&) = default;

 private:
  void add(const Exponent& w, const MBF& f);

  int p_;
  std::size_t n_;
  std::map<Exponent, MBF> parts_;
};

std::ostream& operator<<(std::ostream& os, const PowerMBF& f);

PowerSum inner_product(const PowerMBF& f, const PowerMBF& g);
PowerMBF fourier(const PowerMBF& f);
PowerMBF inverse_fourier(const PowerMBF& f);

}  // namespace qpw
