#include "qpw/power.hpp"

#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace qpw {

std::string Exponent::str() const {
  if (im == 0) return re.get_str();
  return re.get_str() + (im < 0 ? "-" : "+") + Rational(abs(im)).get_str() + "i";
}

PowerScalar::PowerScalar(int p, Cyclo c, Exponent w) : p_(p), c_(std::move(c)), w_(std::move(w)) {
  if (p < 2) throw std::invalid_argument("prime must be >= 2");
  if (c_.is_zero()) {
    w_ = {};
    return;
  }
  Integer k;
  mpz_fdiv_q(k.get_mpz_t(), w_.re.get_num_mpz_t(), w_.re.get_den_mpz_t());
  if (k != 0) {
    if (!k.fits_slong_p()) throw std::overflow_error("exponent too large");
    w_.re -= k;
    c_ *= Cyclo(rpow(p_, k.get_si()));
  }
  if (p_ == 2 && w_.im == 0 && w_.re == Rational(1, 2)) {
    c_ *= Cyclo::sqrt2();
    w_.re = 0;
  }
}

std::optional<Cyclo> PowerScalar::as_cyclo() const {
  if (w_.is_zero()) return c_;
  return std::nullopt;
}

PowerScalar power_mul(const PowerScalar& a, const PowerScalar& b) {
  if (a.p_ != b.p_) throw std::invalid_argument("power_mul: different primes");
  return PowerScalar(a.p_, a.c_ * b.c_, a.w_ + b.w_);
}

std::complex<double> PowerScalar::to_complex() const {
  const long double lp = std::log(static_cast<long double>(p_));
  const long double mag = std::exp(lp * static_cast<long double>(w_.re.get_d()));
  const long double ph = lp * static_cast<long double>(w_.im.get_d());
  const std::complex<long double> f(mag * std::cos(ph), mag * std::sin(ph));
  const std::complex<double> c = c_.to_complex();
  const std::complex<long double> r = std::complex<long double>(c.real(), c.imag()) * f;
  return {static_cast<double>(r.real()), static_cast<double>(r.imag())};
}

std::string PowerScalar::str() const {
  if (w_.is_zero()) return c_.str();
  return "(" + c_.str() + ")*" + std::to_string(p_) + "^(" + w_.str() + ")";
}

std::ostream& operator<<(std::ostream& os, const PowerScalar& x) { return os << x.str(); }

void PowerSum::add(const PowerScalar& x) {
  if (x.prime() != p_) throw std::invalid_argument("PowerSum: different primes");
  if (x.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(x.w(), x.c());
  if (!fresh) {
    it->second += x.c();
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::optional<Cyclo> PowerSum::as_cyclo() const {
  if (terms_.empty()) return Cyclo();
  if (terms_.size() == 1 && terms_.begin()->first.is_zero()) return terms_.begin()->second;
  return std::nullopt;
}

PowerSum PowerSum::conj() const {
  PowerSum r(p_);
  for (const auto& [w, c] : terms_) r.add(PowerScalar(p_, c, w).conj());
  return r;
}

std::complex<double> PowerSum::to_complex() const {
  std::complex<double> s = 0;
  for (const auto& [w, c] : terms_) s += PowerScalar(p_, c, w).to_complex();
  return s;
}

std::string PowerSum::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [w, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += PowerScalar(p_, c, w).str();
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const PowerSum& x) { return os << x.str(); }

PowerSum operator+(const PowerSum& a, const PowerSum& b) {
  PowerSum r = a;
  for (const auto& [w, c] : b.terms_) r.add(PowerScalar(b.p_, c, w));
  return r;
}

PowerSum operator-(const PowerSum& a, const PowerSum& b) {
  PowerSum r = a;
  for (const auto& [w, c] : b.terms_) r.add(PowerScalar(b.p_, -c, w));
  return r;
}

PowerSum operator*(const PowerSum& a, const PowerSum& b) {
  PowerSum r(a.p_);
  for (const auto& [w1, c1] : a.terms_)
    for (const auto& [w2, c2] : b.terms_) r.add(PowerScalar(a.p_, c1 * c2, w1 + w2));
  return r;
}

}  // namespace qpw
