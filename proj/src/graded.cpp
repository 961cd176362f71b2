#include "qpw/graded.hpp"

#include <ostream>
#include <stdexcept>

namespace qpw {

PowerMBF::PowerMBF(const MBF& f) : p_(f.prime()), n_(f.dim()) { add(Exponent{}, f); }

PowerMBF::PowerMBF(const PowerScalar& c, const MBF& f) : p_(f.prime()), n_(f.dim()) {
  if (c.prime() != p_) throw std::invalid_argument("PowerMBF: different primes");
  add(c.w(), c.c() * f);
}

void PowerMBF::add(const Exponent& w, const MBF& f) {
  if (f.prime() != p_ || f.dim() != n_) throw std::invalid_argument("PowerMBF: shape mismatch");
  if (f.is_zero()) return;
  // w may be unnormalized: fold it through a PowerScalar first.
  const PowerScalar unit(p_, Cyclo(1), w);
  const MBF g = unit.c() * f;
  auto [it, fresh] = parts_.try_emplace(unit.w(), g);
  if (!fresh) {
    it->second = it->second + g;
    if (it->second.is_zero()) parts_.erase(it);
  }
}

std::optional<MBF> PowerMBF::as_mbf() const {
  if (parts_.empty()) return MBF(p_, n_);
  if (parts_.size() == 1 && parts_.begin()->first.is_zero()) return parts_.begin()->second;
  return std::nullopt;
}

PowerSum PowerMBF::evaluate(const PAdicVector& x) const {
  PowerSum s(p_);
  for (const auto& [w, f] : parts_) s.add(PowerScalar(p_, f.evaluate(x), w));
  return s;
}

PowerMBF PowerMBF::translate(const PAdicVector& b) const {
  PowerMBF r(p_, n_);
  for (const auto& [w, f] : parts_) r.add(w, f.translate(b));
  return r;
}

PowerMBF PowerMBF::dilate(long j) const {
  PowerMBF r(p_, n_);
  for (const auto& [w, f] : parts_) r.add(w, f.dilate(j));
  return r;
}

std::string PowerMBF::str() const {
  if (parts_.empty()) return "0";
  std::string s;
  for (const auto& [w, f] : parts_) {
    if (!s.empty()) s += " + ";
    s += w.is_zero() ? "{" + f.str() + "}" : std::to_string(p_) + "^(" + w.str() + ") {" + f.str() + "}";
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const PowerMBF& f) { return os << f.str(); }

PowerMBF operator+(const PowerMBF& f, const PowerMBF& g) {
  PowerMBF r = f;
  for (const auto& [w, h] : g.parts_) r.add(w, h);
  return r;
}

PowerMBF operator-(const PowerMBF& f, const PowerMBF& g) {
  PowerMBF r = f;
  for (const auto& [w, h] : g.parts_) r.add(w, -h);
  return r;
}

PowerMBF operator*(const PowerScalar& c, const PowerMBF& f) {
  if (c.prime() != f.p_) throw std::invalid_argument("PowerMBF: different primes");
  PowerMBF r(f.p_, f.n_);
  for (const auto& [w, h] : f.parts_) r.add(w + c.w(), c.c() * h);
  return r;
}

PowerSum inner_product(const PowerMBF& f, const PowerMBF& g) {
  if (f.prime() != g.prime()) throw std::invalid_argument("PowerMBF: different primes");
  PowerSum s(f.prime());
  for (const auto& [w1, a] : f.parts())
    for (const auto& [w2, b] : g.parts()) s.add(PowerScalar(f.prime(), inner_product(a, b), w1 + w2.conj()));
  return s;
}

PowerMBF fourier(const PowerMBF& f) {
  PowerMBF r(f.prime(), f.dim());
  for (const auto& [w, h] : f.parts()) r = r + PowerMBF(PowerScalar::power(f.prime(), w), fourier(h));
  return r;
}

PowerMBF inverse_fourier(const PowerMBF& f) {
  PowerMBF r(f.prime(), f.dim());
  for (const auto& [w, h] : f.parts()) r = r + PowerMBF(PowerScalar::power(f.prime(), w), inverse_fourier(h));
  return r;
}

}  // namespace qpw
