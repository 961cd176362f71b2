#include "qpw/cyclo.hpp"

#include <cmath>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace qpw {

namespace {

long pm(int p, int m) {
  long n = 1;
  for (int i = 0; i < m; ++i) n *= p;
  return n;
}

int common_prime(int a, int b) {
  if (a == 0) return b;
  if (b == 0 || a == b) return a;
  throw std::invalid_argument("cyclotomic values over different primes");
}

// Reduce a length-N power vector modulo Phi_{p^m}; result has length phi(N).
std::vector<Rational> reduce(int p, int m, std::vector<Rational> c) {
  const long n = pm(p, m);
  const long phi = euler_phi_pm(p, m);
  const long step = n / p;
  c.resize(static_cast<std::size_t>(n));
  // X^phi = -(1 + X^step + ... + X^{(p-2) step}); targets all land below phi.
  for (long k = phi; k < n; ++k) {
    Rational& v = c[static_cast<std::size_t>(k)];
    if (v == 0) continue;
    for (long j = 0; j <= p - 2; ++j) c[static_cast<std::size_t>(k - phi + j * step)] -= v;
    v = 0;
  }
  c.resize(static_cast<std::size_t>(phi));
  return c;
}

}  // namespace

long euler_phi_pm(int p, int m) { return m == 0 ? 1 : pm(p, m - 1) * (p - 1); }

long Cyclo::order() const { return m_ == 0 ? 1 : pm(p_, m_); }

const Rational& Cyclo::rational() const {
  if (m_ != 0) throw std::domain_error("not a rational value: " + str());
  return coeffs_[0];
}

void Cyclo::minimize() {
  while (m_ > 0) {
    bool divisible = true;
    for (std::size_t k = 0; k < coeffs_.size() && divisible; ++k) {
      if (coeffs_[k] != 0 && k % static_cast<std::size_t>(p_) != 0) divisible = false;
    }
    if (!divisible) return;
    const long phi = euler_phi_pm(p_, m_ - 1);
    std::vector<Rational> c(static_cast<std::size_t>(phi));
    for (long k = 0; k < phi; ++k) c[static_cast<std::size_t>(k)] = coeffs_[static_cast<std::size_t>(k * p_)];
    coeffs_ = std::move(c);
    --m_;
  }
  p_ = 0;
}

Cyclo Cyclo::from_powers(int p, int m, std::vector<Rational> coeffs) {
  for (auto& c : coeffs) c.canonicalize();
  if (m == 0) {
    Rational s = 0;
    for (const auto& c : coeffs) s += c;
    return Cyclo(s);
  }
  if (p < 2) throw std::invalid_argument("prime must be >= 2");
  if (static_cast<long>(coeffs.size()) > pm(p, m)) throw std::invalid_argument("too many coefficients");
  Cyclo r(p, m, reduce(p, m, std::move(coeffs)));
  r.minimize();
  return r;
}

Cyclo Cyclo::zeta(int p, int m, long k) {
  if (m == 0) return Cyclo(1);
  const long n = pm(p, m);
  k %= n;
  if (k < 0) k += n;
  std::vector<Rational> c(static_cast<std::size_t>(n));
  c[static_cast<std::size_t>(k)] = 1;
  return from_powers(p, m, std::move(c));
}

Cyclo Cyclo::root_of_unity(const Angle& a) {
  if (a.is_zero()) return Cyclo(1);
  const PAdicPoint& v = a.value();
  // 0 < v < 1 so exp < 0 and num < p^{-exp} fits a long for any practical order.
  if (!v.num().fits_slong_p()) throw std::invalid_argument("angle denominator too large");
  return zeta(a.prime(), static_cast<int>(-v.exp()), v.num().get_si());
}

Cyclo Cyclo::sqrt2() { return zeta(2, 3, 1) + zeta(2, 3, -1); }

Cyclo Cyclo::half_power(int p, long k) {
  if (k % 2 == 0) return Cyclo(rpow(p, k / 2));
  if (p != 2) throw std::domain_error("p^{k/2} with odd k is not cyclotomic over Q(zeta_{p^m}) for p > 2");
  return sqrt2() * Cyclo(rpow(2, (k - 1) / 2));
}

std::vector<Rational> Cyclo::coeffs_at(int p, int M) const {
  if (m_ == 0) {
    std::vector<Rational> c(static_cast<std::size_t>(euler_phi_pm(p, M)));
    c[0] = coeffs_[0];
    return c;
  }
  if (p != p_ || M < m_) throw std::invalid_argument("cannot embed into the requested order");
  const long spread = pm(p, M - m_);
  std::vector<Rational> c(static_cast<std::size_t>(euler_phi_pm(p, M)));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) c[k * static_cast<std::size_t>(spread)] = coeffs_[k];
  return c;
}

Cyclo Cyclo::operator-() const {
  Cyclo r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Cyclo operator+(const Cyclo& a, const Cyclo& b) {
  if (a.m_ == 0 && b.m_ == 0) return Cyclo(a.coeffs_[0] + b.coeffs_[0]);
  const int p = common_prime(a.p_, b.p_);
  const int m = std::max(a.m_, b.m_);
  std::vector<Rational> c = a.coeffs_at(p, m);
  const std::vector<Rational> d = b.coeffs_at(p, m);
  for (std::size_t k = 0; k < c.size(); ++k) c[k] += d[k];
  Cyclo r(p, m, std::move(c));
  r.minimize();
  return r;
}

Cyclo operator-(const Cyclo& a, const Cyclo& b) { return a + (-b); }

Cyclo operator*(const Cyclo& a, const Cyclo& b) {
  if (a.m_ == 0 || b.m_ == 0) {
    const Cyclo& s = a.m_ == 0 ? a : b;
    const Cyclo& v = a.m_ == 0 ? b : a;
    const Rational& q = s.coeffs_[0];
    if (q == 0) return Cyclo();
    Cyclo r = v;
    for (auto& c : r.coeffs_) c *= q;
    return r;
  }
  const int p = common_prime(a.p_, b.p_);
  const int m = std::max(a.m_, b.m_);
  const long n = pm(p, m);
  const std::vector<Rational> x = a.coeffs_at(p, m);
  const std::vector<Rational> y = b.coeffs_at(p, m);
  std::vector<Rational> prod(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (y[j] == 0) continue;
      prod[(i + j) % static_cast<std::size_t>(n)] += x[i] * y[j];
    }
  }
  return Cyclo::from_powers(p, m, std::move(prod));
}

Cyclo Cyclo::rotate(const Angle& a) const {
  if (a.is_zero() || is_zero()) return *this;
  const PAdicPoint& v = a.value();
  if (!v.num().fits_slong_p()) throw std::invalid_argument("angle denominator too large");
  const int p = common_prime(p_, a.prime());
  const int ma = static_cast<int>(-v.exp());
  const int m = std::max(m_, ma);
  const long n = pm(p, m);
  const long shift = v.num().get_si() * pm(p, m - ma);
  const std::vector<Rational> x = coeffs_at(p, m);
  std::vector<Rational> c(static_cast<std::size_t>(n));
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (x[k] != 0) c[static_cast<std::size_t>((static_cast<long>(k) + shift) % n)] = x[k];
  }
  return from_powers(p, m, std::move(c));
}

Cyclo Cyclo::conj() const {
  if (m_ == 0) return *this;
  const long n = order();
  std::vector<Rational> c(static_cast<std::size_t>(n));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    c[static_cast<std::size_t>((n - static_cast<long>(k)) % n)] = coeffs_[k];
  }
  return from_powers(p_, m_, std::move(c));
}

Cyclo Cyclo::inv() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (m_ == 0) return Cyclo(1 / coeffs_[0]);
  // Solve (x * y) = 1 on the power basis: column i of M holds x * zeta^i.
  const std::size_t d = coeffs_.size();
  std::vector<std::vector<Rational>> mat(d, std::vector<Rational>(d + 1));
  for (std::size_t i = 0; i < d; ++i) {
    const std::vector<Rational> col = (*this * zeta(p_, m_, static_cast<long>(i))).coeffs_at(p_, m_);
    for (std::size_t r = 0; r < d; ++r) mat[r][i] = col[r];
  }
  mat[0][d] = 1;
  for (std::size_t c = 0; c < d; ++c) {
    std::size_t piv = c;
    while (piv < d && mat[piv][c] == 0) ++piv;
    if (piv == d) throw std::domain_error("singular multiplication matrix");
    std::swap(mat[c], mat[piv]);
    const Rational inv_p = 1 / mat[c][c];
    for (std::size_t k = c; k <= d; ++k) mat[c][k] *= inv_p;
    for (std::size_t r = 0; r < d; ++r) {
      if (r == c || mat[r][c] == 0) continue;
      const Rational f = mat[r][c];
      for (std::size_t k = c; k <= d; ++k) mat[r][k] -= f * mat[c][k];
    }
  }
  std::vector<Rational> y(d);
  for (std::size_t r = 0; r < d; ++r) y[r] = mat[r][d];
  Cyclo out(p_, m_, std::move(y));
  out.minimize();
  return out;
}

std::complex<double> Cyclo::to_complex() const {
  const long double n = static_cast<long double>(order());
  long double re = 0, im = 0;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    const long double c = static_cast<long double>(coeffs_[k].get_d());
    const long double t = 2 * std::numbers::pi_v<long double> * static_cast<long double>(k) / n;
    re += c * std::cos(t);
    im += c * std::sin(t);
  }
  return {static_cast<double>(re), static_cast<double>(im)};
}

std::string Cyclo::str() const {
  if (m_ == 0) return coeffs_[0].get_str();
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << coeffs_[k].get_str();
    if (k != 0) os << "*z" << order() << "^" << k;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Cyclo& x) { return os << x.str(); }

CycloMatrix identity_matrix(std::size_t n) {
  CycloMatrix m(n, std::vector<Cyclo>(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = Cyclo(1);
  return m;
}

CycloMatrix matmul(const CycloMatrix& a, const CycloMatrix& b) {
  const std::size_t n = a.size();
  const std::size_t k = b.size();
  const std::size_t m = k == 0 ? 0 : b[0].size();
  CycloMatrix r(n, std::vector<Cyclo>(m));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != k) throw std::invalid_argument("matrix shape mismatch");
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l].is_zero()) continue;
      for (std::size_t j = 0; j < m; ++j) r[i][j] += a[i][l] * b[l][j];
    }
  }
  return r;
}

std::vector<Cyclo> matvec(const CycloMatrix& a, const std::vector<Cyclo>& v) {
  std::vector<Cyclo> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != v.size()) throw std::invalid_argument("matrix shape mismatch");
    for (std::size_t j = 0; j < v.size(); ++j) r[i] += a[i][j] * v[j];
  }
  return r;
}

CycloMatrix adjoint(const CycloMatrix& a) {
  const std::size_t n = a.size();
  const std::size_t m = n == 0 ? 0 : a[0].size();
  CycloMatrix r(m, std::vector<Cyclo>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) r[j][i] = a[i][j].conj();
  return r;
}

bool is_identity(const CycloMatrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i].size() != m.size()) return false;
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (m[i][j] != Cyclo(i == j ? 1 : 0)) return false;
    }
  }
  return true;
}

bool is_zero(const CycloMatrix& m) {
  for (const auto& row : m)
    for (const auto& x : row)
      if (!x.is_zero()) return false;
  return true;
}

}  // namespace qpw
