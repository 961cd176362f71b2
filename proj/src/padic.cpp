#include "qpw/padic.hpp"

#include <algorithm>
#include <stdexcept>

namespace qpw {

Integer ipow(int p, unsigned long k) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), k);
  return r;
}

Rational rpow(int p, long k) {
  if (k >= 0) return Rational(ipow(p, static_cast<unsigned long>(k)));
  return Rational(Integer(1), ipow(p, static_cast<unsigned long>(-k)));
}

// ---------------------------------------------------------------------------
// PAdicPoint

PAdicPoint::PAdicPoint(int p) : p_(p), num_(0) {
  if (p < 2) throw std::invalid_argument("prime must be >= 2");
}

PAdicPoint::PAdicPoint(int p, Integer num, long exp) : p_(p), num_(std::move(num)), exp_(exp) {
  if (p < 2) throw std::invalid_argument("prime must be >= 2");
  canonicalize();
}

void PAdicPoint::canonicalize() {
  if (num_ == 0) {
    exp_ = 0;
    return;
  }
  Integer pz(p_);
  exp_ += static_cast<long>(mpz_remove(num_.get_mpz_t(), num_.get_mpz_t(), pz.get_mpz_t()));
}

PAdicPoint PAdicPoint::from_rational(int p, const Rational& q) {
  Integer den = q.get_den();
  Integer pz(p);
  long k = static_cast<long>(mpz_remove(den.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t()));
  if (den != 1) throw std::invalid_argument("denominator of " + q.get_str() + " is not a power of p");
  return PAdicPoint(p, q.get_num(), -k);
}

PAdicPoint PAdicPoint::parse(int p, std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == ' '; }), s.end());
  Rational q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("not a rational: '" + s + "'");
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
  q.canonicalize();
  return from_rational(p, q);
}

Rational PAdicPoint::to_rational() const {
  if (exp_ >= 0) return Rational(num_ * ipow(p_, static_cast<unsigned long>(exp_)));
  return Rational(num_, ipow(p_, static_cast<unsigned long>(-exp_)));
}

std::string PAdicPoint::str() const {
  Rational q = to_rational();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

PAdicPoint PAdicPoint::shifted(long k) const {
  if (is_zero()) return *this;
  PAdicPoint r = *this;
  r.exp_ += k;
  return r;
}

PAdicPoint PAdicPoint::operator-() const {
  PAdicPoint r = *this;
  r.num_ = -r.num_;
  return r;
}

namespace {

void require_same_prime(int a, int b) {
  if (a != b) throw std::invalid_argument("mixed primes");
}

}  // namespace

PAdicPoint operator+(const PAdicPoint& a, const PAdicPoint& b) {
  require_same_prime(a.p_, b.p_);
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  long e = std::min(a.exp_, b.exp_);
  Integer n = a.num_ * ipow(a.p_, static_cast<unsigned long>(a.exp_ - e)) +
              b.num_ * ipow(b.p_, static_cast<unsigned long>(b.exp_ - e));
  return PAdicPoint(a.p_, std::move(n), e);
}

PAdicPoint operator-(const PAdicPoint& a, const PAdicPoint& b) { return a + (-b); }

PAdicPoint operator*(const PAdicPoint& a, const PAdicPoint& b) {
  require_same_prime(a.p_, b.p_);
  if (a.is_zero() || b.is_zero()) return PAdicPoint(a.p_);
  PAdicPoint r(a.p_);
  r.num_ = a.num_ * b.num_;
  r.exp_ = a.exp_ + b.exp_;
  return r;  // product of units is a unit
}

std::strong_ordering operator<=>(const PAdicPoint& a, const PAdicPoint& b) {
  if (a.is_zero() || b.is_zero() || a.exp_ == b.exp_) {
    int c = cmp(a.num_, b.num_);
    if (!a.is_zero() && !b.is_zero()) return c <=> 0;
    // one side zero: compare signs
    return sgn(a.num_) <=> sgn(b.num_);
  }
  long e = std::min(a.exp_, b.exp_);
  Integer x = a.num_ * ipow(a.p_, static_cast<unsigned long>(a.exp_ - e));
  Integer y = b.num_ * ipow(b.p_, static_cast<unsigned long>(b.exp_ - e));
  return cmp(x, y) <=> 0;
}

PNorm norm(const PAdicPoint& x) {
  if (x.is_zero()) return PNorm{x.prime(), std::nullopt};
  return PNorm{x.prime(), -x.valuation()};
}

PAdicPoint frac_part(const PAdicPoint& x) {
  if (x.is_zero() || x.exp() >= 0) return PAdicPoint(x.prime());
  Integer den = ipow(x.prime(), static_cast<unsigned long>(-x.exp()));
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), x.num().get_mpz_t(), den.get_mpz_t());
  return PAdicPoint(x.prime(), std::move(r), x.exp());
}

// ---------------------------------------------------------------------------
// PAdicVector

PAdicVector::PAdicVector(int p, std::size_t n) : p_(p), coords_(n, PAdicPoint(p)) {
  if (n == 0) throw std::invalid_argument("dimension must be >= 1");
}

PAdicVector::PAdicVector(std::vector<PAdicPoint> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw std::invalid_argument("dimension must be >= 1");
  p_ = coords_.front().prime();
  for (const auto& c : coords_) require_same_prime(p_, c.prime());
}

PAdicVector PAdicVector::parse(int p, const std::vector<std::string>& coords) {
  std::vector<PAdicPoint> pts;
  pts.reserve(coords.size());
  for (const auto& c : coords) pts.push_back(PAdicPoint::parse(p, c));
  return PAdicVector(std::move(pts));
}

bool PAdicVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const PAdicPoint& c) { return c.is_zero(); });
}

long PAdicVector::valuation() const {
  long v = kInfiniteValuation;
  for (const auto& c : coords_) v = std::min(v, c.valuation());
  return v;
}

PAdicVector PAdicVector::shifted(long k) const {
  PAdicVector r = *this;
  for (auto& c : r.coords_) c = c.shifted(k);
  return r;
}

PAdicVector PAdicVector::concat(const PAdicVector& other) const {
  require_same_prime(p_, other.p_);
  std::vector<PAdicPoint> c = coords_;
  c.insert(c.end(), other.coords_.begin(), other.coords_.end());
  return PAdicVector(std::move(c));
}

PAdicVector PAdicVector::operator-() const {
  PAdicVector r = *this;
  for (auto& c : r.coords_) c = -c;
  return r;
}

namespace {

void require_same_shape(const PAdicVector& a, const PAdicVector& b) {
  require_same_prime(a.prime(), b.prime());
  if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
}

}  // namespace

PAdicVector operator+(const PAdicVector& a, const PAdicVector& b) {
  require_same_shape(a, b);
  PAdicVector r = a;
  for (std::size_t i = 0; i < a.dim(); ++i) r.coords_[i] = a.coords_[i] + b.coords_[i];
  return r;
}

PAdicVector operator-(const PAdicVector& a, const PAdicVector& b) {
  require_same_shape(a, b);
  PAdicVector r = a;
  for (std::size_t i = 0; i < a.dim(); ++i) r.coords_[i] = a.coords_[i] - b.coords_[i];
  return r;
}

PAdicVector operator*(const PAdicPoint& s, const PAdicVector& v) {
  PAdicVector r = v;
  for (auto& c : r.coords_) c = s * c;
  return r;
}

PAdicPoint dot(const PAdicVector& a, const PAdicVector& b) {
  require_same_shape(a, b);
  PAdicPoint acc(a.prime());
  for (std::size_t i = 0; i < a.dim(); ++i) acc = acc + a.coords_[i] * b.coords_[i];
  return acc;
}

std::strong_ordering operator<=>(const PAdicVector& a, const PAdicVector& b) {
  if (auto c = a.coords_.size() <=> b.coords_.size(); c != 0) return c;
  for (std::size_t i = 0; i < a.coords_.size(); ++i) {
    if (auto c = a.coords_[i] <=> b.coords_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

PNorm norm(const PAdicVector& x) {
  long v = x.valuation();
  if (v == kInfiniteValuation) return PNorm{x.prime(), std::nullopt};
  return PNorm{x.prime(), -v};
}

Angle character(const PAdicVector& s, const PAdicVector& x) {
  require_same_shape(s, x);
  PAdicPoint acc(s.prime());
  for (std::size_t i = 0; i < s.dim(); ++i) acc = acc + frac_part(s[i] * x[i]);
  return Angle(acc);
}

// ---------------------------------------------------------------------------
// Balls

PAdicPoint canonical_residue(const PAdicPoint& x, long gamma) {
  return frac_part(x.shifted(gamma)).shifted(-gamma);
}

PAdicVector canonical_residue(const PAdicVector& x, long gamma) {
  std::vector<PAdicPoint> c;
  c.reserve(x.dim());
  for (const auto& xi : x.coords()) c.push_back(canonical_residue(xi, gamma));
  return PAdicVector(std::move(c));
}

Ball::Ball(const PAdicVector& center, long gamma)
    : center_(canonical_residue(center, gamma)), gamma_(gamma) {}

bool Ball::contains(const PAdicVector& x) const {
  require_same_shape(center_, x);
  return (x - center_).valuation() >= -gamma_;
}

Rational Ball::measure() const { return rpow(prime(), gamma_ * static_cast<long>(dim())); }

Ball Ball::parent() const { return Ball(center_, gamma_ + 1); }

std::vector<Ball> Ball::split(long target) const {
  if (target > gamma_) throw std::invalid_argument("split target radius exceeds the ball radius");
  if (target == gamma_) return {*this};
  const int p = prime();
  const long depth = gamma_ - target;
  const Integer count = ipow(p, static_cast<unsigned long>(depth));
  // one-dimensional offsets m p^{-gamma}
  std::vector<PAdicPoint> offsets;
  for (Integer m = 0; m < count; ++m) offsets.emplace_back(p, m, -gamma_);

  std::vector<Ball> out;
  const std::size_t n = dim();
  std::vector<std::size_t> idx(n, 0);
  while (true) {
    std::vector<PAdicPoint> c;
    c.reserve(n);
    for (std::size_t i = 0; i < n; ++i) c.push_back(center_[i] + offsets[idx[i]]);
    out.emplace_back(PAdicVector(std::move(c)), target);
    std::size_t k = n;
    while (k > 0) {
      --k;
      if (++idx[k] < offsets.size()) break;
      idx[k] = 0;
      if (k == 0) {
        std::sort(out.begin(), out.end());
        return out;
      }
    }
  }
}

Ball ball_canonicalize(const PAdicVector& center, long gamma) { return Ball(center, gamma); }

BallRelation ball_relation(const Ball& b1, const Ball& b2) {
  require_same_shape(b1.center(), b2.center());
  const long big = std::max(b1.gamma(), b2.gamma());
  if ((b1.center() - b2.center()).valuation() < -big) return BallRelation::kDisjoint;
  if (b1.gamma() == b2.gamma()) return BallRelation::kEqual;
  return b1.gamma() > b2.gamma() ? BallRelation::kContains : BallRelation::kContainedIn;
}

std::optional<Ball> intersect(const Ball& b1, const Ball& b2) {
  switch (ball_relation(b1, b2)) {
    case BallRelation::kDisjoint:
      return std::nullopt;
    case BallRelation::kContains:
      return b2;
    default:
      return b1;
  }
}

std::vector<Ball> ball_split(const Ball& b, long target) { return b.split(target); }

std::vector<PAdicPoint> enumerate_Ip_1d(int p, long gamma_max) {
  if (gamma_max < 0) throw std::invalid_argument("gamma_max must be >= 0");
  const Integer count = ipow(p, static_cast<unsigned long>(gamma_max));
  std::vector<PAdicPoint> out;
  for (Integer m = 0; m < count; ++m) out.emplace_back(p, m, -gamma_max);
  std::stable_sort(out.begin(), out.end(), [](const PAdicPoint& a, const PAdicPoint& b) {
    auto na = norm(a), nb = norm(b);
    if (na != nb) return na < nb;
    return a < b;
  });
  return out;
}

std::vector<PAdicVector> enumerate_Ip(int p, long gamma_max, std::size_t n) {
  if (n == 0) throw std::invalid_argument("dimension must be >= 1");
  const auto line = enumerate_Ip_1d(p, gamma_max);
  std::vector<PAdicVector> out;
  std::vector<std::size_t> idx(n, 0);
  while (true) {
    std::vector<PAdicPoint> c;
    c.reserve(n);
    for (std::size_t i = 0; i < n; ++i) c.push_back(line[idx[i]]);
    out.emplace_back(std::move(c));
    std::size_t k = n;
    bool done = false;
    while (k > 0) {
      --k;
      if (++idx[k] < line.size()) break;
      idx[k] = 0;
      if (k == 0) done = true;
    }
    if (done) break;
  }
  std::stable_sort(out.begin(), out.end(), [](const PAdicVector& a, const PAdicVector& b) {
    auto na = norm(a), nb = norm(b);
    if (na != nb) return na < nb;
    return a < b;
  });
  return out;
}

}  // namespace qpw
