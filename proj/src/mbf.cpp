#include "qpw/mbf.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace qpw {

namespace {

bool term_less(const Term& a, const Term& b) {
  if (auto c = a.ball <=> b.ball; c != 0) return c < 0;
  return a.freq < b.freq;
}

void check_shape(int p, std::size_t n, const Term& t) {
  if (t.ball.prime() != p || t.freq.prime() != p) throw std::invalid_argument("term over a different prime");
  if (t.ball.dim() != n || t.freq.dim() != n) throw std::invalid_argument("term of a different dimension");
}

void check_compatible(const MBF& f, const MBF& g) {
  if (f.prime() != g.prime()) throw std::invalid_argument("functions over different primes");
  if (f.dim() != g.dim()) throw std::invalid_argument("functions of different dimensions");
}

using Bucket = std::map<Ball, std::map<PAdicVector, Cyclo>>;

void deposit(Bucket& buckets, const Term& t) {
  auto& slot = buckets[t.ball];
  auto [it, fresh] = slot.try_emplace(t.freq, t.coef);
  if (!fresh) {
    it->second += t.coef;
    if (it->second.is_zero()) slot.erase(it);
  }
}

Bucket bucket_at(const std::vector<Term>& terms, long gamma) {
  Bucket b;
  for (const auto& t : terms)
    for (const auto& piece : split_term(t, gamma)) deposit(b, piece);
  return b;
}

std::vector<Term> flatten(const Bucket& b) {
  std::vector<Term> out;
  for (const auto& [ball, slot] : b)
    for (const auto& [freq, coef] : slot) out.push_back(Term{coef, freq, ball});
  return out;
}

// One coarsening step: every parent must be covered by p^n children with a
// common frequency, and the coefficients must be a single character on the
// children. Returns nullopt when any parent fails.
std::optional<std::vector<Term>> coarsen_once(const std::vector<Term>& terms, int p, std::size_t n) {
  std::map<Ball, std::vector<const Term*>> groups;
  for (const auto& t : terms) groups[t.ball.parent()].push_back(&t);
  std::size_t children = 1;
  for (std::size_t i = 0; i < n; ++i) children *= static_cast<std::size_t>(p);

  std::vector<Term> out;
  out.reserve(groups.size());
  for (const auto& [parent, kids] : groups) {
    if (kids.size() != children) return std::nullopt;
    const PAdicVector& s = kids.front()->freq;
    for (const Term* k : kids)
      if (k->freq != s) return std::nullopt;
    const long gamma = kids.front()->ball.gamma();

    bool found = false;
    std::vector<long> d(n, 0);
    while (!found) {
      std::vector<PAdicPoint> dc;
      dc.reserve(n);
      for (std::size_t i = 0; i < n; ++i) dc.emplace_back(p, Integer(d[i]), gamma);
      const PAdicVector shift(std::move(dc));
      const Cyclo c0 = kids.front()->coef.rotate(character(-shift, kids.front()->ball.center()));
      bool same = true;
      for (std::size_t k = 1; k < kids.size() && same; ++k) {
        same = kids[k]->coef.rotate(character(-shift, kids[k]->ball.center())) == c0;
      }
      if (same) {
        out.push_back(Term{c0, s + shift, parent});
        found = true;
        break;
      }
      std::size_t i = n;
      bool wrapped = true;
      while (i > 0) {
        --i;
        if (++d[i] < p) {
          wrapped = false;
          break;
        }
        d[i] = 0;
      }
      if (wrapped) break;
    }
    if (!found) return std::nullopt;
  }
  return out;
}

// Calls fn(t, u, smaller_ball) for every pair of terms with intersecting balls.
template <class Fn>
void for_each_overlap(const MBF& f, const MBF& g, Fn&& fn) {
  if (f.is_zero() || g.is_zero()) return;
  const long gf = *f.gamma();
  const long gg = *g.gamma();
  if (gf >= gg) {
    std::map<Ball, std::vector<const Term*>> inside;
    for (const auto& u : g.terms()) inside[Ball(u.ball.center(), gf)].push_back(&u);
    for (const auto& t : f.terms()) {
      auto it = inside.find(t.ball);
      if (it == inside.end()) continue;
      for (const Term* u : it->second) fn(t, *u, u->ball);
    }
  } else {
    std::map<Ball, std::vector<const Term*>> inside;
    for (const auto& t : f.terms()) inside[Ball(t.ball.center(), gg)].push_back(&t);
    for (const auto& u : g.terms()) {
      auto it = inside.find(u.ball);
      if (it == inside.end()) continue;
      for (const Term* t : it->second) fn(*t, u, t->ball);
    }
  }
}

}  // namespace

Term normalize_term(const Term& t) {
  const PAdicVector s = canonical_residue(t.freq, -t.ball.gamma());
  const PAdicVector d = t.freq - s;
  if (d.is_zero()) return Term{t.coef, s, t.ball};
  return Term{t.coef.rotate(character(d, t.ball.center())), s, t.ball};
}

std::vector<Term> split_term(const Term& t, long target) {
  std::vector<Term> out;
  if (target == t.ball.gamma()) {
    out.push_back(normalize_term(t));
    return out;
  }
  // The residue is the same on every child; only the constant differs.
  const PAdicVector s = canonical_residue(t.freq, -target);
  const PAdicVector d = t.freq - s;
  const bool trivial = d.is_zero();
  for (auto& b : t.ball.split(target)) {
    Cyclo c = trivial ? t.coef : t.coef.rotate(character(d, b.center()));
    out.push_back(Term{std::move(c), s, std::move(b)});
  }
  return out;
}

Cyclo evaluate_term(const Term& t, const PAdicVector& x) {
  if (!t.ball.contains(x)) return Cyclo();
  return t.coef.rotate(character(t.freq, x));
}

Cyclo term_integral(const Term& t) {
  if (t.freq.valuation() < t.ball.gamma()) return Cyclo();
  return t.coef.rotate(character(t.freq, t.ball.center())) * Cyclo(t.ball.measure());
}

MBF MBF::from_shape(int p, std::size_t n, std::vector<Term> terms) {
  MBF f(p, n);
  f.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (t.coef.is_zero()) continue;
    f.terms_.push_back(normalize_term(t));
  }
  std::sort(f.terms_.begin(), f.terms_.end(), term_less);
  return f;
}

MBF MBF::from_terms(int p, std::size_t n, std::vector<Term> terms) {
  std::vector<Term> live;
  long gamma = 0;
  for (const auto& t : terms) {
    check_shape(p, n, t);
    if (t.coef.is_zero()) continue;
    gamma = live.empty() ? t.ball.gamma() : std::min(gamma, t.ball.gamma());
    live.push_back(normalize_term(t));
  }
  if (live.empty()) return MBF(p, n);

  Bucket b = bucket_at(live, gamma);
  // Balls holding several frequencies need a finer radius on which the
  // characters differ only by constants.
  std::optional<long> finer;
  for (const auto& [ball, slot] : b) {
    if (slot.size() < 2) continue;
    // ultrametric: the smallest pairwise valuation is attained against any fixed element
    const PAdicVector& s0 = slot.begin()->first;
    for (auto i = std::next(slot.begin()); i != slot.end(); ++i) {
      const long v = (i->first - s0).valuation();
      finer = finer ? std::min(*finer, v) : v;
    }
  }
  if (finer) {
    gamma = *finer;
    b = bucket_at(flatten(b), gamma);
  }
  std::vector<Term> current = flatten(b);
  for (const auto& [ball, slot] : b) {
    if (slot.size() > 1) throw std::logic_error("canonicalization left several frequencies on one ball");
  }
  while (!current.empty()) {
    auto next = coarsen_once(current, p, n);
    if (!next) break;
    current = std::move(*next);
  }
  return from_shape(p, n, std::move(current));
}

MBF MBF::indicator(const Ball& b) { return term(Cyclo(1), PAdicVector(b.prime(), b.dim()), b); }

MBF MBF::term(const Cyclo& coef, const PAdicVector& freq, const Ball& b) {
  return from_terms(b.prime(), b.dim(), {Term{coef, freq, b}});
}

std::optional<long> MBF::gamma() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.front().ball.gamma();
}

Cyclo MBF::evaluate(const PAdicVector& x) const {
  if (x.prime() != p_ || x.dim() != n_) throw std::invalid_argument("evaluation point of a different shape");
  Cyclo s;
  for (const auto& t : terms_) s += evaluate_term(t, x);
  return s;
}

std::vector<Term> MBF::split_to(long target) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    auto parts = split_term(t, target);
    out.insert(out.end(), std::make_move_iterator(parts.begin()), std::make_move_iterator(parts.end()));
  }
  return out;
}

MBF MBF::conjugate() const {
  std::vector<Term> t;
  t.reserve(terms_.size());
  for (const auto& x : terms_) t.push_back(Term{x.coef.conj(), -x.freq, x.ball});
  return from_shape(p_, n_, std::move(t));
}

MBF MBF::translate(const PAdicVector& b) const {
  if (b.prime() != p_ || b.dim() != n_) throw std::invalid_argument("shift of a different shape");
  std::vector<Term> t;
  t.reserve(terms_.size());
  for (const auto& x : terms_) {
    t.push_back(Term{x.coef.rotate(character(-x.freq, b)), x.freq, Ball(x.ball.center() + b, x.ball.gamma())});
  }
  return from_shape(p_, n_, std::move(t));
}

MBF MBF::dilate(long j) const {
  std::vector<Term> t;
  t.reserve(terms_.size());
  for (const auto& x : terms_) {
    t.push_back(Term{x.coef, x.freq.shifted(j), Ball(x.ball.center().shifted(-j), x.ball.gamma() + j)});
  }
  return from_shape(p_, n_, std::move(t));
}

MBF MBF::modulate(const PAdicVector& s) const {
  if (s.prime() != p_ || s.dim() != n_) throw std::invalid_argument("frequency of a different shape");
  std::vector<Term> t;
  t.reserve(terms_.size());
  for (const auto& x : terms_) t.push_back(Term{x.coef, x.freq + s, x.ball});
  return from_shape(p_, n_, std::move(t));
}

namespace {

std::string vec_str(const PAdicVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (i) s += ",";
    s += v[i].str();
  }
  return s + ")";
}

}  // namespace

std::string MBF::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const Term& t = terms_[i];
    if (i) os << " + ";
    os << "[" << t.coef << "] chi(" << vec_str(t.freq) << ".x) 1{B_" << t.ball.gamma() << vec_str(t.ball.center()) << "}";
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const MBF& f) { return os << f.str(); }

MBF MBF::operator-() const { return Cyclo(-1) * *this; }

MBF operator+(const MBF& f, const MBF& g) {
  check_compatible(f, g);
  if (f.is_zero()) return g;
  if (g.is_zero()) return f;
  std::vector<Term> t = f.terms_;
  t.insert(t.end(), g.terms_.begin(), g.terms_.end());
  return MBF::from_terms(f.p_, f.n_, std::move(t));
}

MBF operator-(const MBF& f, const MBF& g) { return f + (-g); }

MBF operator*(const Cyclo& c, const MBF& f) {
  if (c.is_zero()) return MBF(f.p_, f.n_);
  std::vector<Term> t = f.terms_;
  for (auto& x : t) x.coef *= c;
  return MBF::from_shape(f.p_, f.n_, std::move(t));
}

MBF pointwise_mul(const MBF& f, const MBF& g) {
  check_compatible(f, g);
  std::vector<Term> out;
  for_each_overlap(f, g, [&](const Term& t, const Term& u, const Ball& b) {
    out.push_back(Term{t.coef * u.coef, t.freq + u.freq, b});
  });
  return MBF::from_terms(f.prime(), f.dim(), std::move(out));
}

MBF tensor(const MBF& f, const MBF& g) {
  if (f.prime() != g.prime()) throw std::invalid_argument("functions over different primes");
  const std::size_t n = f.dim() + g.dim();
  if (f.is_zero() || g.is_zero()) return MBF(f.prime(), n);
  const long gamma = std::min(*f.gamma(), *g.gamma());
  const auto a = f.split_to(gamma);
  const auto b = g.split_to(gamma);
  std::vector<Term> out;
  out.reserve(a.size() * b.size());
  for (const auto& t : a)
    for (const auto& u : b) {
      out.push_back(Term{t.coef * u.coef, t.freq.concat(u.freq), Ball(t.ball.center().concat(u.ball.center()), gamma)});
    }
  return MBF::from_terms(f.prime(), n, std::move(out));
}

Cyclo integral(const MBF& f) {
  Cyclo s;
  for (const auto& t : f.terms()) s += term_integral(t);
  return s;
}

Cyclo inner_product(const MBF& f, const MBF& g) {
  check_compatible(f, g);
  Cyclo s;
  for_each_overlap(f, g, [&](const Term& t, const Term& u, const Ball& b) {
    const PAdicVector d = t.freq - u.freq;
    if (d.valuation() < b.gamma()) return;
    s += (t.coef * u.coef.conj()).rotate(character(d, b.center())) * Cyclo(b.measure());
  });
  return s;
}

MBF fourier(const MBF& f) {
  std::vector<Term> out;
  out.reserve(f.terms().size());
  for (const auto& t : f.terms()) {
    const Cyclo c = t.coef.rotate(character(t.freq, t.ball.center())) * Cyclo(t.ball.measure());
    out.push_back(Term{c, t.ball.center(), Ball(-t.freq, -t.ball.gamma())});
  }
  return MBF::from_terms(f.prime(), f.dim(), std::move(out));
}

MBF inverse_fourier(const MBF& g) {
  std::vector<Term> out;
  out.reserve(g.terms().size());
  for (const auto& t : g.terms()) {
    const Cyclo c = t.coef.rotate(character(t.freq, t.ball.center())) * Cyclo(t.ball.measure());
    out.push_back(Term{c, -t.ball.center(), Ball(t.freq, -t.ball.gamma())});
  }
  return MBF::from_terms(g.prime(), g.dim(), std::move(out));
}

bool is_lizorkin(const MBF& f) { return integral(f).is_zero(); }

LocalConstancy local_constancy_params(const MBF& f) {
  if (f.is_zero()) throw std::invalid_argument("local constancy parameters of the zero function");
  const long gamma = *f.gamma();
  LocalConstancy r{gamma, gamma};
  for (const auto& t : f.terms()) {
    r.l = std::min(r.l, t.freq.valuation());
    if (!t.ball.center().is_zero()) r.N = std::max(r.N, -t.ball.center().valuation());
  }
  return r;
}

}  // namespace qpw
