#include "qpw/io.hpp"

#include <stdexcept>

namespace qpw::io {

namespace {

std::string q_str(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("missing field '") + key + "'");
  return j.at(key);
}

long long_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_integer()) throw std::invalid_argument(std::string("field '") + key + "' must be an integer");
  return v.get<long>();
}

}  // namespace

json to_json(const Rational& q) { return q_str(q); }

json to_json(const PAdicPoint& x) { return x.str(); }

json to_json(const PAdicVector& v) {
  json a = json::array();
  for (const auto& c : v.coords()) a.push_back(to_json(c));
  return a;
}

json to_json(const Ball& b) { return {{"center", to_json(b.center())}, {"gamma", b.gamma()}}; }

json to_json(const Cyclo& c) {
  json coeffs = json::array();
  for (const auto& q : c.coeffs()) coeffs.push_back(to_json(q));
  return {{"order", c.order()}, {"coeffs", coeffs}};
}

json to_json(const Exponent& w) { return {{"re", to_json(w.re)}, {"im", to_json(w.im)}}; }

json complex_json(std::complex<double> z) { return json::array({z.real(), z.imag()}); }

json to_json(const PowerScalar& x) {
  return {{"exact", {{"p", x.prime()}, {"c", to_json(x.c())}, {"w", to_json(x.w())}}},
          {"float", complex_json(x.to_complex())}};
}

json to_json(const PowerSum& x) {
  json parts = json::array();
  for (const auto& [w, c] : x.terms()) parts.push_back({{"c", to_json(c)}, {"w", to_json(w)}});
  return {{"exact", {{"p", x.prime()}, {"parts", parts}}}, {"float", complex_json(x.to_complex())}};
}

json to_json(const MBF& f) {
  json terms = json::array();
  for (const auto& t : f.terms()) {
    terms.push_back({{"coef", to_json(t.coef)}, {"freq", to_json(t.freq)}, {"ball", to_json(t.ball)}});
  }
  return {{"p", f.prime()}, {"n", f.dim()}, {"terms", terms}};
}

json to_json(const PowerMBF& f) {
  json parts = json::array();
  for (const auto& [w, g] : f.parts()) parts.push_back({{"w", to_json(w)}, {"f", to_json(g)}});
  return {{"p", f.prime()}, {"n", f.dim()}, {"parts", parts}};
}

json to_json(const Decomposition& d) {
  json v = json::array(), w = json::array();
  for (const auto& [a, c] : d.v) v.push_back({{"a", to_json(a)}, {"coef", to_json(c)}});
  for (const auto& [ja, c] : d.w) w.push_back({{"j", ja.first}, {"a", to_json(ja.second)}, {"coef", to_json(c)}});
  return {{"j0", d.j0}, {"J", d.J}, {"v", v}, {"w", w}};
}

json to_json(const WaveletIndex& idx) {
  json gamma = json::array();
  for (const auto& g : idx.gamma) {
    if (!g) {
      gamma.push_back(nullptr);
      continue;
    }
    json entries = json::array();
    for (const auto& c : g->gammas()) entries.push_back(to_json(c));
    gamma.push_back(entries);
  }
  return {{"p", idx.p}, {"n", idx.n}, {"e", idx.k_e()}, {"s", idx.s},
          {"gamma", gamma}, {"j", idx.j}, {"a", to_json(idx.a)}};
}

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw std::invalid_argument("expected a rational string");
  Rational q;
  if (q.set_str(j.get<std::string>(), 10) != 0 || q.get_den() == 0) {
    throw std::invalid_argument("malformed rational '" + j.get<std::string>() + "'");
  }
  q.canonicalize();
  return q;
}

PAdicPoint point_from_json(int p, const json& j) { return PAdicPoint::from_rational(p, rational_from_json(j)); }

PAdicVector vector_from_json(int p, const json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("expected a nonempty coordinate array");
  std::vector<PAdicPoint> c;
  for (const auto& x : j) c.push_back(point_from_json(p, x));
  return PAdicVector(std::move(c));
}

Ball ball_from_json(int p, const json& j) { return Ball(vector_from_json(p, field(j, "center")), long_field(j, "gamma")); }

Cyclo cyclo_from_json(const json& j) {
  if (j.is_string() || j.is_number_integer()) return Cyclo(rational_from_json(j));
  const long order = long_field(j, "order");
  const json& coeffs = field(j, "coeffs");
  if (order < 1 || !coeffs.is_array() || coeffs.empty()) throw std::invalid_argument("malformed cyclotomic value");
  if (order == 1) {
    if (coeffs.size() != 1) throw std::invalid_argument("a rational carries one coefficient");
    return Cyclo(rational_from_json(coeffs[0]));
  }
  int p = 2;
  while (order % p != 0) ++p;
  int m = 0;
  for (long r = order; r > 1; r /= p) {
    if (r % p != 0) throw std::invalid_argument("order must be a prime power");
    ++m;
  }
  if (static_cast<long>(coeffs.size()) > order) throw std::invalid_argument("too many coefficients");
  std::vector<Rational> c(static_cast<std::size_t>(order), Rational(0));
  for (std::size_t k = 0; k < coeffs.size(); ++k) c[k] = rational_from_json(coeffs[k]);
  return Cyclo::from_powers(p, m, std::move(c));
}

MBF mbf_from_json(const json& j) {
  const long p = long_field(j, "p");
  const long n = long_field(j, "n");
  if (p < 2 || n < 1) throw std::invalid_argument("malformed p or n");
  for (long d = 2; d * d <= p; ++d) {
    if (p % d == 0) throw std::invalid_argument("p must be prime");
  }
  const json& terms = field(j, "terms");
  if (!terms.is_array()) throw std::invalid_argument("terms must be an array");
  std::vector<Term> out;
  for (const auto& t : terms) {
    Term term{cyclo_from_json(field(t, "coef")), vector_from_json(static_cast<int>(p), field(t, "freq")),
              ball_from_json(static_cast<int>(p), field(t, "ball"))};
    if (term.freq.dim() != static_cast<std::size_t>(n) || term.ball.dim() != static_cast<std::size_t>(n)) {
      throw std::invalid_argument("term dimension differs from n");
    }
    out.push_back(std::move(term));
  }
  return MBF::from_terms(static_cast<int>(p), static_cast<std::size_t>(n), std::move(out));
}

Decomposition decomposition_from_json(const json& j) {
  Decomposition d;
  d.j0 = long_field(j, "j0");
  d.J = long_field(j, "J");
  for (const auto& e : field(j, "v")) d.v[point_from_json(2, field(e, "a"))] += cyclo_from_json(field(e, "coef"));
  for (const auto& e : field(j, "w")) {
    d.w[{long_field(e, "j"), point_from_json(2, field(e, "a"))}] += cyclo_from_json(field(e, "coef"));
  }
  return d;
}

}  // namespace qpw::io
