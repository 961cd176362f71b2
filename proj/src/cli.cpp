#include "qpw/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "qpw/io.hpp"
#include "qpw/mra.hpp"
#include "qpw/psdo.hpp"
#include "qpw/wavelets.hpp"

namespace qpw::cli {

namespace {

using io::json;

struct JobConfig {
  std::string command;
  int p = 2;
  std::size_t n = 0;  // 0: inferred
  std::vector<long> j{0};
  long j0 = kDefaultBaseLevel;
  long gamma_max = 1;
  std::vector<int> s;
  std::vector<std::string> gamma;  // one comma separated angle list per coordinate
  std::vector<std::string> gamma_float;
  int perturb = -1;
  std::vector<int> e;  // 1-based coordinates
  std::vector<std::string> a;
  std::vector<int> k;
  std::string family = "tensor";
  std::string symbol;
  std::string scale = "1";
  std::vector<std::string> theta{"0", "1/8", "1/4", "3/8", "1/2", "5/8", "3/4", "7/8"};
  std::string input;
  std::string output;
  std::string format = "json";
};

struct Result {
  json body;
  std::vector<std::vector<std::string>> table;  // first row is the header
  bool passed = true;
};

// Input problems surface as usage errors.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

Rational parse_rational(const std::string& text) {
  return io::rational_from_json(json(text));
}

Angle parse_angle(const std::string& text) { return Angle(PAdicPoint::from_rational(2, parse_rational(text))); }

std::vector<Angle> parse_angles(const std::string& list) {
  std::vector<Angle> out;
  for (const auto& t : split(list, ',')) out.push_back(parse_angle(t));
  return out;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

json read_json(const std::string& path) {
  if (path.empty()) throw UsageError("--input is required");
  try {
    if (path == "-") return json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    return json::parse(in);
  } catch (const json::exception& ex) {
    throw UsageError(std::string("malformed JSON: ") + ex.what());
  }
}

// The wavelet function for 1-D commands: psi0 unless --s > 0 with --gamma.
MBF psi_from_config(const JobConfig& c) {
  const int s = c.s.empty() ? 0 : c.s.front();
  if (s == 0) return psi0();
  if (c.gamma.empty()) throw UsageError("--gamma is required for s > 0");
  return psi_s(GammaVector::from_angles(s, parse_angles(c.gamma.front())));
}

// s and gamma for coordinate v; a single value applies to every coordinate.
template <typename T>
const T* per_coordinate(const std::vector<T>& values, std::size_t v) {
  if (values.empty()) return nullptr;
  if (values.size() == 1) return &values.front();
  return v < values.size() ? &values[v] : nullptr;
}

BasisConfig basis_config(const JobConfig& c, std::size_t n) {
  BasisConfig cfg;
  if (c.s.empty()) return cfg;
  for (std::size_t v = 0; v < n; ++v) {
    const int s = *per_coordinate(c.s, v);
    cfg.s.push_back(s);
    if (s == 0) {
      cfg.gamma.emplace_back(std::nullopt);
      continue;
    }
    const std::string* g = per_coordinate(c.gamma, v);
    if (!g) throw UsageError("--gamma is required for s > 0");
    cfg.gamma.emplace_back(GammaVector::from_angles(s, parse_angles(*g)));
  }
  return cfg;
}

std::vector<bool> e_mask(const JobConfig& c, std::size_t n) {
  std::vector<bool> e(n, false);
  for (int v : c.e) {
    if (v < 1 || static_cast<std::size_t>(v) > n) throw UsageError("--e coordinates run from 1 to n");
    e[static_cast<std::size_t>(v - 1)] = true;
  }
  return e;
}

Symbol parse_symbol(const JobConfig& c, std::size_t n, const std::vector<bool>& e, long j) {
  const std::string& spec = c.symbol;
  if (spec.rfind("fractional:alpha=", 0) == 0) {
    const auto parts = split(spec.substr(17), ',');
    if (parts.empty() || parts.size() > 2) throw UsageError("fractional:alpha=<re>[,<im>]");
    return Symbol::fractional(c.p, n, Exponent{parse_rational(parts[0]), parts.size() > 1 ? parse_rational(parts[1]) : 0});
  }
  if (spec.rfind("constant:", 0) == 0) {
    return Symbol::constant(c.p, n, PowerScalar(c.p, Cyclo(parse_rational(spec.substr(9)))));
  }
  if (spec == "two-valued-test") {
    if (c.p != 2) throw UsageError("two-valued-test is defined for p = 2");
    return Symbol::two_valued_test(e, j);
  }
  throw UsageError("unknown symbol '" + spec + "'");
}

std::string index_label(const WaveletIndex& idx) {
  std::string e, s, a;
  for (std::size_t v = 0; v < idx.n; ++v) {
    e += (v ? ";" : "") + std::to_string(idx.e[v] ? 1 : 0);
    s += (v ? ";" : "") + std::to_string(idx.s[v]);
    a += (v ? ";" : "") + idx.a[v].str();
  }
  return std::to_string(idx.j) + "," + e + "," + s + "," + a;
}

Result gen_basis(const JobConfig& c) {
  Result r;
  json list = json::array();
  if (c.family == "kozyrev") {
    r.table.push_back({"k", "j", "a"});
    for (long j : c.j) {
      for (int k = 1; k < c.p; ++k) {
        for (const auto& a : enumerate_Ip_1d(c.p, c.gamma_max)) {
          list.push_back({{"p", c.p}, {"k", k}, {"j", j}, {"a", a.str()}});
          r.table.push_back({std::to_string(k), std::to_string(j), a.str()});
        }
      }
    }
  } else {
    const std::size_t n = c.n ? c.n : 1;
    r.table.push_back({"j", "e", "s", "a"});
    for (const auto& idx : enumerate_basis(c.p, n, c.j, c.gamma_max, basis_config(c, n))) {
      list.push_back(io::to_json(idx));
      const auto fields = split(index_label(idx), ',');
      r.table.push_back(fields);
    }
  }
  r.body = {{"family", c.family}, {"count", list.size()}, {"indices", list}};
  return r;
}

Result check_orthonormal(const JobConfig& c) {
  Result r;
  const Rational scale = parse_rational(c.scale);
  bool identity = false;
  std::size_t size = 0;
  if (c.family == "kozyrev") {
    std::vector<PowerMBF> fs;
    const std::vector<int> ks = c.k.empty() ? [&] {
      std::vector<int> all;
      for (int k = 1; k < c.p; ++k) all.push_back(k);
      return all;
    }() : c.k;
    for (long j : c.j)
      for (int k : ks)
        for (const auto& a : enumerate_Ip_1d(c.p, c.gamma_max)) fs.push_back(kozyrev(c.p, k, j, a));
    if (!fs.empty()) fs.front() = PowerScalar(c.p, Cyclo(scale)) * fs.front();
    identity = is_identity(gram_matrix(fs));
    size = fs.size();
  } else {
    const std::size_t n = c.n ? c.n : 1;
    std::vector<MBF> fs;
    for (const auto& idx : enumerate_basis(c.p, n, c.j, c.gamma_max, basis_config(c, n))) fs.push_back(tensor_wavelet(idx));
    if (!fs.empty()) fs.front() = Cyclo(scale) * fs.front();
    identity = is_identity(gram_matrix(fs));
    size = fs.size();
  }
  r.passed = identity;
  r.body = {{"family", c.family}, {"size", size}, {"identity", identity}};
  r.table = {{"family", "size", "identity"}, {c.family, std::to_string(size), identity ? "true" : "false"}};
  return r;
}

Result check_refinement_cmd(const JobConfig& c) {
  Result r;
  const bool holds = check_refinement(c.p);
  r.passed = holds;
  r.body = {{"p", c.p}, {"holds", holds}, {"report", holds ? "identity holds" : "identity fails"}};
  r.table = {{"p", "holds"}, {std::to_string(c.p), holds ? "true" : "false"}};
  return r;
}

Result check_unitary(const JobConfig& c) {
  Result r;
  const int s = c.s.empty() ? 1 : c.s.front();
  r.table.push_back({"k", "alpha_re", "alpha_im"});
  if (!c.gamma_float.empty()) {
    std::vector<std::complex<double>> g;
    for (const auto& t : split(c.gamma_float.front(), ',')) g.push_back(std::polar(1.0, 2 * M_PI * std::stod(t)));
    if (c.perturb >= 0 && static_cast<std::size_t>(c.perturb) < g.size()) g[c.perturb] *= 2.0;
    const auto alpha = alpha_coeffs_approx(s, g);
    const bool unitary = is_unitary_approx(alpha);
    json al = json::array();
    for (std::size_t k = 0; k < alpha.size(); ++k) {
      al.push_back(io::complex_json(alpha[k]));
      r.table.push_back({std::to_string(k), fmt(alpha[k].real()), fmt(alpha[k].imag())});
    }
    r.passed = unitary;
    r.body = {{"s", s}, {"path", "float"}, {"tolerance", kApproxTolerance}, {"alpha_float", al}, {"unitary", unitary}};
    return r;
  }
  if (c.gamma.empty()) throw UsageError("--gamma (exact angles) or --gamma-float is required");
  const GammaVector g = GammaVector::from_angles(s, parse_angles(c.gamma.front()));
  auto gammas = g.gammas();
  if (c.perturb >= 0) {
    if (static_cast<std::size_t>(c.perturb) >= gammas.size()) throw UsageError("--perturb index out of range");
    gammas[static_cast<std::size_t>(c.perturb)] *= Cyclo(2);
  }
  const auto alpha = alpha_coeffs_unchecked(s, gammas);
  const bool unitary = is_unitary(shift_matrix_D(alpha));
  json al = json::array();
  for (std::size_t k = 0; k < alpha.size(); ++k) {
    al.push_back({{"exact", io::to_json(alpha[k])}, {"float", io::complex_json(alpha[k].to_complex())}});
    const auto z = alpha[k].to_complex();
    r.table.push_back({std::to_string(k), fmt(z.real()), fmt(z.imag())});
  }
  r.passed = unitary;
  r.body = {{"s", s}, {"path", "exact"}, {"alpha", al}, {"unitary", unitary}};
  return r;
}

Result decompose_cmd(const JobConfig& c) {
  Result r;
  const MBF f = io::mbf_from_json(read_json(c.input));
  if (f.prime() != 2 || f.dim() != 1) throw UsageError("decompose works on 1-D functions over Q_2");
  const MBF psi = psi_from_config(c);
  const Decomposition d = decompose(f, c.j0, psi);
  const bool round_trip = reconstruct(d, psi) == f;
  const bool parseval = coefficient_energy(d) == inner_product(f, f);
  r.passed = round_trip && parseval;
  r.body = {{"decomposition", io::to_json(d)}, {"reconstructs", round_trip}, {"parseval", parseval}};
  r.table.push_back({"kind", "j", "a", "coef_re", "coef_im"});
  for (const auto& [a, v] : d.v) {
    const auto z = v.to_complex();
    r.table.push_back({"v", std::to_string(d.j0), a.str(), fmt(z.real()), fmt(z.imag())});
  }
  for (const auto& [ja, v] : d.w) {
    const auto z = v.to_complex();
    r.table.push_back({"w", std::to_string(ja.first), ja.second.str(), fmt(z.real()), fmt(z.imag())});
  }
  return r;
}

std::vector<std::vector<std::string>> mbf_table(const MBF& f) {
  std::vector<std::vector<std::string>> t{{"term", "coef_re", "coef_im", "gamma"}};
  for (std::size_t i = 0; i < f.terms().size(); ++i) {
    const auto z = f.terms()[i].coef.to_complex();
    t.push_back({std::to_string(i), fmt(z.real()), fmt(z.imag()), std::to_string(f.terms()[i].ball.gamma())});
  }
  return t;
}

Result reconstruct_cmd(const JobConfig& c) {
  Result r;
  json in = read_json(c.input);
  if (in.contains("decomposition")) in = in.at("decomposition");
  const MBF f = reconstruct(io::decomposition_from_json(in), psi_from_config(c));
  r.body = {{"function", io::to_json(f)}};
  r.table = mbf_table(f);
  return r;
}

Result apply_op(const JobConfig& c) {
  Result r;
  if (c.j.empty()) throw UsageError("--j needs a level");
  const MBF f = io::mbf_from_json(read_json(c.input));
  const std::vector<bool> e = e_mask(c, f.dim());
  JobConfig local = c;
  local.p = f.prime();
  const Symbol a = parse_symbol(local, f.dim(), e, c.j.front());
  const PowerMBF g = apply(a, f);
  r.body = {{"symbol", a.name()}, {"result", io::to_json(g)}};
  r.table.push_back({"grade_re", "grade_im", "terms"});
  for (const auto& [w, h] : g.parts()) r.table.push_back({w.re.get_str(), w.im.get_str(), std::to_string(h.terms().size())});
  return r;
}

Result check_eigen(const JobConfig& c) {
  Result r;
  if (c.e.empty()) throw UsageError("--e is required");
  if (c.j.empty()) throw UsageError("--j needs a level");
  std::size_t n = c.n;
  for (int v : c.e) n = std::max(n, static_cast<std::size_t>(std::max(v, 0)));
  WaveletIndex idx;
  idx.p = c.p;
  idx.n = n;
  idx.j = c.j.front();
  idx.e = e_mask(c, n);
  idx.s.assign(n, 0);
  idx.gamma.assign(n, std::nullopt);
  const BasisConfig cfg = basis_config(c, n);
  for (std::size_t v = 0; v < n; ++v) {
    if (!idx.e[v] || cfg.s.empty()) continue;
    idx.s[v] = cfg.s[v];
    idx.gamma[v] = cfg.gamma[v];
  }
  if (c.a.empty()) {
    idx.a = PAdicVector(c.p, n);
  } else {
    if (c.a.size() != n) throw UsageError("--a needs n coordinates");
    idx.a = PAdicVector::parse(c.p, c.a);
  }
  const Symbol a = parse_symbol(c, n, idx.e, idx.j);
  const EigenReport rep = eigen_report(a, idx);
  r.passed = rep.direct && rep.consistent();
  r.body = {{"symbol", a.name()},      {"index", io::to_json(idx)},   {"criterion", rep.criterion},
            {"direct", rep.direct},     {"consistent", rep.consistent()}, {"eigenvalue", io::to_json(rep.value)}};
  const auto z = rep.value.to_complex();
  r.table = {{"criterion", "direct", "eigen_re", "eigen_im"},
             {rep.criterion ? "true" : "false", rep.direct ? "true" : "false", fmt(z.real()), fmt(z.imag())}};
  return r;
}

Result enumerate_real(const JobConfig& c) {
  Result r;
  json rows = json::array();
  r.table.push_back({"family", "theta", "k", "alpha"});
  auto emit = [&](const std::string& family, const std::string& theta, int s, const std::vector<Angle>& angles,
                  const std::vector<Cyclo>& expected) {
    const auto alpha = alpha_coeffs(real_gamma(s, angles));
    const bool matches = alpha == expected;
    bool real = true;
    for (const auto& x : alpha) real = real && x.is_real();
    const bool unitary = is_unitary(shift_matrix_D(alpha));
    r.passed = r.passed && matches && real && unitary;
    json al = json::array();
    for (std::size_t k = 0; k < alpha.size(); ++k) {
      al.push_back({{"exact", io::to_json(alpha[k])}, {"float", alpha[k].to_complex().real()}});
      r.table.push_back({family, theta, std::to_string(k), fmt(alpha[k].to_complex().real())});
    }
    rows.push_back({{"family", family}, {"theta", theta}, {"s", s}, {"alpha", al},
                    {"closed_form", matches}, {"real", real}, {"unitary", unitary}});
  };
  for (const auto& t : c.theta) {
    const Angle th = parse_angle(t);
    emit("s1", t, 1, {th}, real_alpha_closed_form(1, {th}));
    emit("opposite", t, 2, real_preset_angles(RealPreset::kOpposite, th), real_preset_closed_form(RealPreset::kOpposite, th));
    emit("equal", t, 2, real_preset_angles(RealPreset::kEqual, th), real_preset_closed_form(RealPreset::kEqual, th));
    emit("quarter", t, 2, real_preset_angles(RealPreset::kQuarter, th), real_preset_closed_form(RealPreset::kQuarter, th));
  }
  r.body = {{"rows", rows}};
  return r;
}

void write_output(const JobConfig& c, const Result& res, std::ostream& out) {
  std::ostringstream text;
  if (c.format == "csv") {
    for (const auto& row : res.table) {
      for (std::size_t i = 0; i < row.size(); ++i) text << (i ? "," : "") << row[i];
      text << '\n';
    }
  } else {
    json doc = res.body;
    doc["schema"] = io::kSchema;
    doc["command"] = c.command;
    doc["passed"] = res.passed;
    text << doc.dump(2) << '\n';
  }
  if (c.output.empty() || c.output == "-") {
    out << text.str();
    return;
  }
  std::ofstream file(c.output);
  if (!file) throw UsageError("cannot write " + c.output);
  file << text.str();
}

const CLI::Validator kPrime(
    [](std::string& v) -> std::string {
      long p = 0;
      try {
        p = std::stol(v);
      } catch (const std::exception&) {
        return "not an integer: " + v;
      }
      if (p < 2) return "p must be prime";
      for (long d = 2; d * d <= p; ++d) {
        if (p % d == 0) return "p must be prime";
      }
      return {};
    },
    "PRIME");

void add_basis_options(CLI::App* sub, JobConfig& c) {
  sub->add_option("--p", c.p, "prime")->check(kPrime);
  sub->add_option("--n", c.n, "dimension");
  sub->add_option("--j", c.j, "levels")->expected(0, -1)->allow_extra_args();
  sub->add_option("--gamma-max", c.gamma_max, "shift truncation |a| <= p^gamma_max");
  sub->add_option("--s", c.s, "s per coordinate (one value applies to all)");
  sub->add_option("--gamma", c.gamma, "comma separated gamma angles (fractions of a turn) per coordinate");
  sub->add_option("--family", c.family, "tensor or kozyrev")->check(CLI::IsMember({"tensor", "kozyrev"}));
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  JobConfig c;
  CLI::App app{"exact p-adic wavelet toolkit"};
  app.set_config("--config", "", "TOML key/value file; command line flags take precedence");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--output", c.output, "output path (default stdout)");

  auto* gen = app.add_subcommand("gen-basis", "emit the enumerated wavelet table");
  add_basis_options(gen, c);

  auto* ortho = app.add_subcommand("check-orthonormal", "Gram matrix equals the identity");
  add_basis_options(ortho, c);
  ortho->add_option("--k", c.k, "Kozyrev indices k");
  ortho->add_option("--scale", c.scale, "multiply the first function by this rational");

  auto* refine = app.add_subcommand("check-refinement", "phi = sum_r phi(x/p - r/p)");
  refine->add_option("--p", c.p, "prime")->check(kPrime);

  auto* unitary = app.add_subcommand("check-unitary", "shift matrix D for given gamma");
  unitary->add_option("--s", c.s, "s");
  unitary->add_option("--gamma", c.gamma, "2^s exact angles, comma separated");
  unitary->add_option("--gamma-float", c.gamma_float, "2^s float angles (fractions of a turn), comma separated");
  unitary->add_option("--perturb", c.perturb, "double gamma_r for this r");

  auto* dec = app.add_subcommand("decompose", "MBF JSON in, decomposition JSON out");
  dec->add_option("--input", c.input, "MBF JSON path or -");
  dec->add_option("--j0", c.j0, "base level");
  dec->add_option("--s", c.s, "wavelet s (0: psi0)");
  dec->add_option("--gamma", c.gamma, "gamma angles for s > 0");

  auto* rec = app.add_subcommand("reconstruct", "decomposition JSON in, MBF JSON out");
  rec->add_option("--input", c.input, "decomposition JSON path or -");
  rec->add_option("--s", c.s, "wavelet s (0: psi0)");
  rec->add_option("--gamma", c.gamma, "gamma angles for s > 0");

  auto* op = app.add_subcommand("apply-op", "apply a symbol to an MBF");
  op->add_option("--symbol", c.symbol, "fractional:alpha=<re>[,<im>] | constant:<q> | two-valued-test")->required();
  op->add_option("--input", c.input, "MBF JSON path or -");
  op->add_option("--e", c.e, "coordinates for two-valued-test");
  op->add_option("--j", c.j, "level for two-valued-test");

  auto* eig = app.add_subcommand("check-eigen", "criterion, direct verification and eigenvalue");
  eig->add_option("--symbol", c.symbol, "symbol, as for apply-op")->required();
  eig->add_option("--e", c.e, "wavelet coordinates (1-based)");
  eig->add_option("--n", c.n, "dimension (default: largest coordinate in --e)");
  eig->add_option("--j", c.j, "level");
  eig->add_option("--s", c.s, "s per coordinate");
  eig->add_option("--gamma", c.gamma, "gamma angles per coordinate");
  eig->add_option("--a", c.a, "shift coordinates");

  auto* real = app.add_subcommand("enumerate-real", "tables of the real one-parameter families");
  real->add_option("--theta", c.theta, "angles as fractions of a turn");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& ex) {
    err << "error: " << ex.what() << '\n';
    return kExitUsage;
  }

  try {
    Result res;
    if (gen->parsed()) {
      c.command = "gen-basis";
      res = gen_basis(c);
    } else if (ortho->parsed()) {
      c.command = "check-orthonormal";
      res = check_orthonormal(c);
    } else if (refine->parsed()) {
      c.command = "check-refinement";
      res = check_refinement_cmd(c);
    } else if (unitary->parsed()) {
      c.command = "check-unitary";
      res = check_unitary(c);
    } else if (dec->parsed()) {
      c.command = "decompose";
      res = decompose_cmd(c);
    } else if (rec->parsed()) {
      c.command = "reconstruct";
      res = reconstruct_cmd(c);
    } else if (op->parsed()) {
      c.command = "apply-op";
      res = apply_op(c);
    } else if (eig->parsed()) {
      c.command = "check-eigen";
      res = check_eigen(c);
    } else {
      c.command = "enumerate-real";
      res = enumerate_real(c);
    }
    write_output(c, res, out);
    return res.passed ? kExitOk : kExitAssertion;
  } catch (const UsageError& ex) {
    err << "error: " << ex.what() << '\n';
  } catch (const std::invalid_argument& ex) {
    err << "error: " << ex.what() << '\n';
  } catch (const std::domain_error& ex) {
    err << "error: " << ex.what() << '\n';
  }
  return kExitUsage;
}

}  // namespace qpw::cli
