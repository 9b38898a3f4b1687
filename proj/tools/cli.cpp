#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "drkernel/random.hpp"
#include "drkernel/serialization.hpp"

namespace drkernel::cli {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

double parse_double(std::string_view s) {
  s = trim(s);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) throw Error("not a number: '" + std::string(s) + "'");
  return value;
}

int parse_int(std::string_view s) {
  s = trim(s);
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) throw Error("not an integer: '" + std::string(s) + "'");
  return value;
}

Vector parse_list(std::string_view s, int expected, const char* name) {
  if (trim(s).empty()) return Vector::Zero(expected);
  const auto parts = split(s, ',');
  if (static_cast<int>(parts.size()) != expected) {
    throw Error(std::string(name) + " needs " + std::to_string(expected) + " components, got " +
                std::to_string(parts.size()));
  }
  Vector v(expected);
  for (int i = 0; i < expected; ++i) v(i) = parse_double(parts[static_cast<std::size_t>(i)]);
  return v;
}

// "key=value;key=value" -> map
std::map<std::string, std::string, std::less<>> parse_assignments(std::string_view text) {
  std::map<std::string, std::string, std::less<>> out;
  for (std::string_view item : split(text, ';')) {
    if (item.empty()) continue;
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos) throw Error("expected key=value, got '" + std::string(item) + "'");
    out.emplace(std::string(trim(item.substr(0, eq))), std::string(trim(item.substr(eq + 1))));
  }
  return out;
}

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

GroupPoint random_point(Sampler& rng, const Algebra& alg, const RunConfig& cfg) {
  GroupPoint x;
  x.V = rng.box(alg.k(), cfg.coordinate_scale);
  x.Y = rng.box(alg.m(), cfg.coordinate_scale);
  x.a = rng.uniform(cfg.a_min, cfg.a_max);
  return x;
}

BoundaryPoint random_theta(Sampler& rng, const Algebra& alg, const RunConfig& cfg) {
  Vector v = rng.box(alg.k(), cfg.coordinate_scale);
  Vector y = rng.box(alg.m(), cfg.coordinate_scale);
  return BoundaryPoint::finite(std::move(v), std::move(y));
}

void print_vector(std::ostream& out, const Vector& v) {
  out << '[';
  for (Eigen::Index i = 0; i < v.size(); ++i) out << (i ? ", " : "") << v(i);
  out << ']';
}

}  // namespace

void RunConfig::validate() const {
  irreducible_module_dim(algebra.m);
  if (algebra.multiplicity < 1) throw Error("multiplicity must be at least 1");
  if (algebra.multiplicity * irreducible_module_dim(algebra.m) > kMaxVDim) throw Error("dimension overflow");
  if (points < 1) throw Error("--points must be at least 1");
  if (!(coordinate_scale > 0.0)) throw Error("--scale must be positive");
  if (!(a_min > 0.0) || !(a_max >= a_min)) throw Error("a range must be positive and ordered");
  if (threads < 0) throw Error("thread count must be non-negative");
  fd.validate();
}

AlgebraDescriptor parse_algebra(std::string_view text) {
  const auto parts = split(text, ',');
  if (parts.size() != 2) throw Error("--algebra expects m,multiplicity");
  return {parse_int(parts[0]), parse_int(parts[1])};
}

ThetaMode parse_theta_mode(std::string_view text) {
  text = trim(text);
  if (text == "infinity" || text == "inf") return ThetaMode::Infinity;
  if (text == "random") return ThetaMode::Random;
  if (text.find('=') != std::string_view::npos) return ThetaMode::Fixed;
  throw Error("--theta expects infinity, random or v=...;y=...");
}

BoundaryPoint parse_fixed_theta(const Algebra& alg, std::string_view text) {
  const auto kv = parse_assignments(text);
  for (const auto& [key, value] : kv) {
    if (key != "v" && key != "y") throw Error("unknown theta component '" + key + "'");
  }
  const auto v = kv.find("v");
  const auto y = kv.find("y");
  return BoundaryPoint::finite(parse_list(v == kv.end() ? "" : v->second, alg.k(), "v"),
                               parse_list(y == kv.end() ? "" : y->second, alg.m(), "y"));
}

GroupPoint parse_point(const Algebra& alg, std::string_view text) {
  const auto kv = parse_assignments(text);
  for (const auto& [key, value] : kv) {
    if (key != "V" && key != "Y" && key != "a") throw Error("unknown point component '" + key + "'");
  }
  GroupPoint x;
  const auto V = kv.find("V");
  const auto Y = kv.find("Y");
  const auto a = kv.find("a");
  x.V = parse_list(V == kv.end() ? "" : V->second, alg.k(), "V");
  x.Y = parse_list(Y == kv.end() ? "" : Y->second, alg.m(), "Y");
  x.a = a == kv.end() ? 1.0 : parse_double(a->second);
  validate(alg, x);
  return x;
}

std::vector<SampledPair> sample_pairs(const Algebra& alg, const RunConfig& cfg) {
  Sampler rng(cfg.seed);
  std::vector<SampledPair> out;
  out.reserve(static_cast<std::size_t>(cfg.points));
  const BoundaryPoint fixed =
      cfg.theta_mode == ThetaMode::Fixed ? parse_fixed_theta(alg, cfg.theta_text) : BoundaryPoint::infinity();
  for (int i = 0; i < cfg.points; ++i) {
    SampledPair pair;
    pair.x = random_point(rng, alg, cfg);
    switch (cfg.theta_mode) {
      case ThetaMode::Infinity:
        pair.theta = BoundaryPoint::infinity();
        break;
      case ThetaMode::Fixed:
        pair.theta = fixed;
        break;
      case ThetaMode::Random: {
        BoundaryPoint finite = random_theta(rng, alg, cfg);
        pair.theta = rng.unit() < 0.1 ? BoundaryPoint::infinity() : std::move(finite);
        break;
      }
    }
    out.push_back(std::move(pair));
  }
  return out;
}

VerifyResult run_verification(const RunConfig& cfg) {
  cfg.validate();
  const Algebra alg = make_algebra(cfg.algebra);
  const std::vector<SampledPair> pairs = sample_pairs(alg, cfg);

  VerifyResult result;
  result.identities = check_gh_identities(alg, kAlgebraSuiteTrials, kAlgebraSuiteTol, cfg.seed);
  result.identities_pass = result.identities.passed();
  result.axioms = check_group_axioms(alg, kAlgebraSuiteTrials, cfg.seed + 1, cfg.coordinate_scale);
  result.axioms_pass = result.axioms.worst() < kAlgebraSuiteTol;

  CheckTolerances tol;
  tol.fd = cfg.fd;
  result.records.resize(pairs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < pairs.size(); i = next++) {
      result.records[i] = evaluate_point(alg, pairs[i].x, pairs[i].theta, tol, static_cast<int>(i));
    }
  };
  unsigned n_threads = cfg.threads > 0 ? static_cast<unsigned>(cfg.threads) : std::thread::hardware_concurrency();
  n_threads = std::clamp(n_threads, 1u, static_cast<unsigned>(pairs.size()));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);
  }

  result.pass = result.identities_pass && result.axioms_pass &&
                std::all_of(result.records.begin(), result.records.end(), [](const HessianReport& r) { return r.pass; });
  return result;
}

std::string render_json(const RunConfig& cfg, const VerifyResult& result) {
  using nlohmann::json;
  const Algebra alg = make_algebra(cfg.algebra);
  json records = json::array();
  std::map<std::string, int> cases{{"inf", 0}, {"VY0", 0}, {"V0", 0}, {"Y0", 0}, {"general", 0}};
  int passed = 0;
  double worst_oracle = 0.0;
  double min_complement = std::numeric_limits<double>::infinity();
  for (const HessianReport& r : result.records) {
    records.push_back(r);
    ++cases[std::string(to_string(r.point_case))];
    passed += r.pass ? 1 : 0;
    worst_oracle = std::max(worst_oracle, r.max_oracle_diff);
    min_complement = std::min(min_complement, r.min_on_complement);
  }
  json identities = json::array();
  for (double v : result.identities.max_residual) identities.push_back(v);

  json doc;
  doc["config"] = json{{"algebra", cfg.algebra},
                       {"k", alg.k()},
                       {"m", alg.m()},
                       {"seed", cfg.seed},
                       {"points", cfg.points},
                       {"theta", cfg.theta_text},
                       {"scale", cfg.coordinate_scale},
                       {"a_range", json::array({cfg.a_min, cfg.a_max})},
                       {"h", cfg.fd.h},
                       {"tol_hess", cfg.fd.tol_hess}};
  doc["records"] = std::move(records);
  doc["summary"] = json{
      {"records", result.records.size()},
      {"passed", passed},
      {"failed", static_cast<int>(result.records.size()) - passed},
      {"cases", cases},
      {"max_oracle_diff", worst_oracle},
      {"min_on_complement", min_complement},
      {"algebra_identities", json{{"max_residual", identities}, {"pass", result.identities_pass}}},
      {"group_axioms", json{{"identity", result.axioms.identity},
                            {"associativity", result.axioms.associativity},
                            {"inverse", result.axioms.inverse},
                            {"metric_compatibility", result.axioms.metric_compatibility},
                            {"torsion", result.axioms.torsion},
                            {"pass", result.axioms_pass}}},
      {"pass", result.pass}};
  return doc.dump(2) + "\n";
}

std::string render_csv(const VerifyResult& result) {
  std::ostringstream os;
  os << "id,case,min_eig_complement,max_oracle_diff,eq20_residual,eq21_residual,detB_closed,pass\n";
  double min_complement = std::numeric_limits<double>::infinity();
  double worst_oracle = 0.0, worst20 = 0.0, worst21 = 0.0;
  double min_det = std::numeric_limits<double>::infinity();
  for (const HessianReport& r : result.records) {
    os << r.id << ',' << to_string(r.point_case) << ',' << fmt(r.min_on_complement) << ',' << fmt(r.max_oracle_diff)
       << ',';
    if (r.blocks) {
      os << fmt(r.blocks->eq20) << ',' << fmt(r.blocks->eq21) << ',' << fmt(r.blocks->detB_closed);
      worst20 = std::max(worst20, r.blocks->eq20);
      worst21 = std::max(worst21, r.blocks->eq21);
      min_det = std::min(min_det, r.blocks->detB_closed);
    } else {
      os << ",,";
    }
    os << ',' << (r.pass ? "true" : "false") << '\n';
    min_complement = std::min(min_complement, r.min_on_complement);
    worst_oracle = std::max(worst_oracle, r.max_oracle_diff);
  }
  os << "summary,all," << fmt(min_complement) << ',' << fmt(worst_oracle) << ',' << fmt(worst20) << ','
     << fmt(worst21) << ',' << (std::isfinite(min_det) ? fmt(min_det) : "") << ','
     << (result.pass ? "true" : "false") << '\n';
  return os.str();
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  VerifyResult result;
  try {
    result = run_verification(cfg);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  const std::string text = cfg.format == OutputFormat::Json ? render_json(cfg, result) : render_csv(result);
  if (cfg.output.empty()) {
    out << text;
  } else {
    std::ofstream file(cfg.output, std::ios::binary);
    file << text;
    if (!file) {
      err << "error: cannot write " << cfg.output << '\n';
      return 2;
    }
  }
  const auto passed = std::count_if(result.records.begin(), result.records.end(),
                                    [](const HessianReport& r) { return r.pass; });
  err << "verify: " << passed << "/" << result.records.size() << " points passed; identities "
      << (result.identities_pass ? "ok" : "FAILED") << "; group axioms " << (result.axioms_pass ? "ok" : "FAILED")
      << '\n';
  for (const HessianReport& r : result.records) {
    if (!r.warning.empty()) err << "  warning: point " << r.id << ": " << r.warning << '\n';
    if (!r.pass) err << "  point " << r.id << " (" << to_string(r.point_case) << "): " << r.failure << '\n';
  }
  return result.pass ? 0 : 1;
}

int cmd_spectrum(const RunConfig& cfg, const std::string& point_text, std::ostream& out, std::ostream& err) {
  try {
    cfg.validate();
    const Algebra alg = make_algebra(cfg.algebra);
    Sampler rng(cfg.seed);
    const GroupPoint x = trim(point_text) == "random" ? random_point(rng, alg, cfg) : parse_point(alg, point_text);
    BoundaryPoint theta = BoundaryPoint::infinity();
    switch (cfg.theta_mode) {
      case ThetaMode::Infinity: break;
      case ThetaMode::Random: theta = random_theta(rng, alg, cfg); break;
      case ThetaMode::Fixed: theta = parse_fixed_theta(alg, cfg.theta_text); break;
    }

    CheckTolerances tol;
    tol.fd = cfg.fd;
    const HessianReport rep = evaluate_point(alg, x, theta, tol);

    out << std::setprecision(12);
    out << "algebra      m=" << alg.m() << " multiplicity=" << cfg.algebra.multiplicity << " (k=" << alg.k()
        << ", dim S=" << alg.dim() << ")\n";
    out << "point        V=";
    print_vector(out, x.V);
    out << " Y=";
    print_vector(out, x.Y);
    out << " a=" << x.a << '\n';
    if (theta.is_infinity()) {
      out << "theta        infinity\n";
    } else {
      out << "theta        v=";
      print_vector(out, theta.v());
      out << " y=";
      print_vector(out, theta.y());
      out << '\n';
      const BusemannState s = vy_state(alg, x, theta);
      out << "state        calV=";
      print_vector(out, s.calV);
      out << " calY=";
      print_vector(out, s.calY);
      out << " f=" << s.f << " F=" << s.F << '\n';
    }
    out << "busemann     " << busemann_value(alg, x, theta) << '\n';
    out << "case         " << to_string(rep.point_case) << '\n';
    out << "spectrum     ";
    print_vector(out, rep.spectrum);
    out << '\n';
    out << "multiplicity ";
    for (const EigenCluster& c : cluster_eigenvalues(rep.spectrum)) out << c.value << " x" << c.multiplicity << "  ";
    out << '\n';
    out << "min on grad(b)^perp  " << rep.min_on_complement << '\n';
    out << "|H grad(b)|          " << rep.kernel_residual << '\n';
    out << "oracle max diff      " << rep.max_oracle_diff << '\n';
    if (rep.blocks) {
      out << "eq20 residual        " << rep.blocks->eq20 << '\n';
      out << "eq21 residual        " << rep.blocks->eq21 << '\n';
      out << "tr(B1)               " << rep.blocks->trB1 << '\n';
      out << "det(calB) closed     " << rep.blocks->detB_closed << '\n';
      out << "det(calB) numeric    " << rep.blocks->detB_numeric << '\n';
    }
    out << "pass                 " << (rep.pass ? "true" : "false");
    if (!rep.pass) out << " (" << rep.failure << ')';
    out << '\n';
    return rep.pass ? 0 : 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

int cmd_algebras(std::ostream& out) {
  struct Family {
    AlgebraDescriptor d;
    const char* name;
  };
  const Family families[] = {
      {{1, 1}, "complex hyperbolic plane (Heisenberg)"},
      {{1, 2}, "complex hyperbolic space CH^3"},
      {{2, 1}, "non-symmetric Damek-Ricci space"},
      {{3, 1}, "quaternionic hyperbolic plane"},
      {{3, 2}, "quaternionic hyperbolic space HH^3"},
      {{7, 1}, "octonionic hyperbolic plane"},
  };
  out << "supported m: 1, 2, 3, 7; any multiplicity >= 1 (k = multiplicity * d(m), d = 2, 4, 4, 8)\n";
  for (const Family& f : families) {
    const int k = f.d.multiplicity * irreducible_module_dim(f.d.m);
    out << "(" << f.d.m << "," << f.d.multiplicity << ")  k=" << k << ", m=" << f.d.m << ", dim S=" << k + f.d.m + 1
        << "  " << f.name << '\n';
  }
  return 0;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Busemann-function Hessian verification on Damek-Ricci spaces", "drkernel"};
  app.set_help_flag("--help", "print help and exit");
  app.require_subcommand(1);

  RunConfig cfg;
  std::string algebra = "1,1";
  std::string format = "json";
  std::string point = "a=1";

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--algebra", algebra, "m,multiplicity (m in 1, 2, 3, 7)")->capture_default_str();
    sub->add_option("--seed", cfg.seed, "random seed")->envname("DRKERNEL_SEED")->capture_default_str();
    sub->add_option("--scale", cfg.coordinate_scale, "coordinate box for V, Y, v, y")->capture_default_str();
    sub->add_option("--h", cfg.fd.h, "finite-difference step")->capture_default_str();
    sub->add_option("--tol-hess", cfg.fd.tol_hess, "closed-form vs oracle tolerance")->capture_default_str();
  };

  CLI::App* verify = app.add_subcommand("verify", "run the full verification suite on sampled points");
  add_common(verify);
  verify->add_option("--points", cfg.points, "number of sampled (x, theta) pairs")->capture_default_str();
  verify->add_option("--theta", cfg.theta_text, "infinity | random | v=...;y=...")->capture_default_str();
  verify->add_option("--out", cfg.output, "output path (default stdout)");
  verify->add_option("--format", format, "json | csv")->capture_default_str();
  verify->add_option("--threads", cfg.threads, "worker threads (0 = all cores)")->capture_default_str();

  CLI::App* spectrum_cmd = app.add_subcommand("spectrum", "report one point in detail");
  add_common(spectrum_cmd);
  spectrum_cmd->add_option("--point", point, "V=...;Y=...;a=... or random")->capture_default_str();
  cfg.theta_text = "random";
  std::string spectrum_theta = "infinity";
  spectrum_cmd->add_option("--theta", spectrum_theta, "infinity | random | v=...;y=...")->capture_default_str();

  app.add_subcommand("algebras", "list supported algebra families");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help(e.get_name().empty() ? "" : e.get_name());
    return 0;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << '\n';
    return 2;
  }

  if (app.got_subcommand("algebras")) return cmd_algebras(out);

  try {
    cfg.algebra = parse_algebra(algebra);
    if (app.got_subcommand("spectrum")) cfg.theta_text = spectrum_theta;
    cfg.theta_mode = parse_theta_mode(cfg.theta_text);
    if (format == "json") {
      cfg.format = OutputFormat::Json;
    } else if (format == "csv") {
      cfg.format = OutputFormat::Csv;
    } else {
      throw Error("--format expects json or csv");
    }
    cfg.validate();
    if (cfg.theta_mode == ThetaMode::Fixed) parse_fixed_theta(make_algebra(cfg.algebra), cfg.theta_text);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  if (app.got_subcommand("spectrum")) return cmd_spectrum(cfg, point, out, err);
  return cmd_verify(cfg, out, err);
}

}  // namespace drkernel::cli
