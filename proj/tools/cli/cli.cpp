#include "cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fbh/automorphism.hpp"
#include "fbh/domain.hpp"
#include "fbh/errors.hpp"
#include "fbh/geodesic.hpp"
#include "fbh/kobayashi.hpp"
#include "fbh/rootsolve.hpp"
#include "fbh/schwarz.hpp"
#include "fbh/verify.hpp"
#include "json_writer.hpp"

namespace fbh::cli {

namespace {

enum class Level { error = 0, info = 1, debug = 2 };

class Log {
 public:
  explicit Log(std::ostream& err) : err_(err) {
    const char* env = std::getenv("FBH_LOG");
    const std::string v = env ? env : "error";
    if (v == "info") level_ = Level::info;
    else if (v == "debug") level_ = Level::debug;
  }
  void error(const std::string& msg) const { err_ << "fbh: error: " << msg << '\n'; }
  void info(const std::string& msg) const {
    if (level_ >= Level::info) err_ << "fbh: " << msg << '\n';
  }
  void debug(const std::string& msg) const {
    if (level_ >= Level::debug) err_ << "fbh: debug: " << msg << '\n';
  }

 private:
  std::ostream& err_;
  Level level_ = Level::error;
};

bool parse_real(std::string_view s, double& out) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s.empty()) return false;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), out);
  return res.ec == std::errc() && res.ptr == s.data() + s.size();
}

Complex complex_arg(const std::string& text, const char* flag) {
  const auto z = parse_complex(text);
  if (!z) throw InvalidArgument(std::string(flag) + ": cannot parse '" + text + "' as re+imi");
  return *z;
}

// Writes `text` to `path` or, when empty, to `out`.
void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InvalidArgument("cannot open '" + path + "' for writing");
  file << text;
}

std::string csv_row(std::initializer_list<double> xs) {
  std::string row;
  for (double x : xs) {
    if (!row.empty()) row += ',';
    row += format_double(x);
  }
  return row + '\n';
}

void write_metric(JsonWriter& j, const MetricResult& r) {
  j.field("K", r.k);
  j.field("K2", r.k_squared);
  j.field("branch", to_string(r.branch));
  j.field("v", r.v);
  j.field("alpha_roots", std::span<const double>(r.alpha_roots));
  j.field("beta", r.beta);
}

struct MetricArgs {
  double b = 0.0;
  std::string x = "0", y = "0";
  std::string out;
};

struct MetricAtArgs {
  std::string z = "0", w = "0", dz = "0", dw = "0";
  std::string out;
};

struct TableArgs {
  double b = 0.5;
  int n = 512;
  std::string out;
};

struct GeodesicArgs {
  std::string family;
  std::string a2 = "0.3", alpha2 = "0";
  std::uint64_t seed = 0;
  int n = 1;
  int samples = 256;
  std::string out;
};

struct SchwarzArgs {
  int n = 1, m = 1;
  std::string map;
  double tol = 1e-8;
  std::string out;
};

struct VerifyArgs {
  std::string suite = "all";
  int trials = 1000;
  std::uint64_t seed = 42;
  int workers = 1;
  double tol = 0.0;
  std::string details = "failures";
  std::string out;
};

int cmd_metric(const MetricArgs& a, std::ostream& out) {
  const MetricResult r =
      metric_normal(a.b, complex_arg(a.x, "--X"), complex_arg(a.y, "--Y"));
  JsonWriter j;
  j.begin_object();
  write_metric(j, r);
  j.end_object();
  emit(j.str(), a.out, out);
  return kOk;
}

int cmd_metric_at(const MetricAtArgs& a, std::ostream& out) {
  const Point p = Point::d11(complex_arg(a.z, "--z"), complex_arg(a.w, "--w"));
  const TangentVector v = TangentVector::d11(complex_arg(a.dz, "--dz"), complex_arg(a.dw, "--dw"));
  const MetricResult r = metric(p, v);
  JsonWriter j;
  j.begin_object();
  write_metric(j, r);
  j.field("b", reduce_to_normal_position(p).b);
  j.end_object();
  emit(j.str(), a.out, out);
  return kOk;
}

int cmd_gfun(const TableArgs& a, std::ostream& out) {
  if (a.n < 2) throw InvalidArgument("--n must be at least 2");
  const double tmax = rootsolve::t_max(a.b);
  std::string csv = "t,g\n";
  for (int k = 0; k < a.n; ++k) {
    const double t = k + 1 == a.n ? tmax : tmax * k / (a.n - 1);
    csv += csv_row({t, rootsolve::g_function(a.b, t)});
  }
  emit(csv, a.out, out);
  return kOk;
}

int cmd_hfun(const TableArgs& a, std::ostream& out) {
  if (a.n < 1) throw InvalidArgument("--n must be positive");
  const double tmax = rootsolve::t_max(a.b);
  std::string csv = "t,h\n";
  for (int k = 0; k < a.n; ++k) {
    const double t = tmax * (k + 1) / (a.n + 1);
    csv += csv_row({t, rootsolve::h_function(a.b, t)});
  }
  emit(csv, a.out, out);
  return kOk;
}

int cmd_geodesic(const GeodesicArgs& a, std::ostream& out, const Log& log) {
  geodesic::GeodesicParams params;
  if (!a.family.empty()) {
    const auto family = geodesic::family_from_string(a.family);
    if (!family) throw InvalidArgument("--family must be one of A, B, C, D");
    const geodesic::CandidateFamily fam = geodesic::make_family(
        *family, complex_arg(a.a2, "--a2"), complex_arg(a.alpha2, "--alpha2"));
    const auto problems = geodesic::validate(fam);
    if (!problems.empty()) {
      std::string msg = "inadmissible family parameters:";
      for (const auto& p : problems) msg += " [" + p + "]";
      throw InvalidArgument(msg);
    }
    params = geodesic::to_params(fam);
  } else {
    if (a.n < 1) throw InvalidArgument("--n must be positive");
    params = geodesic::sample_admissible(a.seed, a.n);
    log.info("sampled parameters for n=" + std::to_string(a.n) +
             (params.blaschke ? " with a Blaschke factor" : ""));
  }
  if (a.samples < 1) throw InvalidArgument("--samples must be positive");

  const DomainSig sig{params.n, 1};
  std::string csv = "theta";
  for (int j = 0; j < sig.n; ++j) {
    const std::string idx = std::to_string(j + 1);
    csv += ",re_z" + idx + ",im_z" + idx;
  }
  csv += ",re_w,im_w,rho_residual\n";
  for (int k = 0; k < a.samples; ++k) {
    const double theta = 2.0 * std::numbers::pi * k / a.samples;
    const Point p = geodesic::evaluate(params, std::polar(1.0, theta)).point;
    std::string row = format_double(theta);
    const CVector s = p.stacked();
    for (Eigen::Index j = 0; j < s.size(); ++j) {
      row += ',' + format_double(s(j).real()) + ',' + format_double(s(j).imag());
    }
    csv += row + ',' + format_double(defining_value(sig, p)) + '\n';
  }
  emit(csv, a.out, out);
  return kOk;
}

int cmd_schwarz(const SchwarzArgs& a, std::ostream& out) {
  if (a.n < 1 || a.m < 1) throw InvalidArgument("--n and --m must be positive");
  const DomainSig target{a.n, a.m};
  std::vector<schwarz::MapUnderTest> maps;
  for (auto& map : schwarz::builtin_examples(target)) {
    if (a.map.empty() || map.label == a.map) maps.push_back(std::move(map));
  }
  if (maps.empty()) throw InvalidArgument("no built-in map labelled '" + a.map + "'");

  bool all_pass = true;
  JsonWriter j;
  j.begin_object();
  j.key("target").begin_array().value(a.n).value(a.m).end_array();
  j.field("tol", a.tol);
  j.key("reports").begin_array();
  for (const auto& map : maps) {
    const schwarz::SchwarzReport r = schwarz::audit(map, a.tol);
    all_pass = all_pass && r.pass_i && r.pass_ii;
    j.begin_object();
    j.field("label", r.label);
    j.field("lambda", r.lambda);
    j.field("lambda_imag", r.lambda_imag);
    j.field("lower_bound", r.lower_bound);
    j.field("normal_residual", r.normal_residual);
    j.field("dh1_dz", r.dh1_dz);
    j.field("tangential_norm", r.tangential_norm);
    j.field("sqrt_lambda", r.sqrt_lambda);
    j.field("pass_i", r.pass_i);
    j.field("pass_ii", r.pass_ii);
    j.end_object();
  }
  j.end_array();
  j.field("pass", all_pass);
  j.end_object();
  emit(j.str(), a.out, out);
  return all_pass ? kOk : kVerificationFailed;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out, const Log& log) {
  if (a.trials < 1) throw InvalidArgument("--trials must be positive");
  if (a.details != "failures" && a.details != "all" && a.details != "none") {
    throw InvalidArgument("--details must be failures, all or none");
  }
  verify::SuiteOptions opts;
  opts.seed = a.seed;
  opts.trials = a.trials;
  opts.tol = a.tol;
  opts.workers = a.workers;

  const auto reports = verify::run_suite(a.suite, opts);
  long long total = 0;
  JsonWriter j;
  j.begin_object();
  j.field("seed", static_cast<unsigned long long>(a.seed));
  j.field("trials", a.trials);
  j.key("suites").begin_array();
  for (const auto& r : reports) {
    total += r.failures;
    log.info("suite " + r.suite + ": " + std::to_string(r.failures) + " failures");
    j.begin_object();
    j.field("suite", r.suite);
    j.field("trials", r.trials);
    j.field("failures", r.failures);
    j.field("worst_residual", r.worst_residual);
    j.field("seed", static_cast<unsigned long long>(r.seed));
    j.field("tol", r.tol);
    j.key("stats").begin_object();
    for (const auto& [name, value] : r.stats) j.field(name, value);
    j.end_object();
    j.key("details").begin_array();
    for (const auto& d : r.details) {
      if (a.details == "none" || (a.details == "failures" && d.ok && r.suite != "seams")) {
        continue;
      }
      j.begin_object();
      j.field("index", d.index);
      j.field("kind", d.kind);
      j.field("residual", d.residual);
      j.field("value", d.value);
      j.field("ok", d.ok);
      j.field("note", d.note);
      j.end_object();
    }
    j.end_array();
    j.end_object();
  }
  j.end_array();
  j.field("failures", total);
  j.field("pass", total == 0);
  j.end_object();
  emit(j.str(), a.out, out);
  if (total > 0) log.error(std::to_string(total) + " verification failures");
  return total == 0 ? kOk : kVerificationFailed;
}

}  // namespace

std::optional<Complex> parse_complex(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.empty()) return std::nullopt;
  if (text.back() != 'i') {
    double re = 0.0;
    if (!parse_real(text, re)) return std::nullopt;
    return Complex(re, 0.0);
  }
  text.remove_suffix(1);
  // The split is the last sign that is neither leading nor an exponent sign.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = text.size(); k-- > 1;) {
    if ((text[k] == '+' || text[k] == '-') && text[k - 1] != 'e' && text[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  const std::string_view re_part = split == std::string_view::npos ? "" : text.substr(0, split);
  std::string_view im_part = split == std::string_view::npos ? text : text.substr(split);
  double re = 0.0;
  double im = 0.0;
  if (!re_part.empty() && !parse_real(re_part, re)) return std::nullopt;
  if (im_part.empty() || im_part == "+") {
    im = 1.0;
  } else if (im_part == "-") {
    im = -1.0;
  } else {
    const bool negative = im_part.front() == '-';
    if (negative) im_part.remove_prefix(1);
    if (!parse_real(im_part, im)) return std::nullopt;
    if (negative) im = -im;
  }
  return Complex(re, im);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  const Log log(err);
  CLI::App app{"Kobayashi metric, geodesics and boundary Schwarz audits on D_{n,m}", "fbh"};
  app.require_subcommand(1, 1);

  MetricArgs metric_args;
  auto* metric_cmd = app.add_subcommand("metric", "Metric at the normal-position point (0, b)");
  metric_cmd->add_option("--b", metric_args.b, "Base point modulus in [0, 1)")->required();
  metric_cmd->add_option("--X", metric_args.x, "z-component of the vector");
  metric_cmd->add_option("--Y", metric_args.y, "w-component of the vector");
  metric_cmd->add_option("--out", metric_args.out, "Output file");

  MetricAtArgs at_args;
  auto* at_cmd = app.add_subcommand("metric-at", "Metric at an arbitrary point of D_{1,1}");
  at_cmd->add_option("--z", at_args.z)->required();
  at_cmd->add_option("--w", at_args.w)->required();
  at_cmd->add_option("--dz", at_args.dz);
  at_cmd->add_option("--dw", at_args.dw);
  at_cmd->add_option("--out", at_args.out, "Output file");

  TableArgs g_args;
  auto* g_cmd = app.add_subcommand("gfun", "Tabulate g on [0, -2 ln b]");
  g_cmd->add_option("--b", g_args.b)->required();
  g_cmd->add_option("--n", g_args.n, "Number of rows");
  g_cmd->add_option("--out", g_args.out, "Output file");

  TableArgs h_args;
  auto* h_cmd = app.add_subcommand("hfun", "Tabulate h on the open interval (0, -2 ln b)");
  h_cmd->add_option("--b", h_args.b)->required();
  h_cmd->add_option("--n", h_args.n, "Number of rows");
  h_cmd->add_option("--out", h_args.out, "Output file");

  GeodesicArgs geo_args;
  auto* geo_cmd = app.add_subcommand("geodesic", "Boundary trace of a geodesic disk");
  geo_cmd->add_option("--family", geo_args.family, "Candidate family A, B, C or D in D_{1,1}");
  geo_cmd->add_option("--a2", geo_args.a2);
  geo_cmd->add_option("--alpha2", geo_args.alpha2);
  geo_cmd->add_option("--seed", geo_args.seed, "Sample admissible parameters instead");
  geo_cmd->add_option("--n", geo_args.n, "Dimension n of D_{n,1} when sampling");
  geo_cmd->add_option("--samples", geo_args.samples, "Boundary angles");
  geo_cmd->add_option("--out", geo_args.out, "Output file");

  SchwarzArgs sch_args;
  auto* sch_cmd = app.add_subcommand("schwarz", "Audit the built-in maps D_{1,1} -> D_{n,m}");
  sch_cmd->add_option("--n", sch_args.n);
  sch_cmd->add_option("--m", sch_args.m);
  sch_cmd->add_option("--map", sch_args.map, "Only the map with this label");
  sch_cmd->add_option("--tol", sch_args.tol);
  sch_cmd->add_option("--out", sch_args.out, "Output file");

  VerifyArgs ver_args;
  auto* ver_cmd = app.add_subcommand("verify", "Run oracle suites");
  ver_cmd->add_option("--suite", ver_args.suite,
                      "all, jacobians, invariance, dominance, bridge, boundary or seams");
  ver_cmd->add_option("--trials", ver_args.trials);
  ver_cmd->add_option("--seed", ver_args.seed);
  ver_cmd->add_option("--workers", ver_args.workers);
  ver_cmd->add_option("--tol", ver_args.tol, "Override the suite tolerance (0 keeps defaults)");
  ver_cmd->add_option("--details", ver_args.details, "failures, all or none");
  ver_cmd->add_option("--out", ver_args.out, "Output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*metric_cmd) return cmd_metric(metric_args, out);
    if (*at_cmd) return cmd_metric_at(at_args, out);
    if (*g_cmd) return cmd_gfun(g_args, out);
    if (*h_cmd) return cmd_hfun(h_args, out);
    if (*geo_cmd) return cmd_geodesic(geo_args, out, log);
    if (*sch_cmd) return cmd_schwarz(sch_args, out);
    if (*ver_cmd) return cmd_verify(ver_args, out, log);
  } catch (const NumericFailure& e) {
    log.error(e.what());
    return kNumericFailure;
  } catch (const MapHypothesisViolation& e) {
    log.error(e.what());
    return kVerificationFailed;
  } catch (const InvalidArgument& e) {
    log.error(e.what());
    return kUsage;
  } catch (const std::exception& e) {
    log.error(e.what());
    return kNumericFailure;
  }
  return kUsage;
}

}  // namespace fbh::cli
