#include "wpgeom/runner.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "wpgeom/errors.hpp"
#include "wpgeom/siegel.hpp"

namespace wpgeom {

const std::vector<std::string>& all_suites() {
  static const std::vector<std::string> names = {
      "hodge-riemann",    "horizontality",      "theorem12",
      "yukawa-estimates", "ricci-crosscheck",   "curvature-crossengine",
      "parallel-curvature", "siegel"};
  return names;
}

namespace {

SampleSpec parse_samples(const nlohmann::json& j) {
  SampleSpec spec;
  if (!j.is_object()) throw ConfigError("samples: expected an object");
  const std::string mode = j.value("mode", std::string("random"));
  if (mode == "random") {
    spec.mode = SampleSpec::Mode::kRandom;
    spec.count = j.value("count", 20);
    if (spec.count < 1) throw ConfigError("samples.count: must be >= 1");
    spec.seed = j.value("seed", static_cast<std::uint64_t>(12345));
    spec.radius = j.value("radius", 0.0);
  } else if (mode == "grid") {
    spec.mode = SampleSpec::Mode::kGrid;
    if (!j.contains("axes")) throw ConfigError("samples.axes: missing");
    for (const auto& ax : j["axes"]) {
      SampleSpec::Axis axis;
      if (ax.contains("re")) {
        axis.re_min = ax["re"][0].get<double>();
        axis.re_max = ax["re"][1].get<double>();
        axis.re_count = ax["re"][2].get<int>();
      }
      if (ax.contains("im")) {
        axis.im_min = ax["im"][0].get<double>();
        axis.im_max = ax["im"][1].get<double>();
        axis.im_count = ax["im"][2].get<int>();
      }
      if (axis.re_count < 1 || axis.im_count < 1)
        throw ConfigError("samples.axes: counts must be >= 1");
      spec.axes.push_back(axis);
    }
  } else {
    throw ConfigError("samples.mode: unknown mode '" + mode + "'");
  }
  return spec;
}

}  // namespace

RunConfig parse_run_config(const nlohmann::json& j) {
  RunConfig cfg;
  cfg.echo = j;

  if (!j.contains("entry")) throw ConfigError("entry: missing");
  cfg.entry = load_prepotential(j["entry"]);

  if (j.contains("samples")) cfg.samples = parse_samples(j["samples"]);

  if (j.contains("suites")) {
    if (j["suites"].is_string() && j["suites"] == "all") {
      cfg.suites = all_suites();
    } else if (j["suites"].is_array()) {
      for (const auto& s : j["suites"]) {
        const std::string name = s.get<std::string>();
        const auto& known = all_suites();
        if (std::find(known.begin(), known.end(), name) == known.end())
          throw ConfigError("suites: unknown suite name '" + name + "'");
        cfg.suites.push_back(name);
      }
    } else {
      throw ConfigError("suites: expected \"all\" or an array of names");
    }
  } else {
    cfg.suites = all_suites();
  }
  // canonical execution order regardless of listing order
  std::vector<std::string> ordered;
  for (const auto& name : all_suites())
    if (std::find(cfg.suites.begin(), cfg.suites.end(), name) !=
        cfg.suites.end())
      ordered.push_back(name);
  cfg.suites = ordered;

  cfg.options.order = j.value("order", 6);
  if (cfg.options.order < 3) throw ConfigError("order: must be >= 3");
  cfg.options.seed = j.value("seed", static_cast<std::uint64_t>(12345));
  if (j.contains("tolerances")) {
    const auto& t = j["tolerances"];
    cfg.options.tol_identity = t.value("identity", 1e-8);
    cfg.options.tol_inequality = t.value("inequality", 1e-6);
    cfg.options.tol_exact = t.value("exact", 1e-10);
  }
  cfg.options.directions = j.value("directions", 64);
  cfg.out_dir = j.value("out", std::string("."));
  cfg.format = j.value("format", std::string("json"));
  if (cfg.format != "json" && cfg.format != "csv")
    throw ConfigError("format: expected \"json\" or \"csv\"");
  return cfg;
}

RunConfig default_config(const CatalogEntry& entry) {
  RunConfig cfg;
  cfg.entry = entry;
  cfg.suites = all_suites();
  cfg.echo = {{"entry", {{"catalog", entry.name}}}, {"suites", "all"}};
  return cfg;
}

namespace {

bool wants(const RunConfig& cfg, const std::string& suite) {
  return std::find(cfg.suites.begin(), cfg.suites.end(), suite) !=
         cfg.suites.end();
}

// The siegel suite: tau symmetry, Im tau positivity at every accepted point,
// and monotone decay of min eig(Im tau) along a real ray toward the boundary
// of the validity ball.
std::vector<ClaimReport> run_siegel_suite(const RunConfig& cfg,
                                          const ScanResult& scan) {
  const auto& opt = cfg.options;
  ClaimReport sym;
  sym.suite = "siegel";
  sym.claim = "tau-symmetric";
  sym.paper_anchor = "siegel:symmetry";
  sym.tolerance = opt.tol_exact;
  ClaimReport pos;
  pos.suite = "siegel";
  pos.claim = "im-tau-positive";
  pos.paper_anchor = "siegel:positivity";
  pos.tolerance = opt.tol_exact;

  for (const auto& z : scan.accepted) {
    const SiegelPoint sp = siegel_embed(z, cfg.entry);
    sym.points.push_back({z, -sp.symmetry_defect});
    pos.points.push_back({z, sp.min_im_eigenvalue});
  }

  ClaimReport ray;
  ray.suite = "siegel";
  ray.claim = "boundary-decay";
  ray.paper_anchor = "siegel:boundary";
  ray.tolerance = opt.tol_exact;
  const double rmax = std::sqrt(2.0) - 1e-2;
  double prev = std::numeric_limits<double>::infinity();
  for (int k = 0; k < 5; ++k) {
    std::vector<Complex> z(cfg.entry.n, Complex(0.0, 0.0));
    z[0] = Complex(0.3 + (rmax - 0.3) * k / 4.0, 0.0);
    const SiegelPoint sp = siegel_embed(z, cfg.entry);
    ray.points.push_back({z, prev - sp.min_im_eigenvalue});
    prev = sp.min_im_eigenvalue;
  }

  sym.finalize();
  pos.finalize();
  ray.finalize();
  return {sym, pos, ray};
}

nlohmann::ordered_json complex_to_json(const Complex& c) {
  return nlohmann::ordered_json::array({c.real(), c.imag()});
}

}  // namespace

RunResult run_suites(const RunConfig& cfg) {
  RunResult result;
  result.scan = domain_scan(cfg.entry, cfg.samples);

  const bool needs_contexts =
      wants(cfg, "hodge-riemann") || wants(cfg, "horizontality") ||
      wants(cfg, "theorem12") || wants(cfg, "yukawa-estimates") ||
      wants(cfg, "ricci-crosscheck") || wants(cfg, "curvature-crossengine") ||
      wants(cfg, "parallel-curvature");
  std::vector<PointContext> contexts;
  if (needs_contexts)
    contexts =
        make_point_contexts(cfg.entry.u, result.scan.accepted, cfg.options.order);

  for (const auto& suite : cfg.suites) {
    std::vector<ClaimReport> claims;
    if (suite == "hodge-riemann") {
      claims = verify_hodge_riemann_suite(contexts, cfg.options);
    } else if (suite == "horizontality") {
      claims = {verify_horizontality_suite(contexts, cfg.options)};
    } else if (suite == "theorem12") {
      claims = verify_theorem12(contexts, cfg.options);
    } else if (suite == "yukawa-estimates") {
      claims =
          verify_yukawa_estimates(contexts, cfg.entry.complete, cfg.options);
    } else if (suite == "ricci-crosscheck") {
      claims = {cross_check_ricci(contexts, cfg.options)};
    } else if (suite == "curvature-crossengine") {
      claims = {verify_cross_engine(contexts, cfg.options)};
    } else if (suite == "parallel-curvature") {
      claims = {verify_parallel_curvature(
          contexts, cfg.entry.parallel_curvature, cfg.options)};
    } else if (suite == "siegel") {
      if (cfg.entry.name == "quadratic")
        claims = run_siegel_suite(cfg, result.scan);
      // silently skipped for entries without a Siegel image
    }
    result.claims.insert(result.claims.end(), claims.begin(), claims.end());
  }

  result.all_pass = true;
  for (const auto& c : result.claims)
    if (c.asserted && !c.pass) result.all_pass = false;
  result.exit_status = result.all_pass ? 0 : 1;
  result.report = report_document(cfg, result);

  std::ostringstream os;
  os << std::left << std::setw(22) << "suite" << std::setw(30) << "claim"
     << std::setw(13) << "min margin" << std::setw(11) << "tolerance"
     << std::setw(9) << "status" << "\n";
  os << std::string(85, '-') << "\n";
  for (const auto& c : result.claims) {
    os << std::left << std::setw(22) << c.suite << std::setw(30) << c.claim
       << std::setw(13) << std::scientific << std::setprecision(3)
       << c.min_margin() << std::setw(11) << c.tolerance << std::setw(9)
       << (c.pass ? "pass" : (c.asserted ? "FAIL" : "info")) << "\n";
  }
  os << std::string(85, '-') << "\n";
  os << "accepted points: " << result.scan.accepted.size()
     << "  rejected: " << result.scan.rejected.size()
     << "  overall: " << (result.all_pass ? "PASS" : "FAIL") << "\n";
  result.summary = os.str();
  return result;
}

nlohmann::ordered_json report_document(const RunConfig& cfg,
                                       const RunResult& result) {
  nlohmann::ordered_json doc;
  doc["schema_version"] = 1;
  doc["config_echo"] = cfg.echo;
  doc["entry"] = {{"name", cfg.entry.name},
                  {"n", cfg.entry.n},
                  {"complete", cfg.entry.complete}};
  doc["seed"] = cfg.options.seed;
  doc["order"] = cfg.options.order;
  if (cfg.entry.name == "quadratic") doc["siegel_sign"] = siegel_sign();

  nlohmann::ordered_json suites = nlohmann::ordered_json::array();
  for (const auto& c : result.claims) {
    nlohmann::ordered_json claim;
    claim["suite"] = c.suite;
    claim["claim"] = c.claim;
    claim["paper_anchor"] = c.paper_anchor;
    claim["tolerance"] = c.tolerance;
    claim["asserted"] = c.asserted;
    nlohmann::ordered_json pts = nlohmann::ordered_json::array();
    for (const auto& p : c.points) {
      nlohmann::ordered_json pj;
      nlohmann::ordered_json z = nlohmann::ordered_json::array();
      for (const auto& zc : p.z) z.push_back(complex_to_json(zc));
      pj["z"] = z;
      pj["margin"] = p.margin;
      pts.push_back(pj);
    }
    claim["points"] = pts;
    claim["min_margin"] = c.min_margin();
    claim["pass"] = c.pass;
    suites.push_back(claim);
  }
  doc["per_suite"] = suites;

  nlohmann::ordered_json rejects = nlohmann::ordered_json::array();
  for (const auto& r : result.scan.rejected) {
    nlohmann::ordered_json rj;
    nlohmann::ordered_json z = nlohmann::ordered_json::array();
    for (const auto& zc : r.z) z.push_back(complex_to_json(zc));
    rj["z"] = z;
    rj["reason"] = r.reason;
    rejects.push_back(rj);
  }

  int n_pass = 0, n_fail = 0, n_info = 0;
  for (const auto& c : result.claims) {
    if (!c.asserted)
      ++n_info;
    else if (c.pass)
      ++n_pass;
    else
      ++n_fail;
  }
  doc["summary"] = {{"accepted_points", result.scan.accepted.size()},
                    {"rejections", rejects},
                    {"asserted_pass", n_pass},
                    {"asserted_fail", n_fail},
                    {"informational", n_info},
                    {"all_pass", result.all_pass}};
  return doc;
}

std::string report_csv(const RunResult& result) {
  std::ostringstream os;
  os << "suite,claim,paper_anchor,point_index,z,margin,tolerance,asserted,pass\n";
  os << std::setprecision(17);
  for (const auto& c : result.claims) {
    for (std::size_t i = 0; i < c.points.size(); ++i) {
      os << c.suite << ',' << c.claim << ',' << c.paper_anchor << ',' << i
         << ',' << '"';
      for (std::size_t k = 0; k < c.points[i].z.size(); ++k) {
        if (k) os << ' ';
        os << c.points[i].z[k].real() << ' ' << c.points[i].z[k].imag();
      }
      os << '"' << ',' << c.points[i].margin << ',' << c.tolerance << ','
         << (c.asserted ? 1 : 0) << ',' << (c.pass ? 1 : 0) << "\n";
    }
  }
  return os.str();
}

RunResult run_suite_to_files(const RunConfig& cfg) {
  RunResult result = run_suites(cfg);
  namespace fs = std::filesystem;
  fs::create_directories(cfg.out_dir);
  if (cfg.format == "json") {
    std::ofstream out(fs::path(cfg.out_dir) / "report.json");
    if (!out) throw Error("cannot write report.json under " + cfg.out_dir);
    out << result.report.dump(2) << "\n";
  } else {
    std::ofstream out(fs::path(cfg.out_dir) / "report.csv");
    if (!out) throw Error("cannot write report.csv under " + cfg.out_dir);
    out << report_csv(result);
  }
  std::ofstream sum(fs::path(cfg.out_dir) / "summary.txt");
  if (!sum) throw Error("cannot write summary.txt under " + cfg.out_dir);
  sum << result.summary;
  return result;
}

}  // namespace wpgeom
