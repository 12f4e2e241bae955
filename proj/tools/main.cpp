#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>

#include "wpgeom/errors.hpp"
#include "wpgeom/runner.hpp"
#include "wpgeom/verify.hpp"

namespace {

int cmd_list() {
  for (const auto& name : wpgeom::catalog_names()) {
    if (name == "quadratic") {
      std::cout << "quadratic          any n   complete, locally symmetric; "
                   "flat Yukawa coupling\n";
    } else if (name == "cubic") {
      std::cout << "cubic              n = 1   parameter c (default 0.1); "
                   "nontrivial Yukawa coupling\n";
    } else if (name == "quartic-perturbed") {
      std::cout << "quartic-perturbed  n <= 3  quadratic plus user cubic/"
                   "quartic monomials\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"special-geometry verification suites over prepotential slices"};
  app.require_subcommand(1);

  int order = 6;
  std::uint64_t seed = 12345;
  double tol_identity = 1e-8;
  double tol_ineq = 1e-6;
  std::string out_dir = ".";
  std::string format = "json";
  auto* opt_order =
      app.add_option("--order", order, "jet order of the expansion (default 6)");
  auto* opt_seed =
      app.add_option("--seed", seed, "seed for sampling and directions");
  auto* opt_tid =
      app.add_option("--tol-identity", tol_identity, "identity tolerance");
  auto* opt_tin =
      app.add_option("--tol-ineq", tol_ineq, "inequality tolerance");
  auto* opt_out =
      app.add_option("--out", out_dir, "output directory for reports");
  auto* opt_fmt = app.add_option("--format", format, "report format: json or csv")
                      ->check(CLI::IsMember({"json", "csv"}));

  auto* list = app.add_subcommand("list", "list the prepotential catalog");

  auto* check =
      app.add_subcommand("check", "run the full suite on a catalog entry");
  std::string entry_name;
  int entry_n = 1;
  double entry_c = 0.1;
  check->add_option("entry", entry_name, "catalog entry name")->required();
  check->add_option("--n", entry_n, "moduli dimension (quadratic entry)");
  check->add_option("--c", entry_c, "cubic coefficient (cubic entry)");

  auto* run = app.add_subcommand("run", "run an explicit config file");
  std::string config_path;
  run->add_option("config", config_path, "path to a JSON config")->required();

  auto* bound = app.add_subcommand(
      "bound", "maximum-principle bound max(1, ((c2+c3)/c1)^(1/alpha))");
  double c1 = 0, c2 = 0, c3 = 0, alpha = 0;
  bound->add_option("c1", c1)->required();
  bound->add_option("c2", c2)->required();
  bound->add_option("c3", c3)->required();
  bound->add_option("alpha", alpha)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*list) return cmd_list();

    if (*bound) {
      std::cout.precision(17);
      std::cout << wpgeom::max_principle_bound(c1, c2, c3, alpha) << "\n";
      return 0;
    }

    wpgeom::RunConfig cfg;
    if (*check) {
      nlohmann::json entry_json;
      entry_json["catalog"] = entry_name;
      if (entry_name == "quadratic" || entry_name == "quartic-perturbed")
        entry_json["params"] = {{"n", entry_n}};
      else if (entry_name == "cubic")
        entry_json["params"] = {{"c", {entry_c, 0.0}}};
      cfg = wpgeom::default_config(wpgeom::load_prepotential(entry_json));
      cfg.echo = {{"entry", entry_json}, {"suites", "all"}};
    } else {
      std::ifstream in(config_path);
      if (!in) {
        std::cerr << "cannot open config: " << config_path << "\n";
        return 2;
      }
      nlohmann::json doc;
      try {
        doc = nlohmann::json::parse(in);
      } catch (const nlohmann::json::parse_error& err) {
        std::cerr << "config parse error: " << err.what() << "\n";
        return 2;
      }
      cfg = wpgeom::parse_run_config(doc);
    }

    // flags override config-file values only when given
    if (*check || opt_order->count()) cfg.options.order = order;
    if (*check || opt_seed->count()) {
      cfg.options.seed = seed;
      cfg.samples.seed = seed;
    }
    if (*check || opt_tid->count()) cfg.options.tol_identity = tol_identity;
    if (*check || opt_tin->count()) cfg.options.tol_inequality = tol_ineq;
    if (*check || opt_out->count()) cfg.out_dir = out_dir;
    if (*check || opt_fmt->count()) cfg.format = format;

    const wpgeom::RunResult result = wpgeom::run_suite_to_files(cfg);
    std::cout << result.summary;
    return result.exit_status;
  } catch (const wpgeom::ConfigError& err) {
    std::cerr << "config error: " << err.what() << "\n";
    return 2;
  } catch (const wpgeom::Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  }
}
