#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "arbelo/report.hpp"
#include "arbelo/svg.hpp"

namespace {

using namespace arbelo;

const std::map<std::string, ConstructKind> kKinds = {
    {"twins", ConstructKind::Twins},
    {"icircle", ConstructKind::ICircle},
    {"cousin_icircle", ConstructKind::CousinICircle},
    {"twin_cousins", ConstructKind::TwinCousins},
    {"humble", ConstructKind::Humble},
    {"siblings", ConstructKind::Siblings},
    {"duals", ConstructKind::Duals},
    {"loci", ConstructKind::Loci},
};

std::set<ConstructKind> parse_constructions(const std::string& spec) {
  std::set<ConstructKind> out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    if (item == "all") {
      for (const auto& [name, kind] : kKinds) out.insert(kind);
      continue;
    }
    auto it = kKinds.find(item);
    if (it == kKinds.end())
      throw CLI::ValidationError("--construct",
                                 "unknown construction '" + item + "'");
    out.insert(it->second);
  }
  if (out.empty())
    throw CLI::ValidationError("--construct", "construction set is empty");
  return out;
}

bool write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot open '" << path << "' for writing\n";
    return false;
  }
  f << text;
  if (!f) {
    std::cerr << "error: write to '" << path << "' failed\n";
    return false;
  }
  return true;
}

int run_single(const SceneSpec& spec, const std::string& svg_path,
               const std::string& report_path) {
  SceneResult scene = build_scene(spec);
  std::vector<VerificationReport> reports;
  bool all_passed = true;
  for (const auto& c : scene.constructions) {
    reports.push_back(verify(c, spec.tol));
    all_passed = all_passed && reports.back().passed;
    std::cout << reports.back().name << ": "
              << (reports.back().passed ? "passed" : "failed")
              << " (radius " << reports.back().radius << ", expected "
              << reports.back().expected_radius << ")\n";
  }
  if (!report_path.empty()) {
    if (!write_file(report_path,
                    write_report(reports, spec.r1, spec.r2, spec.tol)))
      return 2;
  }
  if (!svg_path.empty()) {
    if (!write_file(svg_path, render_svg(scene, spec))) return 2;
  }
  return all_passed ? 0 : 1;
}

int run_sweep(SceneSpec spec, int sweep, unsigned long long seed,
              const std::string& report_path) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(0.1, 10.0);
  double max_constraint_residual = 0.0;
  double max_identity_error = 0.0;
  double max_radius_rel_error = 0.0;
  int failures = 0;
  for (int i = 0; i < sweep; ++i) {
    spec.r1 = dist(rng);
    spec.r2 = dist(rng);
    SceneResult scene = build_scene(spec);
    for (const auto& c : scene.constructions) {
      VerificationReport rep = verify(c, spec.tol);
      if (!rep.passed) ++failures;
      max_radius_rel_error =
          std::max(max_radius_rel_error, rep.radius_rel_error);
      for (const auto& cr : rep.constraints)
        max_constraint_residual =
            std::max(max_constraint_residual, cr.residual);
      for (const auto& id : rep.identities)
        max_identity_error = std::max(max_identity_error, id.abs_error);
    }
  }
  nlohmann::ordered_json agg;
  agg["samples"] = sweep;
  agg["seed"] = seed;
  agg["max_constraint_residual"] = max_constraint_residual;
  agg["max_identity_error"] = max_identity_error;
  agg["max_radius_rel_error"] = max_radius_rel_error;
  agg["failures"] = failures;
  std::string text = agg.dump(2) + "\n";
  if (!report_path.empty()) {
    if (!write_file(report_path, text)) return 2;
  } else {
    std::cout << text;
  }
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Arbelos constructions via pole-polar reciprocity"};
  double r1 = 0.0, r2 = 0.0, tol_override = 0.0;
  std::string construct = "all", svg_path, report_path;
  int sweep = 0;
  unsigned long long seed = 0;
  bool show_conics = false, show_witnesses = false;

  auto* opt_r1 = app.add_option("--r1", r1, "radius of the first inner circle");
  auto* opt_r2 = app.add_option("--r2", r2, "radius of the second inner circle");
  app.add_option("--construct", construct,
                 "comma-separated constructions or 'all'");
  app.add_option("--svg", svg_path, "write an SVG figure to this path");
  app.add_option("--report", report_path, "write a JSON report to this path");
  app.add_flag("--show-conics", show_conics, "draw the Apollonius loci");
  app.add_flag("--show-witnesses", show_witnesses,
               "mark construction intermediates");
  app.add_option("--tol", tol_override, "tangency residual bound");
  app.add_option("--sweep", sweep, "verify N random (R1,R2) pairs");
  app.add_option("--seed", seed, "sweep RNG seed");

  try {
    app.parse(argc, argv);

    SceneSpec spec;
    spec.constructions = parse_constructions(construct);
    spec.show_conics = show_conics;
    spec.show_witnesses = show_witnesses;
    if (tol_override != 0.0) {
      if (!(tol_override > 0.0))
        throw CLI::ValidationError("--tol", "tolerance must be positive");
      spec.tol.residual_eps = tol_override;
    }

    if (sweep > 0) return run_sweep(spec, sweep, seed, report_path);

    if (!*opt_r1 || !*opt_r2)
      throw CLI::ValidationError("--r1/--r2",
                                 "both radii are required (or use --sweep)");
    if (!(r1 > 0.0) || !(r2 > 0.0))
      throw CLI::ValidationError("--r1/--r2", "radius must be positive");
    spec.r1 = r1;
    spec.r2 = r2;
    return run_single(spec, svg_path, report_path);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::Error& e) {
    std::cerr << e.get_name() << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
