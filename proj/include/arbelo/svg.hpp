#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "arbelo/arbelos.hpp"
#include "arbelo/conic.hpp"

namespace arbelo {

enum class ConstructKind {
  Twins,
  ICircle,
  CousinICircle,
  TwinCousins,
  Humble,
  Siblings,
  Duals,
  Loci,
};

struct SceneSpec {
  double r1 = 2.0;
  double r2 = 1.0;
  std::set<ConstructKind> constructions;
  bool show_conics = false;
  bool show_witnesses = false;
  Tolerance tol;
};

struct SvgStyle {
  double canvas = 800.0;
  double margin = 0.05;    // fraction of the outer diameter
  double stroke = 1.5;
  std::map<std::string, std::string> colors = {
      {"twin_1", "#DAA520"},        {"twin_2", "#DAA520"},
      {"icircle", "#800020"},       {"cousin_icircle", "#1F6FB2"},
      {"twin_cousin_1", "#1F3FB2"}, {"twin_cousin_2", "#1F3FB2"},
      {"humble", "#800020"},        {"sibling", "#888888"},
      {"dual", "#E07B00"},          {"conic", "#7B2D8B"},
  };
};

/// Computed scene: the arbelos skeleton, verified constructions, and the
/// optional auxiliary objects (siblings, dual circles, locus conics).
struct SceneResult {
  Arbelos arbelos{2.0, 1.0};
  std::vector<Construction> constructions;
  std::vector<std::pair<std::string, Circle>> extra_circles;
  std::vector<std::pair<std::string, Conic>> conics;
};

SceneResult build_scene(const SceneSpec& spec);

/// Deterministic SVG 1.1 document: byte-identical for identical input.
std::string render_svg(const SceneResult& scene, const SceneSpec& spec,
                       const SvgStyle& style = {});

}  // namespace arbelo
