#include "arbelo/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "arbelo/tangents.hpp"

namespace arbelo {

namespace {

std::string fmt9(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

struct Frame {
  double half = 1.0;   // world half-extent
  double scale = 1.0;  // world -> pixel
  double canvas = 800.0;

  double X(double wx) const { return (wx + half) * scale; }
  double Y(double wy) const { return (half - wy) * scale; }  // y flipped
};

void emit_circle(std::ostringstream& out, const Frame& f, const Circle& c,
                 const std::string& name, const std::string& color,
                 double stroke, const std::string& extra_attrs = {}) {
  out << "  <circle cx=\"" << fmt9(f.X(c.center.x)) << "\" cy=\""
      << fmt9(f.Y(c.center.y)) << "\" r=\"" << fmt9(c.radius * f.scale)
      << "\" fill=\"none\" stroke=\"" << color << "\" stroke-width=\""
      << fmt9(stroke) << "\" data-name=\"" << name << "\"" << extra_attrs
      << "/>\n";
}

void emit_conic(std::ostringstream& out, const Frame& f, const Conic& k,
                const std::string& name, const std::string& color,
                double stroke) {
  double s = k.directrix().signed_distance(k.focus());
  Vec u = (s > 0.0 ? -k.directrix().normal : k.directrix().normal);
  double d0 = std::abs(s);
  double clip = 4.0 * f.half;

  auto emit_branch = [&](bool far_branch) {
    std::vector<std::vector<Point>> runs(1);
    for (int i = 0; i < 256; ++i) {
      double alpha = -M_PI + (i + 0.5) * 2.0 * M_PI / 256.0;
      double ca = std::cos(alpha), sa = std::sin(alpha);
      double den = far_branch ? k.eccentricity() * ca - 1.0
                              : 1.0 + k.eccentricity() * ca;
      bool ok = den > 1e-9;
      Point p;
      if (ok) {
        double r = k.eccentricity() * d0 / den;
        Vec dir = u * ca + u.perp() * sa;
        if (far_branch) dir = -dir;
        p = k.focus() + dir * r;
        ok = std::abs(p.x) <= clip && std::abs(p.y) <= clip;
      }
      if (ok)
        runs.back().push_back(p);
      else if (!runs.back().empty())
        runs.emplace_back();
    }
    for (const auto& run : runs) {
      if (run.size() < 2) continue;
      out << "  <polyline fill=\"none\" stroke=\"" << color
          << "\" stroke-width=\"" << fmt9(stroke) << "\" data-name=\"" << name
          << "\" points=\"";
      for (size_t i = 0; i < run.size(); ++i) {
        if (i) out << ' ';
        out << fmt9(f.X(run[i].x)) << ',' << fmt9(f.Y(run[i].y));
      }
      out << "\"/>\n";
    }
  };

  emit_branch(false);
  if (k.kind() == ConicKind::Hyperbola) emit_branch(true);
}

void emit_marker(std::ostringstream& out, const Frame& f, Point p,
                 const std::string& name) {
  out << "  <circle cx=\"" << fmt9(f.X(p.x)) << "\" cy=\"" << fmt9(f.Y(p.y))
      << "\" r=\"3\" fill=\"#333333\" data-witness=\"" << name << "\"/>\n";
}

}  // namespace

SceneResult build_scene(const SceneSpec& spec) {
  SceneResult scene{Arbelos(spec.r1, spec.r2), {}, {}, {}};
  const Arbelos& a = scene.arbelos;
  const Tolerance& tol = spec.tol;
  auto has = [&](ConstructKind k) { return spec.constructions.count(k) > 0; };

  if (has(ConstructKind::Twins)) {
    auto [t1, t2] = construct_twins(a, tol);
    scene.constructions.push_back(std::move(t1));
    scene.constructions.push_back(std::move(t2));
  }
  if (has(ConstructKind::ICircle))
    scene.constructions.push_back(construct_icircle(a, tol));
  if (has(ConstructKind::CousinICircle))
    scene.constructions.push_back(
        construct_cousin_icircle(make_doubling_arbelos(a), tol));
  if (has(ConstructKind::TwinCousins)) {
    auto [c1, c2] = construct_twin_cousins(make_doubling_arbelos(a), tol);
    scene.constructions.push_back(std::move(c1));
    scene.constructions.push_back(std::move(c2));
  }
  if (has(ConstructKind::Humble))
    scene.constructions.push_back(construct_humble_circle(a, tol));

  if (has(ConstructKind::Siblings)) {
    Siblings s = siblings(a);
    scene.extra_circles.emplace_back("sibling_1", s.s1);
    scene.extra_circles.emplace_back("sibling_2", s.s2);
  }
  if (has(ConstructKind::CousinICircle) || has(ConstructKind::TwinCousins)) {
    auto d = make_doubling_arbelos(a);
    scene.extra_circles.emplace_back("big_1", d.big1);
    scene.extra_circles.emplace_back("big_2", d.big2);
  }
  if (has(ConstructKind::Duals)) {
    for (int side : {1, 2}) {
      TwinDuals td = dual_circles_for_twin(a, side, tol);
      std::string suffix = side == 1 ? "_1" : "_2";
      scene.extra_circles.emplace_back("dual_ellipse" + suffix, td.ellipse_dual);
      scene.extra_circles.emplace_back("dual_parabola" + suffix,
                                       td.parabola_dual);
    }
  }
  if (has(ConstructKind::Loci) || spec.show_conics) {
    scene.conics.emplace_back(
        "ellipse_1", ellipse_locus(a.outer(), a.inner1(), tol));
    scene.conics.emplace_back(
        "ellipse_2", ellipse_locus(a.outer(), a.inner2(), tol));
    scene.conics.emplace_back(
        "parabola_1", parabola_locus(a.inner1(), a.tangent_line(), tol));
    scene.conics.emplace_back(
        "parabola_2", parabola_locus(a.inner2(), a.tangent_line(), tol));
  }
  return scene;
}

std::string render_svg(const SceneResult& scene, const SceneSpec& spec,
                       const SvgStyle& style) {
  const Arbelos& a = scene.arbelos;
  double rw = a.r1() + a.r2();
  // Doubling circles can spill past the outer circle; grow the viewport.
  double extent = rw;
  for (const auto& [name, c] : scene.extra_circles) {
    extent = std::max(extent, std::abs(c.center.x) + c.radius);
    extent = std::max(extent, std::abs(c.center.y) + c.radius);
  }
  Frame f;
  f.half = extent * (1.0 + 2.0 * style.margin);
  f.canvas = style.canvas;
  f.scale = style.canvas / (2.0 * f.half);

  auto color_of = [&](const std::string& name) -> std::string {
    auto it = style.colors.find(name);
    if (it != style.colors.end()) return it->second;
    if (name.rfind("sibling", 0) == 0) return style.colors.at("sibling");
    if (name.rfind("dual", 0) == 0) return style.colors.at("dual");
    if (name.rfind("big", 0) == 0) return "#BBBBBB";
    return "#555555";
  };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
      << fmt9(f.canvas) << "\" height=\"" << fmt9(f.canvas)
      << "\" viewBox=\"0 0 " << fmt9(f.canvas) << ' ' << fmt9(f.canvas)
      << "\">\n";

  // Arbelos skeleton.
  out << "  <line x1=\"0\" y1=\"" << fmt9(f.Y(0.0)) << "\" x2=\""
      << fmt9(f.canvas) << "\" y2=\"" << fmt9(f.Y(0.0))
      << "\" stroke=\"#AAAAAA\" stroke-width=\"1\" data-name=\"baseline\"/>\n";
  out << "  <line x1=\"" << fmt9(f.X(a.M().x)) << "\" y1=\"0\" x2=\""
      << fmt9(f.X(a.M().x)) << "\" y2=\"" << fmt9(f.canvas)
      << "\" stroke=\"#AAAAAA\" stroke-width=\"1\" data-name=\"tangent_l\"/>\n";
  emit_circle(out, f, a.outer(), "outer", "#777777", style.stroke);
  emit_circle(out, f, a.inner1(), "inner_1", "#777777", style.stroke);
  emit_circle(out, f, a.inner2(), "inner_2", "#777777", style.stroke);

  for (const auto& [name, c] : scene.extra_circles) {
    std::string dash =
        name.rfind("dual", 0) == 0 ? " stroke-dasharray=\"4 3\"" : "";
    emit_circle(out, f, c, name, color_of(name), style.stroke * 0.8, dash);
  }

  for (const auto& [name, k] : scene.conics)
    emit_conic(out, f, k, name, style.colors.at("conic"), style.stroke * 0.7);

  for (const auto& con : scene.constructions) {
    double worst = 0.0;
    for (const auto& tc : con.constraints)
      worst = std::max(worst, tc.residual(con.circle));
    std::string attrs = " data-max-residual=\"" + fmt9(worst) + "\"";
    emit_circle(out, f, con.circle, con.name, color_of(con.name), style.stroke,
                attrs);
    if (spec.show_witnesses)
      for (const auto& [wname, wp] : con.point_witnesses)
        emit_marker(out, f, wp, con.name + "." + wname);
  }

  out << "</svg>\n";
  return out.str();
}

}  // namespace arbelo
