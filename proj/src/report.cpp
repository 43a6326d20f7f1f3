#include "arbelo/report.hpp"

#include <json.hpp>

namespace arbelo {

std::string write_report(const std::vector<VerificationReport>& reports,
                         double r1, double r2, const Tolerance& tol) {
  nlohmann::ordered_json doc;
  doc["r1"] = r1;
  doc["r2"] = r2;
  doc["tolerance"] = {{"length_eps", tol.length_eps},
                      {"residual_eps", tol.residual_eps},
                      {"rel_eps", tol.rel_eps}};
  doc["constructions"] = nlohmann::ordered_json::array();
  for (const auto& rep : reports) {
    nlohmann::ordered_json c;
    c["name"] = rep.name;
    c["center"] = {rep.center.x, rep.center.y};
    c["radius"] = rep.radius;
    c["expected_radius"] = rep.expected_radius;
    c["radius_rel_error"] = rep.radius_rel_error;
    c["constraints"] = nlohmann::ordered_json::array();
    for (const auto& cr : rep.constraints)
      c["constraints"].push_back({{"target", cr.target},
                                  {"kind", cr.kind},
                                  {"residual", cr.residual}});
    c["identities"] = nlohmann::ordered_json::array();
    for (const auto& id : rep.identities)
      c["identities"].push_back({{"name", id.name},
                                 {"lhs", id.lhs},
                                 {"rhs", id.rhs},
                                 {"abs_error", id.abs_error}});
    c["status"] = rep.passed ? "passed" : "failed";
    doc["constructions"].push_back(std::move(c));
  }
  return doc.dump(2) + "\n";
}

}  // namespace arbelo
