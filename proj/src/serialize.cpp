#include "arcdom/serialize.hpp"

#include <json.hpp>

namespace arcdom {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json arcs_json(const std::vector<Arc>& arcs) {
  ordered_json out = ordered_json::array();
  for (const Arc& a : arcs) out.push_back({a.tail, a.head});
  return out;
}

}  // namespace

std::string to_json(const DominationCertificate& cert, int indent) {
  ordered_json j;
  j["vertices"] = cert.dominators;
  j["target"] = cert.target;
  j["size"] = cert.size();
  j["optimal"] = cert.optimal;
  return j.dump(indent);
}

std::string to_json(const ArcDominationPlan& plan, int indent) {
  ordered_json j;
  j["gammaSet"] = plan.gamma_set;
  j["W"] = plan.partition.w;
  j["U"] = plan.partition.u;
  j["AS"] = arcs_json(plan.arc_cover_s);
  j["AD"] = arcs_json(plan.arc_cover_d);
  j["repairCase"] = plan.repair_case;
  j["resultArcs"] = arcs_json(plan.result_arcs);
  j["size"] = plan.size();
  j["bound"] = plan.bound.str();
  j["verified"] = plan.verified;
  return j.dump(indent);
}

std::string to_json(const CharacterizationCertificate& cert, int indent) {
  ordered_json j;
  j["v1"] = cert.singleton_classes;
  j["v2"] = cert.independent_classes;
  ordered_json blocks = ordered_json::array();
  for (const auto& block : cert.edge_blocks) {
    ordered_json b = ordered_json::array();
    for (const auto& [u, v] : block) b.push_back({u, v});
    blocks.push_back(b);
  }
  j["e"] = blocks;
  return j.dump(indent);
}

std::string error_json(const Error& e) {
  ordered_json j;
  j["error"]["kind"] = error_kind_name(e.kind());
  j["error"]["message"] = e.what();
  return j.dump();
}

}  // namespace arcdom
