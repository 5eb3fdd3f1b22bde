// JSON serialization of sigma results, maximal-subgroup descriptors, and
// cover classifications. Masks serialize as hex strings (element 0 is the
// least significant bit).

#pragma once

#include <json.hpp>

#include "groupcover/theorem.hpp"

namespace groupcover {

inline nlohmann::json sigma_to_json(const GroupPtr& g, const SigmaResult& res) {
  nlohmann::json j;
  j["group"] = g->name();
  if (res.value.is_infinite())
    j["sigma"] = "infinity";
  else
    j["sigma"] = res.value.finite_value();
  j["members"] = nlohmann::json::array();
  if (res.witness)
    for (const Subgroup& m : res.witness->members) j["members"].push_back(m.members.to_hex());
  j["method"] = to_string(res.method);
  return j;
}

inline nlohmann::json cover_to_json(const Cover& cover) {
  nlohmann::json j;
  j["group"] = cover.parent->name();
  j["sigma"] = cover.members.size();
  j["members"] = nlohmann::json::array();
  for (const Subgroup& m : cover.members) j["members"].push_back(m.members.to_hex());
  j["method"] = "oracle";
  return j;
}

inline nlohmann::json descriptor_to_json(const MaximalDescriptor& d) {
  nlohmann::json j;
  if (const auto* sl = std::get_if<StandardLeftDesc>(&d.form)) {
    j["type"] = "standard_left";
    j["factor_subgroup_index"] = sl->factor_index;
  } else if (const auto* sr = std::get_if<StandardRightDesc>(&d.form)) {
    j["type"] = "standard_right";
    j["factor_subgroup_index"] = sr->factor_index;
  } else {
    const auto& dd = std::get<DiagonalDesc>(d.form);
    j["type"] = "diagonal";
    j["n1"] = dd.n1_index;
    j["n2"] = dd.n2_index;
    j["phi"] = dd.phi.map;
  }
  return j;
}

inline nlohmann::json classification_to_json(const CoverClassification& c) {
  nlohmann::json j;
  j["case"] = int(c.which);
  switch (c.which) {
    case CoverCase::kPrimeQuotient:
      j["p"] = c.p;
      if (c.n1 && c.n2) {
        j["n1_order"] = c.n1->size;
        j["n2_order"] = c.n2->size;
      } else {
        j["kernel_order"] = c.kernel->size;
      }
      break;
    case CoverCase::kFactorLeft:
    case CoverCase::kFactorRight:
      j["factor_cover_size"] = c.factor_cover->members.size();
      break;
    case CoverCase::kUnclassified:
      break;
  }
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

}  // namespace groupcover
