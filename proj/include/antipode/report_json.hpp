#pragma once

// JSON renderings of reports. Every document carries "schema": "antipode-lab/1".

#include <json.hpp>

#include "antipode/constructions.hpp"
#include "antipode/cover.hpp"
#include "antipode/cover_io.hpp"
#include "antipode/search.hpp"

namespace antipode {

inline constexpr const char* kSchema = "antipode-lab/1";

inline nlohmann::ordered_json faces_to_json(const std::vector<Face>& faces) {
  auto arr = nlohmann::ordered_json::array();
  for (const Face& f : faces) arr.push_back(format_face(f));
  return arr;
}

inline nlohmann::ordered_json to_json(const AntipodalWitness& w) {
  return {{"set_index", w.set_index}, {"face_a", format_face(w.face_a)}, {"face_b", format_face(w.face_b)},
          {"k", w.k},                 {"sub_a", format_face(w.sub_a)},   {"sub_b", format_face(w.sub_b)}};
}

inline nlohmann::ordered_json cover_to_json(const Cover& c) {
  auto sets = nlohmann::ordered_json::array();
  for (const CoverSet& s : c.sets()) sets.push_back(faces_to_json(s.faces()));
  return {{"d", c.ambient()}, {"codim", c.codimension()}, {"sets", sets}, {"text", format_cover(c)}};
}

inline nlohmann::ordered_json to_json(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["schema"] = kSchema;
  j["kind"] = "verification";
  j["d"] = r.d;
  j["codim"] = r.codim;
  j["n_sets"] = r.n_sets;
  j["is_complete"] = r.is_complete;
  j["uncovered"] = faces_to_json(r.uncovered);
  j["per_set_self_antipodality"] = r.per_set_self_antipodality;
  j["max_self_antipodality"] = r.max_self_antipodality;
  j["witness"] = r.witness ? to_json(*r.witness) : nlohmann::ordered_json(nullptr);
  j["expected_k"] = r.expected_k ? nlohmann::ordered_json(*r.expected_k) : nlohmann::ordered_json(nullptr);
  return j;
}

inline nlohmann::ordered_json to_json(const ConstructionReport& r) {
  nlohmann::ordered_json j;
  j["schema"] = kSchema;
  j["kind"] = "construction";
  j["cover"] = cover_to_json(r.cover);
  j["nonempty_sets"] = r.nonempty_sets;
  j["doubly_covered"] = r.doubly_covered;
  j["leftover_count"] = r.leftover_count;
  j["is_d_set_cover"] = r.is_d_set_cover;
  return j;
}

inline nlohmann::ordered_json to_json(const SearchResult& r) {
  nlohmann::ordered_json j;
  j["schema"] = kSchema;
  j["kind"] = "search";
  j["problem"] = {{"d", r.problem.d}, {"n_sets", r.problem.n_sets}, {"codim", r.problem.codim}, {"forbid_k", r.problem.forbid_k}};
  j["outcome"] = to_string(r.outcome);
  j["nodes_expanded"] = r.nodes_expanded;
  j["budget"] = r.budget;
  j["witness"] = r.witness ? nlohmann::ordered_json(format_cover(*r.witness)) : nlohmann::ordered_json(nullptr);
  return j;
}

}  // namespace antipode
