#include "hkcut/report_json.hpp"

#include <json.hpp>

namespace hkcut {

namespace {
using Json = nlohmann::ordered_json;

Json one_indexed(const VertexSet& set) {
  Json out = Json::array();
  set.for_each([&](int v) { out.push_back(v + 1); });
  return out;
}
}  // namespace

std::string report_to_json(const EnumerationReport& report, bool include_millis) {
  Json j;
  j["schema_version"] = 1;
  j["k"] = report.k;
  j["opt_value"] = report.opt_value;
  Json cut_sets = Json::array();
  for (const CutSet& cut : report.family) cut_sets.push_back(cut.edge_ids);
  j["cut_sets"] = std::move(cut_sets);
  Json stats;
  stats["terminal_cut_calls"] = report.stats.terminal_cut_calls;
  stats["candidate_sets"] = report.stats.candidate_sets;
  stats["candidate_cutsets"] = report.stats.candidate_cutsets;
  stats["millis"] = include_millis ? report.stats.millis : 0;
  j["stats"] = std::move(stats);
  return j.dump(2) + "\n";
}

std::string terminal_cut_to_json(const TerminalCutResult& result) {
  Json j;
  j["schema_version"] = 1;
  j["value"] = result.value;
  j["source_minimal"] = one_indexed(result.source_minimal);
  j["source_maximal"] = one_indexed(result.source_maximal);
  return j.dump(2) + "\n";
}

}  // namespace hkcut
