#include <json.hpp>

#include "ncfact/errors.hpp"
#include "ncfact/export.hpp"

namespace ncfact {

namespace {

nlohmann::json complex_json_object(const ComplexSummary& summary) {
  nlohmann::json j;
  j["dims"] = summary.dims;
  j["euler"] = summary.euler;
  auto faces = nlohmann::json::array();
  for (const auto& [cell, facet, position] : summary.faces) {
    faces.push_back({cell, facet, position});
  }
  j["faces"] = faces;
  return j;
}

}  // namespace

std::string complex_to_json(const ComplexSummary& summary) {
  return complex_json_object(summary).dump(2) + "\n";
}

std::string stratum_to_json(const ComplexSummary& summary,
                            const std::vector<std::pair<std::string, long>>& cover_degrees) {
  nlohmann::json j = complex_json_object(summary);
  auto covers = nlohmann::json::array();
  for (const auto& [h, k] : cover_degrees) {
    covers.push_back({{"h", h}, {"k", k}});
  }
  j["covers"] = covers;
  return j.dump(2) + "\n";
}

std::string poset_to_json(const std::string& target, const std::string& poset_name,
                          const std::vector<std::string>& labels, const std::vector<int>& ranks,
                          const std::vector<long>& rank_counts, int rank_filter) {
  nlohmann::json j;
  j["target"] = target;
  j["poset"] = poset_name;
  j["counts"] = rank_counts;
  auto elements = nlohmann::json::array();
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (rank_filter >= 0 && ranks[i] != rank_filter) continue;
    elements.push_back({{"rank", ranks[i]}, {"text", labels[i]}});
  }
  j["elements"] = elements;
  return j.dump(2) + "\n";
}

std::string ncs_to_json(const NCSPartition& p) {
  nlohmann::json j;
  j["d"] = p.d;
  auto support = nlohmann::json::array();
  for (const auto& [pos, partition] : p.support) {
    if (partition.is_all_singletons()) continue;
    nlohmann::json entry;
    entry["s"] = rational_to_string(pos);
    auto blocks = nlohmann::json::array();
    for (const auto& block : partition.nontrivial_blocks()) blocks.push_back(block);
    entry["blocks"] = blocks;
    support.push_back(entry);
  }
  j["support"] = support;
  return j.dump(2) + "\n";
}

NCSPartition ncs_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("bad partition JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("d") || !j["d"].is_number_integer()) {
    throw DomainError("partition JSON needs an integer field \"d\"");
  }
  const int d = j["d"].get<int>();
  std::vector<std::pair<Rational, SetPartition>> support;
  for (const auto& entry : j.value("support", nlohmann::json::array())) {
    if (!entry.contains("s")) throw DomainError("support entry without position \"s\"");
    Rational pos = entry["s"].is_string() ? parse_rational(entry["s"].get<std::string>())
                                          : Rational(entry["s"].get<long long>());
    std::vector<std::vector<int>> blocks;
    for (const auto& block : entry.value("blocks", nlohmann::json::array())) {
      blocks.push_back(block.get<std::vector<int>>());
    }
    try {
      support.emplace_back(pos, SetPartition(d, std::move(blocks)));
    } catch (const DomainError& e) {
      throw DomainError(std::string("bad block data: ") + e.what());
    }
  }
  return make_ncs_partition(d, std::move(support));
}

}  // namespace ncfact
