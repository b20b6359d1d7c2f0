#include <sstream>

#include "ncfact/export.hpp"

namespace ncfact {

std::string hasse_to_dot(const std::string& name, const std::vector<std::string>& labels,
                         const std::vector<std::pair<int, int>>& covers) {
  std::ostringstream os;
  os << "digraph \"" << name << "\" {\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=box];\n";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    os << "  n" << i << " [label=\"" << labels[i] << "\"];\n";
  }
  auto sorted = covers;
  std::sort(sorted.begin(), sorted.end());
  for (const auto& [lo, hi] : sorted) {
    os << "  n" << lo << " -> n" << hi << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string poset_count_line(const std::vector<long>& rank_counts) {
  long total = 0;
  for (long c : rank_counts) total += c;
  std::ostringstream os;
  os << total << " elements (";
  for (std::size_t r = 0; r < rank_counts.size(); ++r) {
    if (r) os << ',';
    os << rank_counts[r];
  }
  os << " by rank ";
  for (std::size_t r = 0; r < rank_counts.size(); ++r) {
    if (r) os << ',';
    os << r;
  }
  os << ")";
  return os.str();
}

std::string poset_report(const std::vector<std::string>& labels, const std::vector<int>& ranks,
                         const std::vector<long>& rank_counts, int rank_filter) {
  std::ostringstream os;
  os << poset_count_line(rank_counts) << "\n";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (rank_filter >= 0 && ranks[i] != rank_filter) continue;
    os << "rank " << ranks[i] << ": " << labels[i] << "\n";
  }
  return os.str();
}

std::string complex_report(const ComplexSummary& summary) {
  std::ostringstream os;
  os << "cells (";
  for (std::size_t d = 0; d < summary.dims.size(); ++d) {
    if (d) os << ',';
    os << summary.dims[d];
  }
  os << ") by dim 0..";
  os << (summary.dims.empty() ? 0 : summary.dims.size() - 1);
  os << "; euler " << summary.euler;
  os << "; components ";
  for (std::size_t d = 0; d < summary.skeleton_components.size(); ++d) {
    if (d) os << ',';
    os << summary.skeleton_components[d];
  }
  os << " by skeleton\n";
  for (std::size_t i = 0; i < summary.labels.size(); ++i) {
    os << "dim " << summary.cell_dims[i] << ": " << summary.labels[i] << "\n";
  }
  return os.str();
}

std::string stratum_report(const ComplexSummary& summary,
                           const std::vector<std::pair<std::string, long>>& cover_degrees,
                           long long components) {
  std::ostringstream os;
  os << complex_report(summary);
  os << "components " << components << "\n";
  for (const auto& [h, k] : cover_degrees) {
    os << "cover h=" << h << " k=" << k << "\n";
  }
  return os.str();
}

}  // namespace ncfact
