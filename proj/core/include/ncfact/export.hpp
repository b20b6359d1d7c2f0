#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ncfact/complexes.hpp"
#include "ncfact/factorization.hpp"
#include "ncfact/ncs.hpp"

namespace ncfact {

/// Hasse diagram in DOT, nodes in canonical order, edges lower -> upper.
std::string hasse_to_dot(const std::string& name, const std::vector<std::string>& labels,
                         const std::vector<std::pair<int, int>>& covers);

/// One-line count summary plus the canonical listing, e.g.
/// "15 elements (5,7,3 by rank 0,1,2)".
std::string poset_count_line(const std::vector<long>& rank_counts);
std::string poset_report(const std::vector<std::string>& labels, const std::vector<int>& ranks,
                         const std::vector<long>& rank_counts, int rank_filter = -1);
std::string poset_to_json(const std::string& target, const std::string& poset_name,
                          const std::vector<std::string>& labels, const std::vector<int>& ranks,
                          const std::vector<long>& rank_counts, int rank_filter = -1);

/// {"dims": [...], "euler": n, "faces": [[cell, facet, position], ...]}
std::string complex_to_json(const ComplexSummary& summary);
/// ComplexSummary shape plus {"covers": [{"h": ..., "k": ...}, ...]}.
std::string stratum_to_json(const ComplexSummary& summary,
                            const std::vector<std::pair<std::string, long>>& cover_degrees);
std::string complex_report(const ComplexSummary& summary);
std::string stratum_report(const ComplexSummary& summary,
                           const std::vector<std::pair<std::string, long>>& cover_degrees,
                           long long components);

/// {"d": n, "support": [{"s": "p/q", "blocks": [[...], ...]}, ...]};
/// all-singleton positions omitted.
std::string ncs_to_json(const NCSPartition& p);
NCSPartition ncs_from_json(const std::string& text);

/// Chord/hull picture of a partition on a 512x512 canvas; with the panel, a
/// second circle shows the images of the base points under z -> z^d.
std::string render_ncs_svg(const NCSPartition& p, bool with_panel = false);

}  // namespace ncfact
