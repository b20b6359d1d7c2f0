#include "ncfact/ncs.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "ncfact/errors.hpp"

namespace ncfact {

NCSPartition make_ncs_partition(int d, std::vector<std::pair<Rational, SetPartition>> support) {
  if (d < 1) throw DomainError("degree must be positive");
  std::sort(support.begin(), support.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  NCSPartition out;
  out.d = d;
  bool has_zero = false;
  for (auto& [pos, partition] : support) {
    if (pos < 0 || pos >= 1) throw DomainError("base position outside [0,1)");
    if (partition.ground_size() != d) throw DomainError("partition ground size is not the degree");
    if (!out.support.empty() && out.support.back().first == pos) {
      throw DomainError("duplicate base position");
    }
    if (pos == 0) has_zero = true;
    if (pos != 0 && partition.is_all_singletons()) continue;  // canonical sparsity
    out.support.emplace_back(pos, std::move(partition));
  }
  if (!has_zero) {
    out.support.insert(out.support.begin(), {Rational(0), SetPartition(d)});
  }
  return out;
}

bool validate_ncs(const NCSPartition& p) {
  std::vector<SetPartition> parts;
  parts.reserve(p.support.size());
  for (const auto& [pos, partition] : p.support) parts.push_back(partition);
  return is_noncrossing(shuffle(parts));
}

namespace {

/// Circle positions of the lifted points of one block at base position s:
/// sheet m sits at (m - 1 + s) / d.
std::vector<Rational> lift_block(int d, const Rational& s, const std::vector<int>& block) {
  std::vector<Rational> out;
  out.reserve(block.size());
  for (int m : block) out.push_back((Rational(m - 1) + s) / d);
  return out;
}

std::vector<std::vector<Rational>> lifted_nontrivial_blocks(const NCSPartition& p) {
  std::vector<std::vector<Rational>> out;
  for (const auto& [pos, partition] : p.support) {
    for (const auto& block : partition.nontrivial_blocks()) {
      out.push_back(lift_block(p.d, pos, block));
    }
  }
  return out;
}

}  // namespace

bool validate_ncs_by_lifting(const NCSPartition& p) {
  auto blocks = lifted_nontrivial_blocks(p);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (std::size_t j = i + 1; j < blocks.size(); ++j) {
      std::vector<std::pair<Rational, char>> word;
      for (const auto& q : blocks[i]) word.emplace_back(q, 'A');
      for (const auto& q : blocks[j]) word.emplace_back(q, 'B');
      std::sort(word.begin(), word.end());
      int runs = 0;
      for (std::size_t k = 0; k < word.size(); ++k) {
        if (k == 0 || word[k].second != word[k - 1].second) ++runs;
      }
      if (word.front().second == word.back().second && runs > 1) --runs;
      if (runs > 2) return false;
    }
  }
  return true;
}

long total_criticality(const NCSPartition& p) {
  long out = 0;
  for (const auto& [pos, partition] : p.support) {
    for (const auto& block : partition.nontrivial_blocks()) {
      out += static_cast<long>(block.size()) - 1;
    }
  }
  return out;
}

std::pair<bool, bool> armstrong_check(const SymmetricGroup& sym,
                                      const std::vector<Permutation>& xs) {
  if (xs.empty()) throw DomainError("armstrong_check needs at least one factor");
  const Permutation d_cycle = delta(sym.degree());
  std::vector<SetPartition> parts;
  long total = 0;
  Permutation product = sym.identity();
  for (const auto& x : xs) {
    if (!leq_abs(sym, x, d_cycle)) throw DomainError("factor is not below the long cycle");
    parts.push_back(biane_psi(x));
    total += sym.length(x);
    product = sym.multiply(product, x);
  }
  // The right side is the reduced-product condition: lengths add AND the
  // product still divides the long cycle, i.e. the tuple extends to a reduced
  // factorization of it. Additivity alone is not enough: ((2 3), (1 2)) has
  // additive lengths with product (1 3 2), which does not divide (1 2 3), and
  // its shuffle crosses.
  bool lhs = is_noncrossing(shuffle(parts));
  bool rhs = total == sym.length(product) && leq_abs(sym, product, d_cycle);
  return {lhs, rhs};
}

namespace {

struct PlanarMap {
  // marked points in circular order
  std::vector<Rational> points;
  std::vector<int> point_block;  // block id per point
  // edges: (endpoint a, endpoint b, block id or -1 for circle arcs)
  struct Edge {
    int a, b, block;
  };
  std::vector<Edge> edges;
};

/// Faces of the embedded map via rotation systems: at each vertex the darts
/// are ordered counterclockwise, chords sorted by the circular distance to
/// their target, pinned between the two boundary arcs.
std::vector<std::vector<int>> trace_faces(const PlanarMap& map) {
  const int E = static_cast<int>(map.edges.size());
  auto dart_from = [&](int d) { return d % 2 == 0 ? map.edges[static_cast<std::size_t>(d / 2)].a
                                                  : map.edges[static_cast<std::size_t>(d / 2)].b; };
  auto dart_to = [&](int d) { return d % 2 == 0 ? map.edges[static_cast<std::size_t>(d / 2)].b
                                                : map.edges[static_cast<std::size_t>(d / 2)].a; };

  const int M = static_cast<int>(map.points.size());
  // rotation key: (0) ccw boundary arc, (1, dist) chords, (2) cw boundary arc
  auto key = [&](int d) -> std::pair<int, Rational> {
    const auto& e = map.edges[static_cast<std::size_t>(d / 2)];
    int from = dart_from(d), to = dart_to(d);
    if (e.block < 0) {
      // arcs run ccw from e.a to e.b
      return d % 2 == 0 ? std::make_pair(0, Rational(0)) : std::make_pair(2, Rational(0));
    }
    Rational dist = map.points[static_cast<std::size_t>(to)] - map.points[static_cast<std::size_t>(from)];
    if (dist < 0) dist += 1;
    return {1, dist};
  };

  std::vector<std::vector<int>> at_vertex(static_cast<std::size_t>(M));
  for (int d = 0; d < 2 * E; ++d) at_vertex[static_cast<std::size_t>(dart_from(d))].push_back(d);
  std::vector<int> next_ccw(static_cast<std::size_t>(2 * E));
  for (auto& darts : at_vertex) {
    std::sort(darts.begin(), darts.end(), [&](int x, int y) { return key(x) < key(y); });
    for (std::size_t i = 0; i < darts.size(); ++i) {
      next_ccw[static_cast<std::size_t>(darts[i])] = darts[(i + 1) % darts.size()];
    }
  }

  std::vector<std::vector<int>> faces;
  std::vector<bool> used(static_cast<std::size_t>(2 * E), false);
  for (int start = 0; start < 2 * E; ++start) {
    if (used[static_cast<std::size_t>(start)]) continue;
    std::vector<int> face;
    int d = start;
    do {
      used[static_cast<std::size_t>(d)] = true;
      face.push_back(d);
      d = next_ccw[static_cast<std::size_t>(d ^ 1)];
    } while (d != start);
    faces.push_back(std::move(face));
  }
  return faces;
}

}  // namespace

RegionReport complementary_regions(const NCSPartition& p) {
  RegionReport report;
  auto blocks = lifted_nontrivial_blocks(p);
  report.tree.black_count = static_cast<long long>(blocks.size());
  if (blocks.empty()) {
    report.count = 1;
    report.tree.white_count = 1;
    report.tree.is_tree = true;
    return report;
  }

  PlanarMap map;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (const auto& q : blocks[b]) {
      map.points.push_back(q);
      map.point_block.push_back(static_cast<int>(b));
    }
  }
  std::vector<int> order(map.points.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return map.points[static_cast<std::size_t>(a)] < map.points[static_cast<std::size_t>(b)]; });
  {
    std::vector<Rational> pts;
    std::vector<int> pb;
    for (int idx : order) {
      pts.push_back(map.points[static_cast<std::size_t>(idx)]);
      pb.push_back(map.point_block[static_cast<std::size_t>(idx)]);
    }
    map.points = std::move(pts);
    map.point_block = std::move(pb);
  }
  const int M = static_cast<int>(map.points.size());

  // boundary arcs, ccw
  for (int i = 0; i < M; ++i) map.edges.push_back({i, (i + 1) % M, -1});
  // hull edges: consecutive block points in circular order; a 2-block is a
  // single chord
  std::map<std::pair<int, Rational>, int> point_index;
  for (int i = 0; i < M; ++i) {
    point_index[{map.point_block[static_cast<std::size_t>(i)], map.points[static_cast<std::size_t>(i)]}] = i;
  }
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const auto& qs = blocks[b];
    const std::size_t r = qs.size();
    for (std::size_t i = 0; i + 1 < r; ++i) {
      map.edges.push_back({point_index.at({static_cast<int>(b), qs[i]}),
                           point_index.at({static_cast<int>(b), qs[i + 1]}), static_cast<int>(b)});
    }
    if (r >= 3) {
      map.edges.push_back(
          {point_index.at({static_cast<int>(b), qs[r - 1]}), point_index.at({static_cast<int>(b), qs[0]}),
           static_cast<int>(b)});
    }
  }

  auto faces = trace_faces(map);

  // classify: outer face (arcs only), hull interiors (one block's edges only,
  // block size >= 3), complementary regions (the rest)
  std::vector<int> face_kind(faces.size(), 0);  // 0 region, 1 outer, 2 hull interior
  std::vector<int> dart_face(2 * map.edges.size(), -1);
  for (std::size_t f = 0; f < faces.size(); ++f) {
    bool all_arcs = true;
    bool single_block = true;
    int the_block = -2;
    for (int d : faces[f]) {
      dart_face[static_cast<std::size_t>(d)] = static_cast<int>(f);
      int block = map.edges[static_cast<std::size_t>(d / 2)].block;
      if (block >= 0) all_arcs = false;
      if (the_block == -2) the_block = block;
      if (block != the_block) single_block = false;
    }
    if (all_arcs) {
      face_kind[f] = 1;
    } else if (single_block && the_block >= 0 && blocks[static_cast<std::size_t>(the_block)].size() >= 3 &&
               faces[f].size() == blocks[static_cast<std::size_t>(the_block)].size()) {
      face_kind[f] = 2;
    }
  }

  std::map<int, long long> region_id;
  for (std::size_t f = 0; f < faces.size(); ++f) {
    if (face_kind[f] == 0) {
      long long id = static_cast<long long>(region_id.size());
      region_id[static_cast<int>(f)] = id;
    }
  }
  report.count = static_cast<long long>(region_id.size());
  report.tree.white_count = report.count;

  for (std::size_t e = 0; e < map.edges.size(); ++e) {
    if (map.edges[e].block < 0) continue;
    for (int side = 0; side < 2; ++side) {
      int face = dart_face[2 * e + static_cast<std::size_t>(side)];
      auto it = region_id.find(face);
      if (it != region_id.end()) {
        report.tree.edges.emplace_back(map.edges[e].block, it->second);
      }
    }
  }

  // tree check: right edge count plus connectivity
  const long long V = report.tree.black_count + report.tree.white_count;
  bool connected = false;
  if (static_cast<long long>(report.tree.edges.size()) == V - 1) {
    std::vector<long long> parent(static_cast<std::size_t>(V));
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<long long>(i);
    auto find = [&](long long x) {
      while (parent[static_cast<std::size_t>(x)] != x) {
        x = parent[static_cast<std::size_t>(x)] =
            parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      }
      return x;
    };
    for (const auto& [black, white] : report.tree.edges) {
      parent[static_cast<std::size_t>(find(black))] = find(report.tree.black_count + white);
    }
    std::set<long long> roots;
    for (long long v = 0; v < V; ++v) roots.insert(find(v));
    connected = roots.size() == 1;
  }
  report.tree.is_tree = connected;
  return report;
}

bool is_maximal(const NCSPartition& p) { return total_criticality(p) == p.d - 1; }

bool refinement_leq(const NCSPartition& fine, const NCSPartition& coarse) {
  if (fine.d != coarse.d) return false;
  std::set<Rational> positions;
  for (const auto& [pos, partition] : fine.support) positions.insert(pos);
  for (const auto& [pos, partition] : coarse.support) positions.insert(pos);
  auto at = [](const NCSPartition& p, const Rational& pos) {
    for (const auto& [s, partition] : p.support) {
      if (s == pos) return partition;
    }
    return SetPartition(p.d);
  };
  for (const auto& pos : positions) {
    if (!at(fine, pos).refines(at(coarse, pos))) return false;
  }
  return true;
}

NCSPartition psi_big(const SymmetricGroup& sym, const CircClass<Permutation>& u) {
  const int d = sym.degree();
  if (!(u.canonical.ambient == delta(d))) {
    throw DomainError("psi_big expects a class over (Sym_d, delta)");
  }
  std::vector<std::pair<Rational, SetPartition>> support;
  const auto& wf = u.canonical.wf;
  for (std::size_t i = 0; i + 1 < wf.positions.size(); ++i) {
    support.emplace_back(wf.positions[i], biane_psi(wf.labels[i]));
  }
  return make_ncs_partition(d, std::move(support));
}

CircClass<Permutation> psi_big_inv(const SymmetricGroup& sym, const NCSPartition& p) {
  if (p.d != sym.degree()) throw DomainError("degree mismatch");
  if (!validate_ncs(p)) throw DomainError("partition is not a valid degree-d noncrossing partition");
  std::vector<std::pair<Rational, Permutation>> support;
  for (const auto& [pos, partition] : p.support) {
    support.emplace_back(pos, biane_psi_inv(partition, p.d));
  }
  support.emplace_back(Rational(1), sym.identity());
  return CircClass<Permutation>{make_top_point(sym, delta(p.d), std::move(support))};
}

NCSPartition random_ncs_partition(const SymmetricGroup& sym, std::mt19937_64& rng) {
  auto point = random_top_point(sym, delta(sym.degree()), rng);
  return psi_big(sym, circ_quotient(sym, point));
}

std::string ncs_to_string(const NCSPartition& p) {
  std::ostringstream os;
  os << "deg " << p.d << ":";
  for (const auto& [pos, partition] : p.support) {
    os << ' ' << position_to_string(pos) << '^' << partition.to_string();
  }
  return os.str();
}

}  // namespace ncfact
