#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hyperstar/matrices.hpp"
#include "hyperstar/spectral.hpp"

namespace hyperstar {

enum class StarKind { HS, GHS };

inline const char* to_string(StarKind k) {
  return k == StarKind::HS ? "HS" : "GHS";
}

/// A claimed hyperstar substructure on a host hypergraph: leaf set v1, core
/// set v2, the star edges (indices into the host, each equal to one leaf
/// plus a core subset), and the per-leaf family of core subsets. A p-uniform
/// hyperstar carries kind HS plus the uniform_p tag.
struct Witness {
  std::vector<VertexId> v1;    // leaves, sorted, |v1| = m
  std::vector<VertexId> v2;    // core, sorted, |v2| = k
  std::vector<int> star_edges; // sorted host edge indices
  std::map<VertexId, std::vector<std::vector<VertexId>>> families;  // P_v
  StarKind kind = StarKind::GHS;
  std::optional<int> uniform_p;

  int m() const { return static_cast<int>(v1.size()); }
  int k() const { return static_cast<int>(v2.size()); }
};

struct ValidationResult {
  bool ok = true;
  std::string violated;  // name of the first failed condition
  std::string detail;

  static ValidationResult success() { return {}; }
  static ValidationResult failure(std::string what, std::string detail) {
    return {false, std::move(what), std::move(detail)};
  }
};

struct StarSummary {
  int degree = 0;      // m - 1
  double weight = 0.0; // core-aggregated star-edge weight seen from one leaf
};

/// Minimum-multiplicity statement about one matrix eigenvalue.
struct MultiplicityClaim {
  enum class Matrix { Adjacency, Laplacian, Normalized, Transition };
  Matrix matrix = Matrix::Adjacency;
  double eigenvalue = 0.0;
  int min_multiplicity = 0;
  std::string source;
};

inline const char* to_string(MultiplicityClaim::Matrix m) {
  switch (m) {
    case MultiplicityClaim::Matrix::Adjacency:
      return "adjacency";
    case MultiplicityClaim::Matrix::Laplacian:
      return "laplacian";
    case MultiplicityClaim::Matrix::Normalized:
      return "normalized";
    case MultiplicityClaim::Matrix::Transition:
      return "transition";
  }
  return "?";
}

struct ClaimSet {
  std::vector<MultiplicityClaim> claims;
  std::vector<std::string> notes;
};

namespace detail {

inline double weight_scale(const Hypergraph& h) {
  double w = 1.0;
  for (const auto& e : h.edges()) w = std::max(w, e.weight);
  return w;
}

inline std::vector<VertexId> edge_minus(const Edge& e, VertexId v) {
  std::vector<VertexId> out;
  out.reserve(e.vertices.size());
  for (VertexId u : e.vertices)
    if (u != v) out.push_back(u);
  return out;
}

/// Aggregate star-edge weight seen by leaf v at each core vertex:
/// s_v(u) = sum of w(e) over star edges containing both v and u.
inline std::map<VertexId, double> leaf_core_profile(const Hypergraph& h,
                                                    const Witness& wit,
                                                    VertexId v) {
  std::map<VertexId, double> s;
  for (VertexId u : wit.v2) s[u] = 0.0;
  for (int e : wit.star_edges) {
    if (!h.edge(e).contains(v)) continue;
    for (VertexId u : h.edge(e).vertices)
      if (u != v) s[u] += h.edge(e).weight;
  }
  return s;
}

/// Multiset of (core subset, weight) pairs incident to leaf v; the basis of
/// the HS equality condition.
inline std::vector<std::pair<std::vector<VertexId>, double>> leaf_edge_multiset(
    const Hypergraph& h, const Witness& wit, VertexId v) {
  std::vector<std::pair<std::vector<VertexId>, double>> out;
  for (int e : wit.star_edges)
    if (h.edge(e).contains(v)) out.emplace_back(edge_minus(h.edge(e), v),
                                                h.edge(e).weight);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

/// Builds a witness from its vertex sets and star edges; the per-leaf
/// families are derived from the edges. Kind and the uniform tag are
/// classified from the data unless forced by the caller.
inline Witness make_witness(const Hypergraph& h, std::vector<VertexId> v1,
                            std::vector<VertexId> v2,
                            std::vector<int> star_edges,
                            std::optional<StarKind> kind = std::nullopt,
                            std::optional<int> p = std::nullopt) {
  Witness w;
  w.v1 = std::move(v1);
  w.v2 = std::move(v2);
  w.star_edges = std::move(star_edges);
  std::sort(w.v1.begin(), w.v1.end());
  std::sort(w.v2.begin(), w.v2.end());
  std::sort(w.star_edges.begin(), w.star_edges.end());
  for (int e : w.star_edges)
    if (e < 0 || e >= h.num_edges())
      throw std::out_of_range("star edge index out of range");
  for (VertexId v : w.v1) {
    std::vector<std::vector<VertexId>> fam;
    for (int e : w.star_edges)
      if (h.edge(e).contains(v)) fam.push_back(detail::edge_minus(h.edge(e), v));
    std::sort(fam.begin(), fam.end());
    fam.erase(std::unique(fam.begin(), fam.end()), fam.end());
    w.families[v] = std::move(fam);
  }
  if (kind) {
    w.kind = *kind;
  } else {
    bool hs = true;
    for (std::size_t i = 1; i < w.v1.size() && hs; ++i)
      hs = detail::leaf_edge_multiset(h, w, w.v1[i]) ==
           detail::leaf_edge_multiset(h, w, w.v1[0]);
    w.kind = hs ? StarKind::HS : StarKind::GHS;
  }
  if (p) {
    w.uniform_p = p;
  } else if (w.kind == StarKind::HS) {
    if (auto up = uniformity(h)) w.uniform_p = up;
  }
  return w;
}

/// Checks the hyperstar-on-a-hypergraph conditions in order: leaf/core
/// disjointness, core cover by every per-leaf family, exact correspondence
/// between star edges and family subsets, per-core-vertex weight balance,
/// isolation of the leaves from all non-star edges, and — for kind HS or a
/// uniform tag — identical families with equal per-edge weights (plus the
/// p-1 cardinality condition when tagged). Failures are returned, not thrown.
inline ValidationResult validate_witness(const Hypergraph& h,
                                         const Witness& wit,
                                         double tol = kDefaultTolerance) {
  if (wit.v1.empty() || wit.v2.empty())
    return ValidationResult::failure("shape", "v1 and v2 must be nonempty");
  for (VertexId v : wit.v1)
    if (v < 1 || v > h.num_vertices())
      throw std::out_of_range("witness leaf vertex out of range");
  for (VertexId v : wit.v2)
    if (v < 1 || v > h.num_vertices())
      throw std::out_of_range("witness core vertex out of range");
  for (int e : wit.star_edges)
    if (e < 0 || e >= h.num_edges())
      throw std::out_of_range("witness star edge out of range");

  // disjointness
  std::vector<VertexId> common;
  std::set_intersection(wit.v1.begin(), wit.v1.end(), wit.v2.begin(),
                        wit.v2.end(), std::back_inserter(common));
  if (!common.empty())
    return ValidationResult::failure(
        "disjoint", "vertex " + std::to_string(common.front()) +
                        " appears in both v1 and v2");

  // family shape: every leaf has a family of nonempty core subsets
  for (VertexId v : wit.v1) {
    auto it = wit.families.find(v);
    if (it == wit.families.end() || it->second.empty())
      return ValidationResult::failure(
          "cover", "leaf " + std::to_string(v) + " has no core family");
    for (const auto& sub : it->second) {
      if (sub.empty())
        return ValidationResult::failure(
            "star-edges", "leaf " + std::to_string(v) + " has an empty subset");
      for (VertexId u : sub)
        if (!std::binary_search(wit.v2.begin(), wit.v2.end(), u))
          return ValidationResult::failure(
              "star-edges", "family subset of leaf " + std::to_string(v) +
                                " leaves the core set");
    }
  }

  // cover: the union of each leaf's family is the whole core
  for (VertexId v : wit.v1) {
    std::set<VertexId> covered;
    for (const auto& sub : wit.families.at(v))
      covered.insert(sub.begin(), sub.end());
    for (VertexId u : wit.v2)
      if (!covered.count(u))
        return ValidationResult::failure(
            "cover", "core vertex " + std::to_string(u) +
                         " is not covered by the family of leaf " +
                         std::to_string(v));
  }

  // star edges are exactly the realizations {v} ∪ ẽ of the families
  std::set<std::pair<VertexId, std::vector<VertexId>>> realized;
  for (int e : wit.star_edges) {
    const auto& verts = h.edge(e).vertices;
    std::vector<VertexId> leaves;
    for (VertexId v : verts)
      if (std::binary_search(wit.v1.begin(), wit.v1.end(), v))
        leaves.push_back(v);
    if (leaves.size() != 1)
      return ValidationResult::failure(
          "star-edges", "star edge " + std::to_string(e) + " contains " +
                            std::to_string(leaves.size()) + " leaf vertices");
    const VertexId v = leaves.front();
    std::vector<VertexId> core = detail::edge_minus(h.edge(e), v);
    if (core.empty())
      return ValidationResult::failure(
          "star-edges",
          "star edge " + std::to_string(e) + " is a leaf singleton");
    const auto& fam = wit.families.at(v);
    if (!std::binary_search(fam.begin(), fam.end(), core))
      return ValidationResult::failure(
          "star-edges", "star edge " + std::to_string(e) +
                            " does not realize a family subset of leaf " +
                            std::to_string(v));
    realized.insert({v, std::move(core)});
  }
  for (VertexId v : wit.v1)
    for (const auto& sub : wit.families.at(v))
      if (!realized.count({v, sub}))
        return ValidationResult::failure(
            "star-edges", "a family subset of leaf " + std::to_string(v) +
                              " is not realized by any star edge");

  // per-core-vertex weight balance across leaves
  const double wtol = tol * detail::weight_scale(h);
  std::vector<std::map<VertexId, double>> profiles;
  profiles.reserve(wit.v1.size());
  for (VertexId v : wit.v1)
    profiles.push_back(detail::leaf_core_profile(h, wit, v));
  for (VertexId u : wit.v2) {
    double lo = profiles.front().at(u), hi = lo;
    for (const auto& p : profiles) {
      lo = std::min(lo, p.at(u));
      hi = std::max(hi, p.at(u));
    }
    if (hi - lo > wtol)
      return ValidationResult::failure(
          "balance", "aggregate weights at core vertex " + std::to_string(u) +
                         " differ across leaves by " + std::to_string(hi - lo));
  }

  // isolation: no non-star edge joins a leaf to any other vertex
  std::set<int> star(wit.star_edges.begin(), wit.star_edges.end());
  for (int e = 0; e < h.num_edges(); ++e) {
    if (star.count(e) || h.edge(e).cardinality() < 2) continue;
    for (VertexId v : h.edge(e).vertices)
      if (std::binary_search(wit.v1.begin(), wit.v1.end(), v))
        return ValidationResult::failure(
            "isolation", "non-star edge " + std::to_string(e) +
                             " joins leaf " + std::to_string(v) +
                             " to another vertex");
  }

  const bool need_hs = wit.kind == StarKind::HS || wit.uniform_p.has_value();
  if (need_hs) {
    const auto base = detail::leaf_edge_multiset(h, wit, wit.v1.front());
    for (std::size_t i = 1; i < wit.v1.size(); ++i) {
      const auto other = detail::leaf_edge_multiset(h, wit, wit.v1[i]);
      if (wit.families.at(wit.v1[i]) != wit.families.at(wit.v1.front()))
        return ValidationResult::failure(
            "common-partition", "leaves " + std::to_string(wit.v1.front()) +
                                    " and " + std::to_string(wit.v1[i]) +
                                    " have different core families");
      if (other.size() != base.size())
        return ValidationResult::failure(
            "equal-weights", "leaf edge multisets differ in size");
      for (std::size_t j = 0; j < base.size(); ++j) {
        if (other[j].first != base[j].first ||
            std::abs(other[j].second - base[j].second) > wtol)
          return ValidationResult::failure(
              "equal-weights",
              "star-edge weights differ between leaves " +
                  std::to_string(wit.v1.front()) + " and " +
                  std::to_string(wit.v1[i]));
      }
    }
  }
  if (wit.uniform_p) {
    const int p = *wit.uniform_p;
    for (const auto& [v, fam] : wit.families)
      for (const auto& sub : fam)
        if (static_cast<int>(sub.size()) != p - 1)
          return ValidationResult::failure(
              "edge-cardinality", "family subset of leaf " +
                                      std::to_string(v) + " has size " +
                                      std::to_string(sub.size()) +
                                      ", expected " + std::to_string(p - 1));
  }
  return ValidationResult::success();
}

/// Degree m-1 and the weight seen from each leaf (asserted equal across
/// leaves within tolerance; throws UnbalancedWeight otherwise).
inline StarSummary star_summary(const Hypergraph& h, const Witness& wit,
                                double tol = kDefaultTolerance) {
  if (wit.v1.empty()) throw std::invalid_argument("witness has no leaves");
  const double wtol = tol * detail::weight_scale(h) *
                      std::max<std::size_t>(1, wit.v2.size());
  double first = 0.0;
  bool have_first = false;
  for (VertexId v : wit.v1) {
    double total = 0.0;
    for (const auto& [u, s] : detail::leaf_core_profile(h, wit, v)) total += s;
    if (!have_first) {
      first = total;
      have_first = true;
    } else if (std::abs(total - first) > wtol) {
      throw UnbalancedWeight("leaf " + std::to_string(v) +
                             " sees star weight " + std::to_string(total) +
                             ", leaf " + std::to_string(wit.v1.front()) +
                             " sees " + std::to_string(first));
    }
  }
  return {wit.m() - 1, first};
}

/// Finds maximal hyperstar witnesses: vertices are grouped by identical
/// co-occurrence supports and aggregate-weight signatures (within
/// tol*max(1, max edge weight)); every group of two or more leaves yields a
/// witness whose star edges are all their multi-vertex incident edges.
/// Output is ordered by smallest leaf id and every witness validates.
inline std::vector<Witness> detect_hyperstars(const Hypergraph& h,
                                              double tol = kDefaultTolerance) {
  const int n = h.num_vertices();
  Eigen::MatrixXd a = adjacency_matrix(h);
  const double wtol = tol * detail::weight_scale(h);

  std::vector<std::vector<VertexId>> supports(static_cast<std::size_t>(n) + 1);
  for (VertexId v = 1; v <= n; ++v)
    for (int u = 1; u <= n; ++u)
      if (a(v - 1, u - 1) > 0.0) supports[static_cast<std::size_t>(v)].push_back(u);

  std::vector<std::vector<VertexId>> groups;
  for (VertexId v = 1; v <= n; ++v) {
    if (supports[static_cast<std::size_t>(v)].empty()) continue;
    bool placed = false;
    for (auto& g : groups) {
      const VertexId rep = g.front();
      if (supports[static_cast<std::size_t>(rep)] !=
          supports[static_cast<std::size_t>(v)])
        continue;
      if ((a.row(rep - 1) - a.row(v - 1)).cwiseAbs().maxCoeff() > wtol)
        continue;
      g.push_back(v);
      placed = true;
      break;
    }
    if (!placed) groups.push_back({v});
  }

  std::vector<Witness> out;
  for (const auto& g : groups) {
    if (g.size() < 2) continue;
    std::vector<int> star_edges;
    for (VertexId v : g)
      for (int e : h.incident_edges(v))
        if (h.edge(e).cardinality() >= 2) star_edges.push_back(e);
    std::sort(star_edges.begin(), star_edges.end());
    star_edges.erase(std::unique(star_edges.begin(), star_edges.end()),
                     star_edges.end());
    if (star_edges.empty()) continue;
    Witness w = make_witness(h, g, supports[static_cast<std::size_t>(g.front())],
                             std::move(star_edges));
    if (validate_witness(h, w, tol).ok) out.push_back(std::move(w));
  }
  std::sort(out.begin(), out.end(), [](const Witness& x, const Witness& y) {
    return x.v1.front() < y.v1.front();
  });
  return out;
}

/// Derives the eigenvalue lower bounds induced by a family of validated
/// witnesses: the adjacency kernel grows by the total star degree, the
/// Laplacian gains each distinct star weight with the weight-grouped degree
/// sum, and — when every adjacency degree is positive — the normalized
/// Laplacian at 1 and the transition matrix at 0 gain the total degree.
inline ClaimSet claims_from_stars(const Hypergraph& h,
                                  const std::vector<Witness>& witnesses,
                                  double tol = kDefaultTolerance) {
  ClaimSet out;
  if (witnesses.empty()) return out;

  std::vector<StarSummary> summaries;
  summaries.reserve(witnesses.size());
  int total_degree = 0;
  for (const auto& w : witnesses) {
    summaries.push_back(star_summary(h, w, tol));
    total_degree += summaries.back().degree;
  }
  for (std::size_t i = 0; i < witnesses.size(); ++i)
    for (std::size_t j = i + 1; j < witnesses.size(); ++j) {
      std::vector<VertexId> common;
      std::set_intersection(witnesses[i].v1.begin(), witnesses[i].v1.end(),
                            witnesses[j].v1.begin(), witnesses[j].v1.end(),
                            std::back_inserter(common));
      if (!common.empty())
        out.notes.push_back(
            "witnesses " + std::to_string(i) + " and " + std::to_string(j) +
            " share leaf vertices; degree sums may overcount");
    }

  if (total_degree > 0)
    out.claims.push_back({MultiplicityClaim::Matrix::Adjacency, 0.0,
                          total_degree, "adjacency kernel bound"});

  // group star weights, single linkage
  std::vector<std::pair<double, int>> by_weight;
  for (const auto& s : summaries) by_weight.emplace_back(s.weight, s.degree);
  std::sort(by_weight.begin(), by_weight.end());
  const double wtol = tol * detail::weight_scale(h) *
                      std::max(1, static_cast<int>(by_weight.size()));
  std::size_t i = 0;
  while (i < by_weight.size()) {
    std::size_t j = i + 1;
    double sum = by_weight[i].first;
    int deg = by_weight[i].second;
    while (j < by_weight.size() &&
           by_weight[j].first - by_weight[j - 1].first <= wtol) {
      sum += by_weight[j].first;
      deg += by_weight[j].second;
      ++j;
    }
    if (deg > 0)
      out.claims.push_back({MultiplicityClaim::Matrix::Laplacian,
                            sum / static_cast<double>(j - i), deg,
                            "laplacian star-weight bound"});
    i = j;
  }

  Eigen::VectorXd da = adjacency_degrees(h);
  int zero_vertex = 0;
  for (int v = 0; v < da.size(); ++v)
    if (!(da(v) > 0.0)) {
      zero_vertex = v + 1;
      break;
    }
  if (zero_vertex == 0) {
    if (total_degree > 0) {
      out.claims.push_back({MultiplicityClaim::Matrix::Normalized, 1.0,
                            total_degree, "normalized-laplacian unit bound"});
      out.claims.push_back({MultiplicityClaim::Matrix::Transition, 0.0,
                            total_degree, "transition kernel bound"});
    }
  } else {
    out.notes.push_back(
        "normalized/transition claims suppressed: vertex " +
        std::to_string(zero_vertex) + " has zero adjacency degree");
  }
  return out;
}

struct SynthesisOptions {
  int tail_vertices = 0;        // fresh vertices chained off one core vertex
  double tail_weight = 0.25;    // base weight of tail edges
  int extra_core_edges = 0;     // additional edges inside the core
};

struct PlantedStar {
  Hypergraph hypergraph;
  Witness witness;
};

/// Deterministic generator of a hypergraph with a planted generalized
/// hyperstar. Each leaf receives a random block partition of the core;
/// blocks mixing several target weights are realized by nested subsets whose
/// weights telescope to the per-core-vertex targets, so the balance
/// condition holds by construction. Optional tail/core edges never touch
/// the leaves, preserving isolation.
inline PlantedStar synthesize_ghs(int m, int k,
                                  const std::vector<double>& profile,
                                  std::uint64_t seed,
                                  const SynthesisOptions& opts = {}) {
  if (m < 2) throw InfeasibleProfile("need at least two leaves");
  if (k < 1) throw InfeasibleProfile("need at least one core vertex");
  if (static_cast<int>(profile.size()) != k)
    throw InfeasibleProfile("profile size must equal k");
  for (double t : profile)
    if (!(t > 0.0)) throw InfeasibleProfile("profile targets must be positive");

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  std::vector<Edge> edges;
  std::vector<int> star_idx;
  for (VertexId v = 1; v <= m; ++v) {
    std::vector<int> perm(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) perm[static_cast<std::size_t>(i)] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::vector<int>> blocks;
    for (int idx : perm) {
      if (blocks.empty() || unit(rng) < 0.45) blocks.emplace_back();
      blocks.back().push_back(idx);
    }
    std::vector<std::pair<std::vector<VertexId>, double>> family;
    for (const auto& block : blocks) {
      std::vector<double> levels;
      for (int u : block) levels.push_back(profile[static_cast<std::size_t>(u)]);
      std::sort(levels.begin(), levels.end());
      levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
      double prev = 0.0;
      for (double level : levels) {
        std::vector<VertexId> sub;
        for (int u : block)
          if (profile[static_cast<std::size_t>(u)] >= level)
            sub.push_back(m + 1 + u);
        std::sort(sub.begin(), sub.end());
        family.emplace_back(std::move(sub), level - prev);
        prev = level;
      }
    }
    std::sort(family.begin(), family.end());
    for (auto& [sub, weight] : family) {
      std::vector<VertexId> verts = sub;
      verts.push_back(v);
      star_idx.push_back(static_cast<int>(edges.size()));
      edges.push_back({std::move(verts), weight});
    }
  }

  const int n = m + k + opts.tail_vertices;
  if (opts.tail_vertices > 0) {
    std::uniform_int_distribution<int> core_pick(m + 1, m + k);
    VertexId prev = core_pick(rng);
    for (int j = 1; j <= opts.tail_vertices; ++j) {
      VertexId fresh = m + k + j;
      double w = opts.tail_weight * (0.5 + unit(rng));
      edges.push_back({{prev, fresh}, w});
      prev = fresh;
    }
  }
  if (opts.extra_core_edges > 0 && k >= 2) {
    std::uniform_int_distribution<int> core_pick(m + 1, m + k);
    std::uniform_real_distribution<double> wdist(0.1, 10.0);
    for (int j = 0; j < opts.extra_core_edges; ++j) {
      std::set<VertexId> verts;
      const int size = (k >= 3 && unit(rng) < 0.5) ? 3 : 2;
      while (static_cast<int>(verts.size()) < size) verts.insert(core_pick(rng));
      edges.push_back({{verts.begin(), verts.end()}, wdist(rng)});
    }
  }

  Hypergraph h(n, std::move(edges));
  std::vector<VertexId> v1(static_cast<std::size_t>(m)),
      v2(static_cast<std::size_t>(k));
  for (int i = 0; i < m; ++i) v1[static_cast<std::size_t>(i)] = i + 1;
  for (int i = 0; i < k; ++i) v2[static_cast<std::size_t>(i)] = m + 1 + i;
  Witness w = make_witness(h, std::move(v1), std::move(v2), std::move(star_idx));
  return {std::move(h), std::move(w)};
}

/// Deterministic generator of a p-uniform hyperstar host: a single random
/// block partition of the core into blocks of size p-1 is shared by all
/// leaves with a common per-block weight, and any tail is built from
/// p-sized chunks so the host stays uniform.
inline PlantedStar synthesize_uhs(int m, int k, int p, std::uint64_t seed,
                                  const SynthesisOptions& opts = {}) {
  if (m < 2) throw InfeasibleProfile("need at least two leaves");
  if (p < 2) throw InfeasibleProfile("uniformity must be at least 2");
  if (k < p - 1 || k % (p - 1) != 0)
    throw InfeasibleProfile("core size must be a positive multiple of p-1");

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> wdist(0.1, 10.0);

  std::vector<VertexId> core(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) core[static_cast<std::size_t>(i)] = m + 1 + i;
  std::shuffle(core.begin(), core.end(), rng);
  std::vector<std::pair<std::vector<VertexId>, double>> blocks;
  for (int b = 0; b < k / (p - 1); ++b) {
    std::vector<VertexId> sub(core.begin() + b * (p - 1),
                              core.begin() + (b + 1) * (p - 1));
    std::sort(sub.begin(), sub.end());
    blocks.emplace_back(std::move(sub), wdist(rng));
  }
  std::sort(blocks.begin(), blocks.end());

  std::vector<Edge> edges;
  std::vector<int> star_idx;
  for (VertexId v = 1; v <= m; ++v)
    for (const auto& [sub, weight] : blocks) {
      std::vector<VertexId> verts = sub;
      verts.push_back(v);
      star_idx.push_back(static_cast<int>(edges.size()));
      edges.push_back({std::move(verts), weight});
    }

  const int chunks = opts.tail_vertices;
  const int n = m + k + chunks * (p - 1);
  if (chunks > 0) {
    std::uniform_int_distribution<int> core_pick(m + 1, m + k);
    VertexId prev = core_pick(rng);
    for (int c = 0; c < chunks; ++c) {
      std::vector<VertexId> verts{prev};
      for (int j = 0; j < p - 1; ++j) verts.push_back(m + k + c * (p - 1) + j + 1);
      double w = opts.tail_weight * (0.5 + unit(rng));
      prev = verts.back();
      edges.push_back({std::move(verts), w});
    }
  }

  Hypergraph h(n, std::move(edges));
  std::vector<VertexId> v1(static_cast<std::size_t>(m)),
      v2(static_cast<std::size_t>(k));
  for (int i = 0; i < m; ++i) v1[static_cast<std::size_t>(i)] = i + 1;
  for (int i = 0; i < k; ++i) v2[static_cast<std::size_t>(i)] = m + 1 + i;
  Witness w = make_witness(h, std::move(v1), std::move(v2), std::move(star_idx),
                           StarKind::HS, p);
  return {std::move(h), std::move(w)};
}

}  // namespace hyperstar
