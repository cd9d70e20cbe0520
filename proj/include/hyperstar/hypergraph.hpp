#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperstar/errors.hpp"

namespace hyperstar {

using VertexId = int;  // 1-based everywhere in the public interface

template <typename Scalar>
struct BasicEdge {
  std::vector<VertexId> vertices;  // sorted ascending, no repeats
  Scalar weight{};                 // strictly positive

  int cardinality() const { return static_cast<int>(vertices.size()); }
  bool contains(VertexId v) const {
    return std::binary_search(vertices.begin(), vertices.end(), v);
  }
};

/// A weighted undirected hypergraph: a vertex count plus an ordered multiset
/// of weighted hyperedges. Duplicate vertex sets are legal and kept as
/// distinct edges. Instances are immutable after construction and safe to
/// share across threads.
template <typename Scalar>
class BasicHypergraph {
 public:
  BasicHypergraph(int n_vertices, std::vector<BasicEdge<Scalar>> edges)
      : n_(n_vertices), edges_(std::move(edges)) {
    if (n_ < 1)
      throw std::invalid_argument("hypergraph needs at least one vertex");
    incident_.assign(static_cast<std::size_t>(n_) + 1, {});
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      auto& e = edges_[i];
      if (e.vertices.empty())
        throw std::invalid_argument("edge " + std::to_string(i) + " is empty");
      if (!(e.weight > Scalar(0)))
        throw std::invalid_argument("edge " + std::to_string(i) +
                                    " must have positive weight");
      std::sort(e.vertices.begin(), e.vertices.end());
      if (std::adjacent_find(e.vertices.begin(), e.vertices.end()) !=
          e.vertices.end())
        throw std::invalid_argument("edge " + std::to_string(i) +
                                    " repeats a vertex");
      for (VertexId v : e.vertices) {
        if (v < 1 || v > n_)
          throw std::invalid_argument("edge " + std::to_string(i) +
                                      " references vertex " +
                                      std::to_string(v) + " outside 1.." +
                                      std::to_string(n_));
        incident_[static_cast<std::size_t>(v)].push_back(static_cast<int>(i));
      }
    }
  }

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<BasicEdge<Scalar>>& edges() const { return edges_; }
  const BasicEdge<Scalar>& edge(int e) const {
    return edges_.at(static_cast<std::size_t>(e));
  }
  /// Indices (in file order) of the edges containing v.
  const std::vector<int>& incident_edges(VertexId v) const {
    if (v < 1 || v > n_) throw std::out_of_range("vertex id out of range");
    return incident_[static_cast<std::size_t>(v)];
  }

 private:
  int n_;
  std::vector<BasicEdge<Scalar>> edges_;
  std::vector<std::vector<int>> incident_;
};

using Edge = BasicEdge<double>;
using Hypergraph = BasicHypergraph<double>;

/// Maximum edge cardinality; 0 when there are no edges.
template <typename Scalar>
int rank(const BasicHypergraph<Scalar>& h) {
  int r = 0;
  for (const auto& e : h.edges()) r = std::max(r, e.cardinality());
  return r;
}

/// Minimum edge cardinality; 0 when there are no edges.
template <typename Scalar>
int anti_rank(const BasicHypergraph<Scalar>& h) {
  if (h.num_edges() == 0) return 0;
  int r = h.edge(0).cardinality();
  for (const auto& e : h.edges()) r = std::min(r, e.cardinality());
  return r;
}

template <typename Scalar>
std::pair<int, int> rank_antirank(const BasicHypergraph<Scalar>& h) {
  return {rank(h), anti_rank(h)};
}

template <typename Scalar>
bool is_uniform(const BasicHypergraph<Scalar>& h, int p) {
  return h.num_edges() > 0 && rank(h) == p && anti_rank(h) == p;
}

/// The common edge cardinality p when every edge has the same one.
template <typename Scalar>
std::optional<int> uniformity(const BasicHypergraph<Scalar>& h) {
  if (h.num_edges() == 0) return std::nullopt;
  int p = rank(h);
  if (anti_rank(h) == p) return p;
  return std::nullopt;
}

/// Vertex partition under co-membership closure. Components are sorted
/// internally and listed by smallest member; isolated vertices form
/// singletons.
template <typename Scalar>
std::vector<std::vector<VertexId>> connected_components(
    const BasicHypergraph<Scalar>& h) {
  const int n = h.num_vertices();
  std::vector<int> parent(static_cast<std::size_t>(n) + 1);
  for (int v = 0; v <= n; ++v) parent[static_cast<std::size_t>(v)] = v;
  auto find = [&](int v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      parent[static_cast<std::size_t>(v)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
      v = parent[static_cast<std::size_t>(v)];
    }
    return v;
  };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  };
  for (const auto& e : h.edges())
    for (std::size_t i = 1; i < e.vertices.size(); ++i)
      unite(e.vertices[0], e.vertices[i]);

  std::vector<std::vector<VertexId>> comps;
  std::vector<int> slot(static_cast<std::size_t>(n) + 1, -1);
  for (int v = 1; v <= n; ++v) {
    int root = find(v);
    if (slot[static_cast<std::size_t>(root)] < 0) {
      slot[static_cast<std::size_t>(root)] = static_cast<int>(comps.size());
      comps.emplace_back();
    }
    comps[static_cast<std::size_t>(slot[static_cast<std::size_t>(root)])]
        .push_back(v);
  }
  return comps;
}

template <typename Scalar>
bool is_connected(const BasicHypergraph<Scalar>& h) {
  return connected_components(h).size() == 1;
}

}  // namespace hyperstar
