#pragma once

#include <Eigen/Dense>

#include "hyperstar/hypergraph.hpp"

namespace hyperstar {

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// N×M incidence matrix: entry (v,e) = w(e) when v ∈ e, 0 otherwise.
template <typename Scalar>
MatrixX<Scalar> incidence_matrix(const BasicHypergraph<Scalar>& h) {
  MatrixX<Scalar> m = MatrixX<Scalar>::Zero(h.num_vertices(), h.num_edges());
  for (int e = 0; e < h.num_edges(); ++e)
    for (VertexId v : h.edge(e).vertices) m(v - 1, e) = h.edge(e).weight;
  return m;
}

/// d(v) = sum of the weights of the edges containing v.
template <typename Scalar>
VectorX<Scalar> vertex_degrees(const BasicHypergraph<Scalar>& h) {
  VectorX<Scalar> d = VectorX<Scalar>::Zero(h.num_vertices());
  for (const auto& e : h.edges())
    for (VertexId v : e.vertices) d(v - 1) += e.weight;
  return d;
}

/// d(e) = |e|·w(e), accumulated as the incidence column sum so the identity
/// with the incidence matrix holds exactly.
template <typename Scalar>
VectorX<Scalar> edge_degrees(const BasicHypergraph<Scalar>& h) {
  VectorX<Scalar> d = VectorX<Scalar>::Zero(h.num_edges());
  for (int e = 0; e < h.num_edges(); ++e)
    for (int i = 0; i < h.edge(e).cardinality(); ++i) d(e) += h.edge(e).weight;
  return d;
}

/// Adjacency matrix by direct edge iteration: A(v,u) = total weight of the
/// edges containing both v and u. Symmetric with an exactly zero diagonal.
template <typename Scalar>
MatrixX<Scalar> adjacency_matrix(const BasicHypergraph<Scalar>& h) {
  const int n = h.num_vertices();
  MatrixX<Scalar> a = MatrixX<Scalar>::Zero(n, n);
  for (const auto& e : h.edges())
    for (std::size_t i = 0; i < e.vertices.size(); ++i)
      for (std::size_t j = i + 1; j < e.vertices.size(); ++j)
        a(e.vertices[i] - 1, e.vertices[j] - 1) += e.weight;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) a(j, i) = a(i, j);
  return a;
}

/// Adjacency matrix through the elementwise-square-root product
/// H^{1/2}(H^T)^{1/2} − D_v. Kept as an independent construction route; it
/// agrees with adjacency_matrix() up to floating-point rounding.
template <typename Scalar>
MatrixX<Scalar> adjacency_product_form(const BasicHypergraph<Scalar>& h) {
  MatrixX<Scalar> s = incidence_matrix(h).cwiseSqrt();
  MatrixX<Scalar> a = s * s.transpose();
  a -= MatrixX<Scalar>(vertex_degrees(h).asDiagonal());
  return a;
}

/// d_A(v): row sums of the adjacency matrix.
template <typename Scalar>
VectorX<Scalar> adjacency_degrees(const MatrixX<Scalar>& adjacency) {
  return adjacency.rowwise().sum();
}

template <typename Scalar>
VectorX<Scalar> adjacency_degrees(const BasicHypergraph<Scalar>& h) {
  return adjacency_degrees(adjacency_matrix(h));
}

template <typename Scalar>
struct Degrees {
  VectorX<Scalar> vertex;     // d(v)
  VectorX<Scalar> edge;       // d(e)
  VectorX<Scalar> adjacency;  // d_A(v)
};

template <typename Scalar>
Degrees<Scalar> degrees(const BasicHypergraph<Scalar>& h) {
  return {vertex_degrees(h), edge_degrees(h), adjacency_degrees(h)};
}

/// L = D_A − A with D_A = diag(A·1).
template <typename Scalar>
MatrixX<Scalar> laplacian(const BasicHypergraph<Scalar>& h) {
  MatrixX<Scalar> a = adjacency_matrix(h);
  VectorX<Scalar> d = adjacency_degrees(a);
  MatrixX<Scalar> l = -a;
  l.diagonal() = d;
  return l;
}

namespace detail {
template <typename Scalar>
VectorX<Scalar> positive_adjacency_degrees(const MatrixX<Scalar>& a) {
  VectorX<Scalar> d = adjacency_degrees(a);
  for (int v = 0; v < d.size(); ++v)
    if (!(d(v) > Scalar(0))) throw ZeroAdjacencyDegree(v + 1);
  return d;
}
}  // namespace detail

/// Ã = D_A^{-1/2} A D_A^{-1/2}, built symmetric entry by entry.
template <typename Scalar>
MatrixX<Scalar> normalized_adjacency(const BasicHypergraph<Scalar>& h) {
  MatrixX<Scalar> a = adjacency_matrix(h);
  VectorX<Scalar> inv =
      detail::positive_adjacency_degrees(a).cwiseSqrt().cwiseInverse();
  const int n = h.num_vertices();
  MatrixX<Scalar> t = MatrixX<Scalar>::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) t(i, j) = t(j, i) = a(i, j) * inv(i) * inv(j);
  return t;
}

/// Normalized Laplacian I − D_A^{-1/2} A D_A^{-1/2}.
template <typename Scalar>
MatrixX<Scalar> normalized_laplacian(const BasicHypergraph<Scalar>& h) {
  MatrixX<Scalar> l = -normalized_adjacency(h);
  l.diagonal().array() += Scalar(1);
  return l;
}

/// T = D_A^{-1} A (row-stochastic up to weights; not symmetric in general).
template <typename Scalar>
MatrixX<Scalar> transition_matrix(const BasicHypergraph<Scalar>& h) {
  MatrixX<Scalar> a = adjacency_matrix(h);
  VectorX<Scalar> d = detail::positive_adjacency_degrees(a);
  return d.cwiseInverse().asDiagonal() * a;
}

}  // namespace hyperstar
