#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hyperstar/matrices.hpp"
#include "hyperstar/spectral.hpp"
#include "hyperstar/stars.hpp"

namespace hyperstar {

/// Orthonormality bound the embedding K must meet by construction.
inline constexpr double kOrthonormalTolerance = 1e-10;

enum class ReductionMode { Q, QStar };

inline const char* to_string(ReductionMode m) {
  return m == ReductionMode::Q ? "q" : "q_star";
}

/// Removal of q < m leaves of a validated witness. Mode QStar additionally
/// drops every hyperedge containing a removed leaf and requires a p-uniform
/// hyperstar on a p-uniform host.
struct ReductionPlan {
  Witness witness;
  std::vector<VertexId> removed;
  ReductionMode mode = ReductionMode::Q;
};

struct ReduceOptions {
  /// Use m/(m-q) instead of (m-q)/m for the q* vertex mass. With the edge
  /// mass already inflating surviving star edges by m/(m-q), this choice
  /// breaks spectrum containment; kept for experimentation only.
  bool inflated_qstar_vertex_mass = false;
};

/// A reduction outcome: the reduced hypergraph, the diagonal vertex (and for
/// q* mode edge) masses, the reduced adjacency-like matrix B, and the
/// orthonormal embedding K of the reduced vertex space into the original one.
struct ReducedPair {
  Hypergraph original;
  Hypergraph reduced;
  ReductionPlan plan;
  std::vector<VertexId> survivors;  // original ids, ascending
  Eigen::VectorXd vertex_mass;      // diagonal of the mass matrix, size N-q
  Eigen::VectorXd edge_mass;        // q* mode only; one entry per reduced edge
  Eigen::MatrixXd B;
  Eigen::MatrixXd K;                // N x (N-q), orthonormal columns
  std::vector<std::string> notes;
};

/// Orthonormal frame for the leaf block of K. Columns are orthonormal with
/// column sums sqrt(m/(m-q)) and row sums sqrt((m-q)/m); at q = m-1 this is
/// the single column 1/sqrt(m). Built from a Helmert basis of the
/// ones-complement, so the result is deterministic.
inline Eigen::MatrixXd leaf_frame(int m, int q) {
  const int s = m - q;
  Eigen::MatrixXd x = Eigen::MatrixXd::Constant(
      m, s, 1.0 / std::sqrt(static_cast<double>(m) * s));
  if (s > 1) {
    Eigen::MatrixXd v = Eigen::MatrixXd::Zero(m, s);
    for (int j = 0; j < s; ++j) {
      const int i = j + 1;
      const double c = 1.0 / std::sqrt(static_cast<double>(i) * (i + 1));
      for (int r = 0; r < i; ++r) v(r, j) = c;
      v(i, j) = -static_cast<double>(i) * c;
    }
    Eigen::MatrixXd g =
        Eigen::MatrixXd::Identity(s, s) -
        Eigen::MatrixXd::Constant(s, s, 1.0 / static_cast<double>(s));
    x += v * g;
  }
  return x;
}

namespace detail {

struct PlanContext {
  int m = 0;
  int q = 0;
  std::vector<VertexId> removed;         // sorted
  std::vector<VertexId> surviving_v1;    // sorted
  std::vector<VertexId> survivors;       // all surviving original ids
  std::vector<int> survivor_index;       // original id -> reduced 0-based index
};

inline PlanContext prepare_plan(const Hypergraph& h, const ReductionPlan& plan,
                                double tol) {
  PlanContext ctx;
  ctx.m = plan.witness.m();
  ctx.removed = plan.removed;
  std::sort(ctx.removed.begin(), ctx.removed.end());
  ctx.removed.erase(std::unique(ctx.removed.begin(), ctx.removed.end()),
                    ctx.removed.end());
  ctx.q = static_cast<int>(ctx.removed.size());
  if (ctx.q < 1 || ctx.q >= ctx.m)
    throw InvalidPlan("must remove between 1 and m-1 leaves");
  for (VertexId v : ctx.removed)
    if (!std::binary_search(plan.witness.v1.begin(), plan.witness.v1.end(), v))
      throw InvalidPlan("removed vertex " + std::to_string(v) +
                        " is not a leaf of the witness");
  ValidationResult val = validate_witness(h, plan.witness, tol);
  if (!val.ok)
    throw InvalidPlan("witness fails validation (" + val.violated + ": " +
                      val.detail + ")");

  std::set_difference(plan.witness.v1.begin(), plan.witness.v1.end(),
                      ctx.removed.begin(), ctx.removed.end(),
                      std::back_inserter(ctx.surviving_v1));
  ctx.survivor_index.assign(static_cast<std::size_t>(h.num_vertices()) + 1, -1);
  for (VertexId v = 1; v <= h.num_vertices(); ++v) {
    if (std::binary_search(ctx.removed.begin(), ctx.removed.end(), v)) continue;
    ctx.survivor_index[static_cast<std::size_t>(v)] =
        static_cast<int>(ctx.survivors.size());
    ctx.survivors.push_back(v);
  }
  return ctx;
}

/// K is the identity on non-leaf vertices; the leaf rows carry the
/// orthonormal frame distributing removed leaves over the survivors.
inline Eigen::MatrixXd build_embedding(const Hypergraph& h,
                                       const Witness& wit,
                                       const PlanContext& ctx) {
  const int n = h.num_vertices();
  Eigen::MatrixXd k = Eigen::MatrixXd::Zero(n, n - ctx.q);
  for (VertexId v : ctx.survivors) {
    if (std::binary_search(wit.v1.begin(), wit.v1.end(), v)) continue;
    k(v - 1, ctx.survivor_index[static_cast<std::size_t>(v)]) = 1.0;
  }
  Eigen::MatrixXd x = leaf_frame(ctx.m, ctx.q);
  for (int r = 0; r < ctx.m; ++r)
    for (int c = 0; c < ctx.m - ctx.q; ++c)
      k(wit.v1[static_cast<std::size_t>(r)] - 1,
        ctx.survivor_index[static_cast<std::size_t>(
            ctx.surviving_v1[static_cast<std::size_t>(c)])]) = x(r, c);
  return k;
}

inline Eigen::VectorXd build_vertex_mass(const PlanContext& ctx, double value) {
  Eigen::VectorXd mass =
      Eigen::VectorXd::Ones(static_cast<int>(ctx.survivors.size()));
  for (VertexId v : ctx.surviving_v1)
    mass(ctx.survivor_index[static_cast<std::size_t>(v)]) = value;
  return mass;
}

}  // namespace detail

/// Removes the planned leaves, shrinking every edge in place by set
/// difference; weights are unchanged and edges reduced to nothing are
/// dropped with a note. B is the adjacency matrix of the reduced hypergraph
/// and the vertex mass is m/(m-q) on the surviving leaves.
inline ReducedPair q_reduce(const Hypergraph& h, const ReductionPlan& plan,
                            const ReduceOptions& = {},
                            double tol = kDefaultTolerance) {
  if (plan.mode != ReductionMode::Q)
    throw InvalidPlan("q_reduce requires mode q");
  detail::PlanContext ctx = detail::prepare_plan(h, plan, tol);

  ReducedPair pair;
  pair.original = h;
  pair.plan = plan;
  pair.plan.removed = ctx.removed;
  std::vector<Edge> edges;
  for (int e = 0; e < h.num_edges(); ++e) {
    std::vector<VertexId> verts;
    for (VertexId v : h.edge(e).vertices)
      if (!std::binary_search(ctx.removed.begin(), ctx.removed.end(), v))
        verts.push_back(ctx.survivor_index[static_cast<std::size_t>(v)] + 1);
    if (verts.empty()) {
      pair.notes.push_back("edge " + std::to_string(e) +
                           " reduced to the empty set; dropped");
      continue;
    }
    edges.push_back({std::move(verts), h.edge(e).weight});
  }
  pair.reduced = Hypergraph(h.num_vertices() - ctx.q, std::move(edges));
  pair.survivors = ctx.survivors;
  pair.B = adjacency_matrix(pair.reduced);
  pair.vertex_mass = detail::build_vertex_mass(
      ctx, static_cast<double>(ctx.m) / (ctx.m - ctx.q));
  pair.K = detail::build_embedding(h, plan.witness, ctx);
  return pair;
}

/// Removes the planned leaves together with every hyperedge containing one.
/// The host must be p-uniform with a p-uniform hyperstar witness; the
/// reduced hypergraph stays p-uniform. B interposes the edge mass
/// m/(m-q) on the surviving star edges, which restores the core block of the
/// original adjacency matrix; the vertex mass is (m-q)/m on the surviving
/// leaves, compensating the inflated leaf rows of B.
inline ReducedPair q_star_reduce(const Hypergraph& h,
                                 const ReductionPlan& plan,
                                 const ReduceOptions& opts = {},
                                 double tol = kDefaultTolerance) {
  if (plan.mode != ReductionMode::QStar)
    throw InvalidPlan("q_star_reduce requires mode q_star");
  if (!plan.witness.uniform_p)
    throw InvalidPlan("q* reduction needs a p-uniform hyperstar witness");
  const int p = *plan.witness.uniform_p;
  if (!is_uniform(h, p))
    throw NotUniform("host hypergraph is not " + std::to_string(p) +
                     "-uniform");
  detail::PlanContext ctx = detail::prepare_plan(h, plan, tol);

  ReducedPair pair;
  pair.original = h;
  pair.plan = plan;
  pair.plan.removed = ctx.removed;
  const double alpha = static_cast<double>(ctx.m) / (ctx.m - ctx.q);
  std::vector<Edge> edges;
  std::vector<double> edge_mass;
  for (int e = 0; e < h.num_edges(); ++e) {
    bool keep = true;
    for (VertexId v : ctx.removed)
      if (h.edge(e).contains(v)) {
        keep = false;
        break;
      }
    if (!keep) continue;
    std::vector<VertexId> verts;
    for (VertexId v : h.edge(e).vertices)
      verts.push_back(ctx.survivor_index[static_cast<std::size_t>(v)] + 1);
    bool meets_leaf = false;
    for (VertexId v : ctx.surviving_v1)
      if (h.edge(e).contains(v)) {
        meets_leaf = true;
        break;
      }
    edge_mass.push_back(meets_leaf ? alpha : 1.0);
    edges.push_back({std::move(verts), h.edge(e).weight});
  }
  pair.reduced = Hypergraph(h.num_vertices() - ctx.q, std::move(edges));
  pair.survivors = ctx.survivors;
  pair.edge_mass = Eigen::Map<Eigen::VectorXd>(edge_mass.data(),
                                               static_cast<int>(edge_mass.size()));

  const int nr = pair.reduced.num_vertices();
  pair.B = Eigen::MatrixXd::Zero(nr, nr);
  for (int e = 0; e < pair.reduced.num_edges(); ++e) {
    const auto& verts = pair.reduced.edge(e).vertices;
    const double w = pair.edge_mass(e) * pair.reduced.edge(e).weight;
    for (std::size_t i = 0; i < verts.size(); ++i)
      for (std::size_t j = i + 1; j < verts.size(); ++j) {
        pair.B(verts[i] - 1, verts[j] - 1) += w;
        pair.B(verts[j] - 1, verts[i] - 1) += w;
      }
  }
  pair.vertex_mass = detail::build_vertex_mass(
      ctx, opts.inflated_qstar_vertex_mass
               ? alpha
               : static_cast<double>(ctx.m - ctx.q) / ctx.m);
  pair.K = detail::build_embedding(h, plan.witness, ctx);
  return pair;
}

/// Mass-weighted reduced matrix MB.
inline Eigen::MatrixXd mass_weighted(const ReducedPair& pair) {
  return pair.vertex_mass.asDiagonal() * pair.B;
}

/// Symmetric reduced form M^{1/2} B M^{1/2}, similar to MB.
inline Eigen::MatrixXd sym_reduced_form(const ReducedPair& pair) {
  Eigen::VectorXd half = pair.vertex_mass.cwiseSqrt();
  return half.asDiagonal() * pair.B * half.asDiagonal();
}

/// Diagonal of K^T D_A K: the degree matrix the reduced Laplacians inherit
/// from the original hypergraph.
inline Eigen::VectorXd reduced_degrees(const ReducedPair& pair) {
  Eigen::VectorXd da = adjacency_degrees(pair.original);
  Eigen::VectorXd out = Eigen::VectorXd::Zero(pair.K.cols());
  for (int j = 0; j < pair.K.cols(); ++j)
    for (int i = 0; i < pair.K.rows(); ++i)
      out(j) += pair.K(i, j) * pair.K(i, j) * da(i);
  return out;
}

/// Symmetric reduced Laplacian diag(K^T D_A K) - M^{1/2} B M^{1/2}.
inline Eigen::MatrixXd reduced_laplacian_sym(const ReducedPair& pair) {
  Eigen::MatrixXd l = -sym_reduced_form(pair);
  l.diagonal() += reduced_degrees(pair);
  return l;
}

/// Mass-weighted reduced Laplacian diag(K^T D_A K) - MB, similar to the
/// symmetric form through M^{1/2}.
inline Eigen::MatrixXd reduced_laplacian_mass(const ReducedPair& pair) {
  Eigen::MatrixXd l = -mass_weighted(pair);
  l.diagonal() += reduced_degrees(pair);
  return l;
}

/// K x: maps an eigenvector of the symmetric reduced form to an eigenvector
/// of the original matrix at the same eigenvalue.
inline Eigen::VectorXd lift_eigenvector(const ReducedPair& pair,
                                        const Eigen::VectorXd& x) {
  if (x.size() != pair.K.cols())
    throw DimensionMismatch("expected a vector of size " +
                            std::to_string(pair.K.cols()) + ", got " +
                            std::to_string(x.size()));
  return pair.K * x;
}

namespace detail {

inline std::string format_values(const std::vector<double>& vals) {
  std::string out;
  char buf[32];
  for (double v : vals) {
    if (!out.empty()) out += ", ";
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    out += buf;
  }
  return out;
}

}  // namespace detail

/// Verifies the adjacency-side reduction claims: K has orthonormal columns,
/// the symmetric reduced form is the quotient K^T A K, the spectrum of MB is
/// contained in that of A with the gap exactly the removed zero eigenvalues,
/// lifted eigenvectors stay eigenvectors of A, and Cauchy interlacing holds
/// together with the tight-interlacing commutation K B_sym = A K.
inline VerificationReport verify_adjacency_reduction(
    const ReducedPair& pair, double tol = kDefaultTolerance) {
  VerificationReport rep;
  const bool qstar = pair.plan.mode == ReductionMode::QStar;
  const std::string ref = qstar ? "uniform adjacency reduction"
                                : "adjacency reduction";
  const int q = static_cast<int>(pair.plan.removed.size());

  Eigen::MatrixXd a = adjacency_matrix(pair.original);
  Eigen::MatrixXd s = sym_reduced_form(pair);

  const double orth =
      (pair.K.transpose() * pair.K -
       Eigen::MatrixXd::Identity(pair.K.cols(), pair.K.cols()))
          .cwiseAbs()
          .maxCoeff();
  rep.add_residual("embedding orthonormality", ref, orth,
                   kOrthonormalTolerance);

  const double quot =
      (s - pair.K.transpose() * a * pair.K).cwiseAbs().maxCoeff();
  rep.add_residual("quotient identity", ref, quot, tol);

  if (qstar) {
    Eigen::MatrixXd inc = incidence_matrix(pair.reduced).cwiseSqrt();
    Eigen::MatrixXd prod = inc * pair.edge_mass.asDiagonal() * inc.transpose();
    prod -= Eigen::MatrixXd(prod.diagonal().asDiagonal());
    const double scale = std::max(1.0, pair.B.cwiseAbs().maxCoeff());
    rep.add_residual("edge-mass product form", ref,
                     (prod - pair.B).cwiseAbs().maxCoeff(), 1e-12 * scale);
    const int p = *pair.plan.witness.uniform_p;
    rep.add("uniformity preserved", ref, is_uniform(pair.reduced, p),
            std::numeric_limits<double>::quiet_NaN(),
            "rank=" + std::to_string(rank(pair.reduced)) +
                " antirank=" + std::to_string(anti_rank(pair.reduced)));
  }

  SymSpectrum sa = sym_eig(a, tol);
  SymSpectrum ss = sym_eig(s, tol);
  ContainmentResult cont =
      spectrum_contained(ss.eigenvalues, sa.eigenvalues, tol);
  rep.add("spectrum containment", ref, cont.contained,
          std::numeric_limits<double>::quiet_NaN(),
          cont.contained
              ? ""
              : "unmatched: " + detail::format_values(cont.unmatched));

  const double gap = tol * std::max(1.0, spectral_radius(sa.eigenvalues));
  bool zero_gap = static_cast<int>(cont.surplus.size()) == q;
  for (double v : cont.surplus) zero_gap = zero_gap && std::abs(v) <= gap;
  rep.add("spectral gap is the removed zero multiplicity", ref,
          cont.contained && zero_gap,
          std::numeric_limits<double>::quiet_NaN(),
          std::to_string(cont.surplus.size()) +
              " surplus eigenvalues: " + detail::format_values(cont.surplus) +
              (qstar ? "; full multiset equality is impossible at different "
                       "orders, reported rather than asserted"
                     : ""));

  double lift = 0.0;
  for (int i = 0; i < ss.eigenvalues.size(); ++i) {
    Eigen::VectorXd y = pair.K * ss.eigenvectors.col(i);
    lift = std::max(lift,
                    (a * y - ss.eigenvalues(i) * y).cwiseAbs().maxCoeff());
  }
  rep.add_residual("eigenvector lifting (adjacency)", ref, lift, tol);

  bool interlaced = true;
  double worst = 0.0;
  const int na = static_cast<int>(sa.eigenvalues.size());
  const int nb = static_cast<int>(ss.eigenvalues.size());
  for (int v = 0; v < nb; ++v) {
    // descending order: mu_v(A) >= mu_v(B) >= mu_{v+q}(A)
    const double upper = sa.eigenvalues(na - 1 - v);
    const double middle = ss.eigenvalues(nb - 1 - v);
    const double lower = sa.eigenvalues(na - 1 - (v + q));
    worst = std::max({worst, middle - upper, lower - middle});
    interlaced = interlaced && middle <= upper + gap && middle >= lower - gap;
  }
  rep.add("Cauchy interlacing", ref, interlaced, std::max(worst, 0.0));

  rep.add_residual("tight-interlacing commutation", ref,
                   (pair.K * s - a * pair.K).cwiseAbs().maxCoeff(), tol);
  return rep;
}

/// Verifies the Laplacian-side claims: spectrum containment of the reduced
/// Laplacian, the gap equal to the removed copies of the star weight,
/// eigenvector lifting into L(A), the mass similarity between the weighted
/// and symmetric reduced Laplacians, and the degree commutation
/// diag(A) K = K diag(MB).
inline VerificationReport verify_laplacian_reduction(
    const ReducedPair& pair, double tol = kDefaultTolerance) {
  VerificationReport rep;
  const std::string ref = pair.plan.mode == ReductionMode::QStar
                              ? "uniform laplacian reduction"
                              : "laplacian reduction";
  const int q = static_cast<int>(pair.plan.removed.size());

  Eigen::MatrixXd l = laplacian(pair.original);
  Eigen::MatrixXd lt = reduced_laplacian_sym(pair);
  SymSpectrum sl = sym_eig(l, tol);
  SymSpectrum st = sym_eig(lt, tol);

  ContainmentResult cont =
      spectrum_contained(st.eigenvalues, sl.eigenvalues, tol);
  rep.add("spectrum containment (laplacian)", ref, cont.contained,
          std::numeric_limits<double>::quiet_NaN(),
          cont.contained
              ? ""
              : "unmatched: " + detail::format_values(cont.unmatched));

  const double star_weight =
      star_summary(pair.original, pair.plan.witness, tol).weight;
  const double gap = tol * std::max(1.0, spectral_radius(sl.eigenvalues));
  bool weight_gap = static_cast<int>(cont.surplus.size()) == q;
  for (double v : cont.surplus)
    weight_gap = weight_gap && std::abs(v - star_weight) <= gap;
  rep.add("spectral gap is the removed star-weight multiplicity", ref,
          cont.contained && weight_gap,
          std::numeric_limits<double>::quiet_NaN(),
          std::to_string(cont.surplus.size()) +
              " surplus eigenvalues: " + detail::format_values(cont.surplus));

  double lift = 0.0;
  for (int i = 0; i < st.eigenvalues.size(); ++i) {
    Eigen::VectorXd y = pair.K * st.eigenvectors.col(i);
    lift = std::max(lift,
                    (l * y - st.eigenvalues(i) * y).cwiseAbs().maxCoeff());
  }
  rep.add_residual("eigenvector lifting (laplacian)", ref, lift, tol);

  Eigen::VectorXd half = pair.vertex_mass.cwiseSqrt();
  Eigen::MatrixXd lm = reduced_laplacian_mass(pair);
  const double sim = (half.cwiseInverse().asDiagonal() * lm *
                          half.asDiagonal() -
                      lt)
                         .cwiseAbs()
                         .maxCoeff();
  rep.add_residual("mass similarity of reduced laplacians", ref, sim, tol);

  Eigen::VectorXd da = adjacency_degrees(pair.original);
  const double comm = (da.asDiagonal() * pair.K -
                       pair.K * reduced_degrees(pair).asDiagonal())
                          .cwiseAbs()
                          .maxCoeff();
  rep.add_residual("degree commutation", ref, comm, tol);
  return rep;
}

}  // namespace hyperstar
