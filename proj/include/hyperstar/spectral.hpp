#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "hyperstar/errors.hpp"
#include "hyperstar/matrices.hpp"
#include "hyperstar/report.hpp"

namespace hyperstar {

/// Default verification tolerance for residual checks.
inline constexpr double kDefaultTolerance = 1e-8;
/// Default tolerance for eigenvalue equality, relative to spectral radius.
inline constexpr double kEigenvalueTolerance = 1e-9;
/// Largest matrix order accepted by the dense eigensolver.
inline constexpr int kDenseOrderLimit = 4096;

/// Eigenvalues sorted ascending with orthonormal eigenvector columns.
/// residual_tol is the bound actually achieved:
///   max_i ||M x_i - lambda_i x_i||_inf <= residual_tol * max(1, ||M||_inf)
///   ||Q^T Q - I||_inf <= residual_tol
struct SymSpectrum {
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXd eigenvectors;
  double residual_tol = 0.0;
};

/// Dense symmetric eigendecomposition. Deterministic for fixed input; throws
/// NoConvergence when the achieved residual misses the requested tolerance.
inline SymSpectrum sym_eig(const Eigen::MatrixXd& m,
                           double tol = kDefaultTolerance) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("sym_eig: matrix must be square");
  if (m.rows() > kDenseOrderLimit)
    throw std::invalid_argument("sym_eig: order exceeds dense limit " +
                                std::to_string(kDenseOrderLimit));
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if (m.rows() > 0 &&
      (m - m.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale)
    throw std::invalid_argument("sym_eig: matrix is not symmetric");

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
  if (solver.info() != Eigen::Success)
    throw NoConvergence("sym_eig: eigensolver did not converge");

  SymSpectrum s;
  s.eigenvalues = solver.eigenvalues();
  s.eigenvectors = solver.eigenvectors();

  const double norm_inf =
      std::max(1.0, m.cwiseAbs().rowwise().sum().maxCoeff());
  Eigen::MatrixXd r =
      m * s.eigenvectors - s.eigenvectors * s.eigenvalues.asDiagonal();
  const double resid = r.cwiseAbs().maxCoeff() / norm_inf;
  const double orth =
      (s.eigenvectors.transpose() * s.eigenvectors -
       Eigen::MatrixXd::Identity(m.rows(), m.rows()))
          .cwiseAbs()
          .maxCoeff();
  s.residual_tol = std::max({resid, orth,
                             std::numeric_limits<double>::epsilon()});
  if (s.residual_tol > tol)
    throw NoConvergence("sym_eig: achieved residual " +
                        std::to_string(s.residual_tol) +
                        " above requested tolerance");
  return s;
}

struct EigenCluster {
  double value = 0.0;  // mean of the cluster
  int count = 0;
  double lo = 0.0;
  double hi = 0.0;
};

inline double spectral_radius(const Eigen::VectorXd& eigenvalues) {
  return eigenvalues.size() == 0 ? 0.0 : eigenvalues.cwiseAbs().maxCoeff();
}

inline double cluster_gap(const Eigen::VectorXd& eigenvalues, double tol) {
  return tol * std::max(1.0, spectral_radius(eigenvalues));
}

/// Single-linkage clustering of near-equal eigenvalues: consecutive sorted
/// values closer than tol*max(1, spectral radius) share a cluster.
inline std::vector<EigenCluster> cluster_eigenvalues(Eigen::VectorXd values,
                                                     double tol) {
  std::sort(values.data(), values.data() + values.size());
  std::vector<EigenCluster> out;
  const double gap = cluster_gap(values, tol);
  for (int i = 0; i < values.size(); ++i) {
    if (out.empty() || values(i) - out.back().hi > gap) {
      out.push_back({values(i), 1, values(i), values(i)});
    } else {
      auto& c = out.back();
      c.value = (c.value * c.count + values(i)) / (c.count + 1);
      ++c.count;
      c.hi = values(i);
    }
  }
  return out;
}

/// Number of eigenvalues whose cluster comes within the gap of lambda; a
/// numerical cluster is never split by the probe value. Invariant under
/// permutations of the stored order.
inline int multiplicity(const Eigen::VectorXd& eigenvalues, double lambda,
                        double tol = kEigenvalueTolerance) {
  const double gap = cluster_gap(eigenvalues, tol);
  int count = 0;
  for (const auto& c : cluster_eigenvalues(eigenvalues, tol))
    if (lambda >= c.lo - gap && lambda <= c.hi + gap) count += c.count;
  return count;
}

inline int multiplicity(const SymSpectrum& s, double lambda,
                        double tol = kEigenvalueTolerance) {
  return multiplicity(s.eigenvalues, lambda, tol);
}

struct ContainmentResult {
  bool contained = true;
  std::vector<double> unmatched;  // inner values without a partner
  std::vector<double> surplus;    // outer values left unmatched
};

/// Greedy multiset matching: true iff every inner eigenvalue (with
/// multiplicity) pairs with a distinct outer eigenvalue within the gap.
inline ContainmentResult spectrum_contained(Eigen::VectorXd inner,
                                            Eigen::VectorXd outer,
                                            double tol = kEigenvalueTolerance) {
  std::sort(inner.data(), inner.data() + inner.size());
  std::sort(outer.data(), outer.data() + outer.size());
  const double gap =
      tol * std::max({1.0, spectral_radius(inner), spectral_radius(outer)});
  ContainmentResult res;
  int j = 0;
  for (int i = 0; i < inner.size(); ++i) {
    while (j < outer.size() && outer(j) < inner(i) - gap)
      res.surplus.push_back(outer(j++));
    if (j < outer.size() && std::abs(outer(j) - inner(i)) <= gap) {
      ++j;
    } else {
      res.contained = false;
      res.unmatched.push_back(inner(i));
    }
  }
  while (j < outer.size()) res.surplus.push_back(outer(j++));
  return res;
}

struct FiedlerPair {
  double value = 0.0;
  Eigen::VectorXd vector;
  int multiplicity = 1;  // cluster size of the Fiedler eigenvalue
};

/// Eigenpair of the smallest eigenvalue outside the numerical-zero cluster.
/// The vector is normalized so its first entry above tol is positive.
/// Throws Disconnected when the zero cluster has more than one member.
inline FiedlerPair fiedler_vector(const Eigen::MatrixXd& laplacian_matrix,
                                  double tol = kDefaultTolerance) {
  SymSpectrum s = sym_eig(laplacian_matrix, tol);
  const auto clusters = cluster_eigenvalues(s.eigenvalues, tol);
  const double gap = cluster_gap(s.eigenvalues, tol);

  int zero_count = 0;
  int index = 0;  // first eigenvalue index outside the zero cluster(s)
  for (const auto& c : clusters) {
    if (c.lo - gap <= 0.0 && 0.0 <= c.hi + gap) {
      zero_count += c.count;
      index += c.count;
    } else {
      break;
    }
  }
  if (zero_count > 1)
    throw Disconnected("laplacian has a zero eigenvalue of multiplicity " +
                       std::to_string(zero_count));
  if (index >= s.eigenvalues.size())
    throw Disconnected("no nonzero eigenvalue available");

  FiedlerPair f;
  f.value = s.eigenvalues(index);
  f.vector = s.eigenvectors.col(index);
  for (const auto& c : clusters)
    if (f.value >= c.lo - gap && f.value <= c.hi + gap &&
        !(c.lo - gap <= 0.0 && 0.0 <= c.hi + gap))
      f.multiplicity = c.count;
  for (int i = 0; i < f.vector.size(); ++i) {
    if (std::abs(f.vector(i)) > tol) {
      if (f.vector(i) < 0) f.vector = -f.vector;
      break;
    }
  }
  return f;
}

/// Checks the eigenvector correspondences tying Ã = D_A^{-1/2} A D_A^{-1/2}
/// to the transition matrix T = D_A^{-1} A and the normalized Laplacian:
/// for every eigenpair (lambda, v) of Ã, D_A^{-1/2} v is a right eigenvector
/// of T, v^T D_A^{1/2} a left eigenvector of T, and v an eigenvector of the
/// normalized Laplacian at 1 - lambda. The spectra of T and Ã coincide as
/// multisets through the D_A^{1/2} similarity.
inline VerificationReport verify_s_relations(const Hypergraph& h,
                                             double tol = kDefaultTolerance) {
  Eigen::MatrixXd a = adjacency_matrix(h);
  Eigen::VectorXd d = detail::positive_adjacency_degrees(a);
  Eigen::VectorXd d_sqrt = d.cwiseSqrt();
  Eigen::VectorXd d_inv_sqrt = d_sqrt.cwiseInverse();
  Eigen::MatrixXd atilde = normalized_adjacency(h);
  Eigen::MatrixXd t = transition_matrix(h);
  Eigen::MatrixXd nl = normalized_laplacian(h);

  SymSpectrum s = sym_eig(atilde, tol);
  double r_basis = 0, r_left = 0, r_right = 0, r_shift = 0;
  for (int i = 0; i < s.eigenvalues.size(); ++i) {
    const double lambda = s.eigenvalues(i);
    Eigen::VectorXd v = s.eigenvectors.col(i);
    r_basis = std::max(r_basis,
                       (atilde * v - lambda * v).cwiseAbs().maxCoeff());
    Eigen::VectorXd right = d_inv_sqrt.asDiagonal() * v;
    r_right = std::max(r_right,
                       (t * right - lambda * right).cwiseAbs().maxCoeff());
    Eigen::RowVectorXd left = (d_sqrt.asDiagonal() * v).transpose();
    r_left = std::max(r_left,
                      (left * t - lambda * left).cwiseAbs().maxCoeff());
    r_shift = std::max(
        r_shift, (nl * v - (1.0 - lambda) * v).cwiseAbs().maxCoeff());
  }

  VerificationReport rep;
  rep.add_residual("normalized-adjacency eigenbasis",
                   "symmetric eigendecomposition", r_basis, tol);
  rep.add_residual("transition left eigenvectors",
                   "T similar to normalized adjacency", r_left, tol);
  rep.add_residual("transition right eigenvectors",
                   "T similar to normalized adjacency", r_right, tol);
  rep.add_residual("normalized-laplacian shift",
                   "normalized laplacian = I - normalized adjacency", r_shift,
                   tol);
  rep.add("transition spectrum multiset",
          "T similar to normalized adjacency", r_right <= tol, r_right,
          "established through a full right-eigenvector basis");

  SymSpectrum snl = sym_eig(nl, tol);
  Eigen::VectorXd shifted = (1.0 - s.eigenvalues.array()).matrix();
  std::sort(shifted.data(), shifted.data() + shifted.size());
  const double gap = cluster_gap(snl.eigenvalues, tol);
  double worst = 0;
  for (int i = 0; i < shifted.size(); ++i)
    worst = std::max(worst, std::abs(shifted(i) - snl.eigenvalues(i)));
  rep.add("normalized-laplacian spectrum multiset",
          "normalized laplacian = I - normalized adjacency", worst <= gap,
          worst);
  return rep;
}

}  // namespace hyperstar
