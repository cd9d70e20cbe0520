#pragma once

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "hyperstar/reduction.hpp"
#include "hyperstar/spectral.hpp"

namespace hyperstar {

/// Sign partition of the vertex set by the Fiedler vector. Entries with
/// |x(v)| <= tol count as nonnegative, so the positive side is
/// {v : x(v) >= -tol}.
struct Bipartition {
  std::vector<VertexId> positive;
  std::vector<VertexId> negative;
  double fiedler_value = 0.0;
  Eigen::VectorXd vector;
  bool degenerate = false;  // Fiedler eigenvalue has numerical multiplicity > 1
  std::string note;
};

/// Partitions a connected hypergraph by the sign of the eigenvector of the
/// smallest nonzero Laplacian eigenvalue. A degenerate Fiedler eigenvalue is
/// reported through the flag, not an error; disconnected input throws.
inline Bipartition fiedler_partition(const Hypergraph& h,
                                     double tol = kDefaultTolerance) {
  FiedlerPair f = fiedler_vector(laplacian(h), tol);
  Bipartition out;
  out.fiedler_value = f.value;
  out.vector = f.vector;
  out.degenerate = f.multiplicity > 1;
  if (out.degenerate)
    out.note = "Fiedler eigenvalue has numerical multiplicity " +
               std::to_string(f.multiplicity) +
               "; the partition depends on the solver's basis choice";
  for (int v = 0; v < f.vector.size(); ++v) {
    if (f.vector(v) >= -tol)
      out.positive.push_back(v + 1);
    else
      out.negative.push_back(v + 1);
  }
  return out;
}

/// Sign comparison up to one global flip; entries within tol of zero match
/// either sign.
inline bool signs_match_up_to_flip(const Eigen::VectorXd& a,
                                   const Eigen::VectorXd& b, double tol) {
  if (a.size() != b.size())
    throw DimensionMismatch("sign comparison needs equal-length vectors");
  auto sgn = [tol](double x) { return x > tol ? 1 : (x < -tol ? -1 : 0); };
  int flip = 0;
  for (int i = 0; i < a.size(); ++i) {
    const int sa = sgn(a(i)), sb = sgn(b(i));
    if (sa == 0 || sb == 0) continue;
    if (flip == 0)
      flip = sa * sb;
    else if (sa * sb != flip)
      return false;
  }
  return true;
}

/// For every simple eigenvalue shared by the reduced Laplacian and L(A):
/// takes the eigenvector x~ of the symmetric reduced Laplacian, forms
/// x = M^{1/2} x~ (eigenvector of the mass-weighted reduced Laplacian) and
/// y = K x~ (eigenvector of L(A)), and checks that x and y carry the same
/// signs on every surviving vertex up to one global flip. Eigenvalues with
/// multiplicity above one are skipped with a note.
inline VerificationReport sign_correspondence(const ReducedPair& pair,
                                              double tol = kDefaultTolerance) {
  VerificationReport rep;
  const std::string ref = "reduced Fiedler sign correspondence";

  Eigen::MatrixXd l = laplacian(pair.original);
  Eigen::MatrixXd lt = reduced_laplacian_sym(pair);
  SymSpectrum sl = sym_eig(l, tol);
  SymSpectrum st = sym_eig(lt, tol);
  const auto clusters_orig = cluster_eigenvalues(sl.eigenvalues, tol);
  const double gap =
      tol * std::max({1.0, spectral_radius(sl.eigenvalues),
                      spectral_radius(st.eigenvalues)});
  Eigen::VectorXd half = pair.vertex_mass.cwiseSqrt();

  char label[48];
  int index = 0;
  for (const auto& rc : cluster_eigenvalues(st.eigenvalues, tol)) {
    std::snprintf(label, sizeof(label), "sign agreement at %.6g", rc.value);
    const int first = index;
    index += rc.count;
    if (rc.count > 1) {
      rep.skip(label, ref,
               "multiplicity " + std::to_string(rc.count) +
                   " in the reduced laplacian");
      continue;
    }
    const EigenCluster* match = nullptr;
    for (const auto& oc : clusters_orig)
      if (rc.value >= oc.lo - gap && rc.value <= oc.hi + gap) match = &oc;
    if (match == nullptr) {
      rep.add(label, ref, false,
              std::numeric_limits<double>::quiet_NaN(),
              "eigenvalue absent from the original laplacian");
      continue;
    }
    if (match->count > 1) {
      rep.skip(label, ref, "multiplicity " + std::to_string(match->count) +
                               " in the original laplacian");
      continue;
    }
    Eigen::VectorXd xt = st.eigenvectors.col(first);
    Eigen::VectorXd x = half.asDiagonal() * xt;
    Eigen::VectorXd lifted = pair.K * xt;
    Eigen::VectorXd y(x.size());
    for (std::size_t j = 0; j < pair.survivors.size(); ++j)
      y(static_cast<int>(j)) = lifted(pair.survivors[j] - 1);
    rep.add(label, ref, signs_match_up_to_flip(x, y, tol));
  }
  return rep;
}

}  // namespace hyperstar
