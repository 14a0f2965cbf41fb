#pragma once

#include "ucent/centrality_vector.hpp"
#include "ucent/errors.hpp"
#include "ucent/graph.hpp"
#include "ucent/phi.hpp"
#include "ucent/spectral.hpp"

#include <cmath>
#include <utility>

namespace ucent {

namespace detail {

template <typename Scalar>
void require_positive(Scalar v, const char* what) {
  using std::isfinite;
  if (!(v > Scalar(0)) || !isfinite(v)) throw InvalidArgument(std::string(what) + " must be positive and finite");
}

}  // namespace detail

/// Deviation of the single-node minimum-energy terminal state from
/// consensus, x_fi - (c/n) 1 = c sum_{k>=2} phi(lambda_k tf) (u_k' e_i) u_k.
template <typename Scalar>
Vector<Scalar> terminal_deviation(const SpectralDecomposition<Scalar>& dec, Index node, Scalar horizon,
                                  Scalar threshold) {
  detail::require_positive(horizon, "horizon");
  detail::require_positive(threshold, "threshold");
  if (node < 0 || node >= dec.size()) throw InvalidArgument("node out of range");
  const Index n = dec.size();
  Vector<Scalar> weights(n - 1);
  for (Index k = 1; k < n; ++k) weights(k - 1) = threshold * phi(dec.values(k) * horizon) * dec.vectors(node, k);
  return dec.vectors.rightCols(n - 1) * weights;
}

template <typename Scalar = double>
struct UCentralityProfile {
  Scalar horizon;
  Scalar threshold;
  Matrix<Scalar> deviations;  // column i is x_fi - (c/n) 1
  Vector<Scalar> scores;      // column norms
};

/// All terminal deviations at once: c U diag(phi) U' (the first factor is zero).
template <typename Scalar>
UCentralityProfile<Scalar> u_centrality_profile(const SpectralDecomposition<Scalar>& dec, Scalar horizon,
                                                Scalar threshold) {
  detail::require_positive(horizon, "horizon");
  detail::require_positive(threshold, "threshold");
  const Index n = dec.size();
  const auto tail = dec.vectors.rightCols(n - 1);
  Vector<Scalar> filter(n - 1);
  for (Index k = 1; k < n; ++k) filter(k - 1) = threshold * phi(dec.values(k) * horizon);

  UCentralityProfile<Scalar> profile{horizon, threshold, tail * filter.asDiagonal() * tail.transpose(), {}};
  profile.scores = profile.deviations.colwise().norm().transpose();
  return profile;
}

/// Distance from consensus of each node's minimum-energy terminal state.
/// Smaller is more central.
template <typename Scalar>
CentralityVector<Scalar> u_centrality(const SpectralDecomposition<Scalar>& dec, Scalar horizon, Scalar threshold) {
  return {"u", u_centrality_profile(dec, horizon, threshold).scores, Orientation::LowerIsCentral};
}

/// Exact first-order rate -(c/2) sqrt(n/(n-1)) d_i at which score_i leaves
/// c sqrt((n-1)/n) as the horizon grows from zero.
template <typename Scalar = double>
Vector<Scalar> small_horizon_slope(const Graph& g, Scalar threshold) {
  using std::sqrt;
  require_connected(g);
  const Scalar n = Scalar(g.size());
  return g.degrees().cast<Scalar>() * (-threshold / Scalar(2) * sqrt(n / (n - Scalar(1))));
}

/// c sqrt((n-1)/n), the common zero-horizon score.
template <typename Scalar>
Scalar small_horizon_limit(Index n, Scalar threshold) {
  using std::sqrt;
  return threshold * sqrt(Scalar(n - 1) / Scalar(n));
}

/// ||L+ e_i||_2 per node. Smaller is more central.
template <typename Derived>
CentralityVector<typename Derived::Scalar> laplacian_inverse_centrality(const Eigen::MatrixBase<Derived>& pinv) {
  return {"linv", pinv.colwise().norm().transpose(), Orientation::LowerIsCentral};
}

/// (c/tf) ||L+ e_i||_2: the leading term of score_i for long horizons.
template <typename Derived>
Vector<typename Derived::Scalar> large_horizon_asymptote(const Eigen::MatrixBase<Derived>& pinv,
                                                         typename Derived::Scalar horizon,
                                                         typename Derived::Scalar threshold) {
  detail::require_positive(horizon, "horizon");
  return pinv.colwise().norm().transpose() * (threshold / horizon);
}

namespace detail {

inline void require_tree_distances(const DistanceMatrix& dist) {
  // A connected graph is a tree iff its hop matrix has exactly n-1 unit entries
  // above the diagonal.
  const Index n = dist.size();
  Index unit = 0;
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j) unit += dist.hops(i, j) == 1;
  if (n == 0 || unit != n - 1) throw NotATree();
}

}  // namespace detail

/// L+ of a tree from hop distances:
/// L+_ij = ((D_i + D_j)/n - d_ij - W/n^2) / 2.
template <typename Scalar = double>
Matrix<Scalar> tree_pseudoinverse(const DistanceMatrix& dist) {
  detail::require_tree_distances(dist);
  const Index n = dist.size();
  const Scalar nn = Scalar(n);
  const Scalar mean_total = Scalar(dist.total) / (nn * nn);
  Matrix<Scalar> p(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      p(i, j) = (Scalar(dist.row_sums(i) + dist.row_sums(j)) / nn - Scalar(dist.hops(i, j)) - mean_total) / Scalar(2);
  return p;
}

template <typename Scalar>
Matrix<Scalar> tree_pseudoinverse(const Graph& g) {
  if (!is_tree(g)) throw NotATree();
  return tree_pseudoinverse<Scalar>(all_pairs_hop_distances(g));
}

/// The node-dependent groupings of 4 ||L+ e_i||^2 on a tree.
template <typename Scalar = double>
struct TreeScoreTerms {
  Scalar common;         // sum_j D_j^2 / n^2 - W^2 / n^3, the same for every node
  Scalar variance_term;  // sum_j (D_i/n - d_ij)^2
  Scalar cross_term;     // 2 sum_j (D_j/n) (D_i/n - d_ij)

  Scalar squared_norm() const { return (common + variance_term + cross_term) / Scalar(4); }
};

template <typename Scalar = double>
TreeScoreTerms<Scalar> tree_score_decomposition(const DistanceMatrix& dist, Index node) {
  detail::require_tree_distances(dist);
  const Index n = dist.size();
  if (node < 0 || node >= n) throw InvalidArgument("node out of range");
  const Scalar nn = Scalar(n);
  const Scalar w = Scalar(dist.total);
  const Scalar mean_i = Scalar(dist.row_sums(node)) / nn;

  TreeScoreTerms<Scalar> t{Scalar(0), Scalar(0), Scalar(0)};
  for (Index j = 0; j < n; ++j) {
    const Scalar mean_j = Scalar(dist.row_sums(j)) / nn;
    const Scalar gap = mean_i - Scalar(dist.hops(node, j));
    t.common += mean_j * mean_j;
    t.variance_term += gap * gap;
    t.cross_term += Scalar(2) * mean_j * gap;
  }
  t.common -= w * w / (nn * nn * nn);
  return t;
}

}  // namespace ucent
