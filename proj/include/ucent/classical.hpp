#pragma once

#include "ucent/centrality_vector.hpp"
#include "ucent/errors.hpp"
#include "ucent/graph.hpp"

#include <cmath>

namespace ucent {

template <typename Scalar = double>
CentralityVector<Scalar> degree_centrality(const Graph& g) {
  return {"degree", g.degrees().cast<Scalar>(), Orientation::HigherIsCentral};
}

/// Perron vector of A by power iteration on A + I from the all-ones start.
/// The shift keeps the Perron vector and removes the +/- oscillation on
/// bipartite graphs. Iterates are kept at unit Euclidean norm; stops when two
/// successive iterates differ by less than `tol` in max-norm.
template <typename Scalar = double>
CentralityVector<Scalar> eigenvector_centrality(const Graph& g, Scalar tol = Scalar(1e-12),
                                                long max_iters = 100000) {
  require_connected(g);
  const Index n = g.size();
  Vector<Scalar> v = Vector<Scalar>::Constant(n, Scalar(1) / std::sqrt(Scalar(n)));
  Vector<Scalar> next(n);
  for (long iter = 0; iter < max_iters; ++iter) {
    for (Index i = 0; i < n; ++i) {
      Scalar acc = v(i);
      for (Index j : g.neighbors(i)) acc += v(j);
      next(i) = acc;
    }
    next.normalize();
    const Scalar change = (next - v).cwiseAbs().maxCoeff();
    v.swap(next);
    if (change < tol) return {"eigenvector", v, Orientation::HigherIsCentral};
  }
  throw NoConvergence("eigenvector centrality did not converge");
}

/// Closeness as the distance sum D_i rather than its reciprocal; lower is
/// more central.
template <typename Scalar = double>
CentralityVector<Scalar> closeness_centrality(const DistanceMatrix& dist) {
  return {"closeness", dist.row_sums.cast<Scalar>(), Orientation::LowerIsCentral};
}

namespace detail {

// sum_j (R_i/n - R_ij)^2 per row of a distance-like matrix.
template <typename Derived>
Vector<typename Derived::Scalar> centered_second_moment(const Eigen::MatrixBase<Derived>& r) {
  using Scalar = typename Derived::Scalar;
  const Vector<Scalar> mean = r.rowwise().sum() / Scalar(r.cols());
  return (r.colwise() - mean).rowwise().squaredNorm();
}

}  // namespace detail

template <typename Scalar = double>
CentralityVector<Scalar> variance_centrality(const DistanceMatrix& dist) {
  return {"variance", detail::centered_second_moment(dist.hops.cast<Scalar>()), Orientation::LowerIsCentral};
}

/// Effective resistances R_ij = L+_ii + L+_jj - 2 L+_ij for unit conductances.
template <typename Derived>
Matrix<typename Derived::Scalar> resistance_distances(const Eigen::MatrixBase<Derived>& pinv) {
  using Scalar = typename Derived::Scalar;
  const Vector<Scalar> diag = pinv.diagonal();
  Matrix<Scalar> r = (-Scalar(2) * pinv).eval();
  r.colwise() += diag;
  r.rowwise() += diag.transpose();
  r.diagonal().setZero();
  return (r + r.transpose()) / Scalar(2);
}

template <typename Derived>
CentralityVector<typename Derived::Scalar> current_flow_closeness(const Eigen::MatrixBase<Derived>& resistance) {
  return {"cf-closeness", resistance.rowwise().sum(), Orientation::LowerIsCentral};
}

template <typename Derived>
CentralityVector<typename Derived::Scalar> current_flow_variance(const Eigen::MatrixBase<Derived>& resistance) {
  return {"cf-variance", detail::centered_second_moment(resistance), Orientation::LowerIsCentral};
}

}  // namespace ucent
