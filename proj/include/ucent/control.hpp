#pragma once

#include "ucent/errors.hpp"
#include "ucent/graph.hpp"
#include "ucent/phi.hpp"
#include "ucent/spectral.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <string>
#include <vector>

namespace ucent {

/// Minimum-energy steering of x' = -Lx + Bu from the origin into the
/// half-space 1'x >= threshold by time horizon.
template <typename Scalar = double>
struct ControlSetup {
  std::vector<Index> controlled;  // columns of B are e_k for k in this set
  Scalar horizon;
  Scalar threshold;

  static ControlSetup single(Index node, Scalar horizon, Scalar threshold) {
    return {{node}, horizon, threshold};
  }
  static ControlSetup all(Index n, Scalar horizon, Scalar threshold) {
    ControlSetup s{{}, horizon, threshold};
    for (Index i = 0; i < n; ++i) s.controlled.push_back(i);
    return s;
  }

  void validate(Index n) const {
    using std::isfinite;
    if (controlled.empty()) throw InvalidArgument("control set is empty");
    for (Index k : controlled) {
      if (k < 0 || k >= n) throw InvalidArgument("controlled node out of range");
    }
    if (!(horizon > Scalar(0)) || !isfinite(horizon)) throw InvalidArgument("horizon must be positive and finite");
    if (!(threshold > Scalar(0)) || !isfinite(threshold)) {
      throw InvalidArgument("threshold must be positive and finite");
    }
  }

  Matrix<Scalar> input_matrix(Index n) const {
    Matrix<Scalar> b = Matrix<Scalar>::Zero(n, static_cast<Index>(controlled.size()));
    for (std::size_t k = 0; k < controlled.size(); ++k) b(controlled[k], static_cast<Index>(k)) = Scalar(1);
    return b;
  }
};

template <typename Scalar = double>
struct ControlSolution {
  Matrix<Scalar> gramian;
  Scalar energy;
  Vector<Scalar> terminal_state;
  Vector<Scalar> terminal_multiplier;  // eta_f
  Scalar constraint_multiplier;        // mu
  Scalar input_level;                  // constant u* on every controlled node
};

/// Reachability Gramian in closed form from the spectrum:
/// W = sum_{a,b} g_ab (u_a' B B' u_b) u_a u_b', g_ab = horizon * phi((l_a + l_b) horizon).
template <typename Scalar>
Matrix<Scalar> gramian_spectral(const SpectralDecomposition<Scalar>& dec, const ControlSetup<Scalar>& setup) {
  const Index n = dec.size();
  setup.validate(n);
  const Scalar tf = setup.horizon;

  Matrix<Scalar> projected(n, static_cast<Index>(setup.controlled.size()));
  for (std::size_t k = 0; k < setup.controlled.size(); ++k) {
    projected.col(static_cast<Index>(k)) = dec.vectors.row(setup.controlled[k]).transpose();
  }
  Matrix<Scalar> core = projected * projected.transpose();
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) core(a, b) *= tf * phi((dec.values(a) + dec.values(b)) * tf);
  Matrix<Scalar> w = dec.vectors * core * dec.vectors.transpose();
  return (w + w.transpose()) / Scalar(2);
}

/// Reachability Gramian by composite Simpson quadrature of
/// e^{-L t} B B' e^{-L t} over [0, horizon]. The matrix exponential is
/// evaluated through Eigen's self-adjoint solver, independently of
/// decompose_laplacian.
template <typename Derived>
Matrix<typename Derived::Scalar> gramian_quadrature(const Eigen::MatrixBase<Derived>& lap,
                                                    const ControlSetup<typename Derived::Scalar>& setup,
                                                    int panels = 256) {
  using Scalar = typename Derived::Scalar;
  using std::exp;
  const Index n = lap.rows();
  setup.validate(n);
  if (panels < 2 || panels % 2 != 0) throw InvalidArgument("panels must be even and at least 2");

  const Matrix<Scalar> sym = (lap + lap.transpose()) / Scalar(2);
  Eigen::SelfAdjointEigenSolver<Matrix<Scalar>> eig(sym);
  const Matrix<Scalar>& v = eig.eigenvectors();
  const Vector<Scalar>& lambda = eig.eigenvalues();
  const Matrix<Scalar> vtb = v.transpose() * setup.input_matrix(n);

  const Scalar h = setup.horizon / Scalar(panels);
  Matrix<Scalar> acc = Matrix<Scalar>::Zero(n, n);
  for (int step = 0; step <= panels; ++step) {
    const Scalar t = h * Scalar(step);
    const Vector<Scalar> decay = (-lambda * t).array().exp().matrix();
    const Matrix<Scalar> flow = v * (decay.asDiagonal() * vtb);  // e^{-Lt} B
    const Scalar weight = (step == 0 || step == panels) ? Scalar(1) : (step % 2 ? Scalar(4) : Scalar(2));
    acc.noalias() += weight * flow * flow.transpose();
  }
  acc *= h / Scalar(3);
  return (acc + acc.transpose()) / Scalar(2);
}

/// KKT solution of min eta'W eta subject to 1'W eta >= threshold.
template <typename Derived>
ControlSolution<typename Derived::Scalar> solve_min_energy(const Eigen::MatrixBase<Derived>& gramian,
                                                           typename Derived::Scalar threshold) {
  using Scalar = typename Derived::Scalar;
  const Index n = gramian.rows();
  const Vector<Scalar> ones = Vector<Scalar>::Ones(n);
  const Vector<Scalar> w_ones = gramian * ones;
  const Scalar total = ones.dot(w_ones);
  if (!(total > Scalar(0))) throw DegenerateGramian();

  ControlSolution<Scalar> sol;
  sol.gramian = gramian;
  sol.input_level = threshold / total;
  sol.terminal_multiplier = Vector<Scalar>::Constant(n, sol.input_level);
  sol.constraint_multiplier = Scalar(2) * threshold / total;
  sol.terminal_state = sol.input_level * w_ones;
  sol.energy = threshold * threshold / total;
  return sol;
}

/// u*(t) = B' e^{-L'(tf - t)} eta_f is constant because e^{-L t} 1 = 1; one
/// level per controlled node.
template <typename Derived>
Vector<typename Derived::Scalar> constant_optimal_input(const ControlSetup<typename Derived::Scalar>& setup,
                                                        const Eigen::MatrixBase<Derived>& gramian) {
  using Scalar = typename Derived::Scalar;
  const Index n = gramian.rows();
  setup.validate(n);
  const Scalar total = gramian.sum();
  if (!(total > Scalar(0))) throw DegenerateGramian();
  return Vector<Scalar>::Constant(static_cast<Index>(setup.controlled.size()), setup.threshold / total);
}

template <typename Scalar = double>
struct Trajectory {
  Vector<Scalar> times;
  Matrix<Scalar> states;  // column m is x(times(m))

  Vector<Scalar> terminal() const { return states.col(states.cols() - 1); }
};

/// Classical RK4 on x' = -Lx + B u with constant per-node input levels and a
/// uniform step horizon / steps.
template <typename Derived>
Trajectory<typename Derived::Scalar> simulate(const Eigen::MatrixBase<Derived>& lap,
                                              const ControlSetup<typename Derived::Scalar>& setup,
                                              const Vector<typename Derived::Scalar>& input_levels, int steps,
                                              const Vector<typename Derived::Scalar>& initial_state = {}) {
  using Scalar = typename Derived::Scalar;
  const Index n = lap.rows();
  setup.validate(n);
  if (steps < 1) throw InvalidArgument("steps must be at least 1");
  if (input_levels.size() != static_cast<Index>(setup.controlled.size())) {
    throw InvalidArgument("one input level per controlled node expected");
  }
  if (initial_state.size() != 0 && initial_state.size() != n) throw InvalidArgument("initial state has wrong size");

  const Matrix<Scalar> l = lap;
  const Vector<Scalar> forcing = setup.input_matrix(n) * input_levels;
  auto rhs = [&](const Vector<Scalar>& x) -> Vector<Scalar> { return forcing - l * x; };

  const Scalar h = setup.horizon / Scalar(steps);
  Trajectory<Scalar> traj;
  traj.times.resize(steps + 1);
  traj.states.resize(n, steps + 1);
  Vector<Scalar> x = initial_state.size() ? initial_state : Vector<Scalar>::Zero(n);
  traj.times(0) = Scalar(0);
  traj.states.col(0) = x;
  for (int m = 1; m <= steps; ++m) {
    const Vector<Scalar> k1 = rhs(x);
    const Vector<Scalar> k2 = rhs(x + h / Scalar(2) * k1);
    const Vector<Scalar> k3 = rhs(x + h / Scalar(2) * k2);
    const Vector<Scalar> k4 = rhs(x + h * k3);
    x += h / Scalar(6) * (k1 + Scalar(2) * k2 + Scalar(2) * k3 + k4);
    traj.times(m) = h * Scalar(m);
    traj.states.col(m) = x;
  }
  return traj;
}

}  // namespace ucent
