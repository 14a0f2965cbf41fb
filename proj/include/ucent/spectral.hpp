#pragma once

#include "ucent/errors.hpp"
#include "ucent/graph.hpp"

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

namespace ucent {

/// Eigenpairs of a symmetric matrix in ascending eigenvalue order; the
/// eigenvectors are the orthonormal columns of `vectors`.
template <typename Scalar>
struct SymmetricEigen {
  Vector<Scalar> values;
  Matrix<Scalar> vectors;
};

namespace detail {

// Householder reduction of the symmetric matrix held in `v` to tridiagonal
// form. On return `d` holds the diagonal, `e` the subdiagonal in e(1..n-1),
// and `v` the accumulated orthogonal transform.
template <typename Scalar>
void householder_tridiagonalize(Matrix<Scalar>& v, Vector<Scalar>& d, Vector<Scalar>& e) {
  using std::abs;
  using std::sqrt;
  const Index n = v.rows();
  d = v.row(n - 1).transpose();
  e = Vector<Scalar>::Zero(n);

  for (Index i = n - 1; i > 0; --i) {
    Scalar scale(0);
    Scalar h(0);
    for (Index k = 0; k < i; ++k) scale += abs(d(k));
    if (scale == Scalar(0)) {
      e(i) = d(i - 1);
      for (Index j = 0; j < i; ++j) {
        d(j) = v(i - 1, j);
        v(i, j) = Scalar(0);
        v(j, i) = Scalar(0);
      }
    } else {
      for (Index k = 0; k < i; ++k) {
        d(k) /= scale;
        h += d(k) * d(k);
      }
      Scalar f = d(i - 1);
      Scalar g = sqrt(h);
      if (f > Scalar(0)) g = -g;
      e(i) = scale * g;
      h -= f * g;
      d(i - 1) = f - g;
      for (Index j = 0; j < i; ++j) e(j) = Scalar(0);

      for (Index j = 0; j < i; ++j) {
        f = d(j);
        v(j, i) = f;
        g = e(j) + v(j, j) * f;
        for (Index k = j + 1; k <= i - 1; ++k) {
          g += v(k, j) * d(k);
          e(k) += v(k, j) * f;
        }
        e(j) = g;
      }
      f = Scalar(0);
      for (Index j = 0; j < i; ++j) {
        e(j) /= h;
        f += e(j) * d(j);
      }
      const Scalar hh = f / (h + h);
      for (Index j = 0; j < i; ++j) e(j) -= hh * d(j);
      for (Index j = 0; j < i; ++j) {
        f = d(j);
        g = e(j);
        for (Index k = j; k <= i - 1; ++k) v(k, j) -= (f * e(k) + g * d(k));
        d(j) = v(i - 1, j);
        v(i, j) = Scalar(0);
      }
    }
    d(i) = h;
  }

  for (Index i = 0; i < n - 1; ++i) {
    v(n - 1, i) = v(i, i);
    v(i, i) = Scalar(1);
    const Scalar h = d(i + 1);
    if (h != Scalar(0)) {
      for (Index k = 0; k <= i; ++k) d(k) = v(k, i + 1) / h;
      for (Index j = 0; j <= i; ++j) {
        Scalar g(0);
        for (Index k = 0; k <= i; ++k) g += v(k, i + 1) * v(k, j);
        for (Index k = 0; k <= i; ++k) v(k, j) -= g * d(k);
      }
    }
    for (Index k = 0; k <= i; ++k) v(k, i + 1) = Scalar(0);
  }
  for (Index j = 0; j < n; ++j) {
    d(j) = v(n - 1, j);
    v(n - 1, j) = Scalar(0);
  }
  v(n - 1, n - 1) = Scalar(1);
  e(0) = Scalar(0);
}

// Implicit-shift QL on the tridiagonal (d, e), rotating the columns of `v`.
template <typename Scalar>
void tridiagonal_ql(Vector<Scalar>& d, Vector<Scalar>& e, Matrix<Scalar>& v) {
  using std::abs;
  using std::hypot;
  const Index n = d.size();
  for (Index i = 1; i < n; ++i) e(i - 1) = e(i);
  e(n - 1) = Scalar(0);

  const Scalar eps = std::numeric_limits<Scalar>::epsilon();
  const int max_sweeps = 60;
  Scalar f(0);
  Scalar tst1(0);
  for (Index l = 0; l < n; ++l) {
    tst1 = std::max(tst1, abs(d(l)) + abs(e(l)));
    Index m = l;
    while (m < n - 1 && abs(e(m)) > eps * tst1) ++m;

    if (m > l) {
      int sweeps = 0;
      do {
        if (++sweeps > max_sweeps) throw NoConvergence("tridiagonal QL did not converge");
        Scalar g = d(l);
        Scalar p = (d(l + 1) - g) / (Scalar(2) * e(l));
        Scalar r = hypot(p, Scalar(1));
        if (p < Scalar(0)) r = -r;
        d(l) = e(l) / (p + r);
        d(l + 1) = e(l) * (p + r);
        const Scalar dl1 = d(l + 1);
        Scalar h = g - d(l);
        for (Index i = l + 2; i < n; ++i) d(i) -= h;
        f += h;

        p = d(m);
        Scalar c(1), c2(1), c3(1);
        const Scalar el1 = e(l + 1);
        Scalar s(0), s2(0);
        for (Index i = m - 1; i >= l; --i) {
          c3 = c2;
          c2 = c;
          s2 = s;
          g = c * e(i);
          h = c * p;
          r = hypot(p, e(i));
          e(i + 1) = s * r;
          s = e(i) / r;
          c = p / r;
          p = c * d(i) - s * g;
          d(i + 1) = h + s * (c * g + s * d(i));
          for (Index k = 0; k < n; ++k) {
            h = v(k, i + 1);
            v(k, i + 1) = s * v(k, i) + c * h;
            v(k, i) = c * v(k, i) - s * h;
          }
        }
        p = -s * s2 * c3 * el1 * e(l) / dl1;
        e(l) = s * p;
        d(l) = c * p;
      } while (abs(e(l)) > eps * tst1);
    }
    d(l) += f;
    e(l) = Scalar(0);
  }
}

}  // namespace detail

/// Dense symmetric eigensolver: Householder tridiagonalization followed by
/// implicit-shift QL. Only the lower triangle of `a` need be meaningful if
/// the matrix is exactly symmetric; it is symmetrized first.
template <typename Derived>
SymmetricEigen<typename Derived::Scalar> symmetric_eigen(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  const Index n = a.rows();
  if (a.cols() != n) throw InvalidArgument("symmetric_eigen: matrix is not square");
  SymmetricEigen<Scalar> out;
  if (n == 0) return out;

  Matrix<Scalar> v = (a + a.transpose()) / Scalar(2);
  Vector<Scalar> d, e;
  if (n == 1) {
    out.values = v.diagonal();
    out.vectors = Matrix<Scalar>::Identity(1, 1);
    return out;
  }
  detail::householder_tridiagonalize(v, d, e);
  detail::tridiagonal_ql(d, e, v);

  std::vector<Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Index(0));
  std::stable_sort(order.begin(), order.end(), [&](Index x, Index y) { return d(x) < d(y); });
  out.values.resize(n);
  out.vectors.resize(n, n);
  for (Index k = 0; k < n; ++k) {
    out.values(k) = d(order[static_cast<std::size_t>(k)]);
    out.vectors.col(k) = v.col(order[static_cast<std::size_t>(k)]);
  }
  return out;
}

/// Laplacian spectrum with the kernel pinned: values(0) == 0 and
/// vectors.col(0) == 1/sqrt(n) exactly.
template <typename Scalar>
struct SpectralDecomposition {
  Vector<Scalar> values;
  Matrix<Scalar> vectors;

  Index size() const noexcept { return values.size(); }
  Scalar algebraic_connectivity() const { return values(1); }

  /// sum_k f(lambda_k) u_k u_k'
  template <typename Fn>
  Matrix<Scalar> spectral_function(Fn&& f) const {
    Vector<Scalar> w(size());
    for (Index k = 0; k < size(); ++k) w(k) = f(values(k));
    return vectors * w.asDiagonal() * vectors.transpose();
  }
};

namespace detail {

// Largest-magnitude entry positive; entries within a relative 1e-10 of the
// maximum count as tied and the lowest index wins.
template <typename Scalar>
void fix_sign(Eigen::Ref<Vector<Scalar>> u) {
  using std::abs;
  const Scalar peak = u.cwiseAbs().maxCoeff();
  for (Index i = 0; i < u.size(); ++i) {
    if (abs(u(i)) >= peak * (Scalar(1) - Scalar(1e-10))) {
      if (u(i) < Scalar(0)) u = -u;
      return;
    }
  }
}

}  // namespace detail

/// Eigendecomposition of a connected graph's Laplacian.
///
/// The zero eigenpair is set analytically and the remaining eigenvectors are
/// projected off the constant vector and renormalized. Throws
/// DisconnectedGraph if the second-smallest eigenvalue is below 1e-9 * lambda_max.
template <typename Derived>
SpectralDecomposition<typename Derived::Scalar> decompose_laplacian(const Eigen::MatrixBase<Derived>& lap) {
  using Scalar = typename Derived::Scalar;
  using std::sqrt;
  const Index n = lap.rows();
  if (n < 2) throw DisconnectedGraph("graph needs at least two nodes");

  auto eig = symmetric_eigen(lap);
  SpectralDecomposition<Scalar> dec;
  dec.values = std::move(eig.values);
  dec.vectors = std::move(eig.vectors);

  const Scalar lambda_max = dec.values(n - 1);
  if (!(dec.values(1) > Scalar(1e-9) * lambda_max)) {
    throw DisconnectedGraph("second Laplacian eigenvalue is numerically zero");
  }

  const Vector<Scalar> ones_unit = Vector<Scalar>::Constant(n, Scalar(1) / sqrt(Scalar(n)));
  dec.values(0) = Scalar(0);
  dec.vectors.col(0) = ones_unit;
  for (Index k = 1; k < n; ++k) {
    auto u = dec.vectors.col(k);
    u -= ones_unit.dot(u) * ones_unit;
    u.normalize();
    detail::fix_sign<Scalar>(u);
  }
  return dec;
}

template <typename Scalar = double>
SpectralDecomposition<Scalar> decompose(const Graph& g) {
  require_connected(g);
  return decompose_laplacian(laplacian<Scalar>(g));
}

/// Moore-Penrose pseudoinverse sum_{k>=2} u_k u_k' / lambda_k.
template <typename Scalar>
Matrix<Scalar> pseudoinverse(const SpectralDecomposition<Scalar>& dec) {
  const Index n = dec.size();
  const auto tail = dec.vectors.rightCols(n - 1);
  const Vector<Scalar> inv = dec.values.tail(n - 1).cwiseInverse();
  Matrix<Scalar> p = tail * inv.asDiagonal() * tail.transpose();
  return (p + p.transpose()) / Scalar(2);
}

/// L+ of a graph computed in long double and rounded to double. Small
/// eigenvalues of sparse graphs amplify roundoff in 1/lambda_k; the wider
/// mantissa keeps resistance sums over large trees within 1e-12.
inline Matrix<double> laplacian_pseudoinverse(const Graph& g) {
  return pseudoinverse(decompose<long double>(g)).cast<double>();
}

/// Frobenius residuals of the four Moore-Penrose conditions for `pinv` as the
/// pseudoinverse of `a`.
template <typename Scalar>
struct MoorePenroseResiduals {
  Scalar apa;          // ||A P A - A||
  Scalar pap;          // ||P A P - P||
  Scalar ap_symmetry;  // ||(AP)' - AP||
  Scalar pa_symmetry;  // ||(PA)' - PA||

  Scalar max() const { return std::max({apa, pap, ap_symmetry, pa_symmetry}); }
};

template <typename DerivedA, typename DerivedP>
MoorePenroseResiduals<typename DerivedA::Scalar> moore_penrose_residuals(const Eigen::MatrixBase<DerivedA>& a,
                                                                         const Eigen::MatrixBase<DerivedP>& pinv) {
  using Scalar = typename DerivedA::Scalar;
  const Matrix<Scalar> ap = a * pinv;
  const Matrix<Scalar> pa = pinv * a;
  return {(ap * a - a).norm(), (pa * pinv - pinv).norm(), (ap.transpose() - ap).norm(),
          (pa.transpose() - pa).norm()};
}

}  // namespace ucent
