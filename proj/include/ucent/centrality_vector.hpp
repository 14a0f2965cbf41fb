#pragma once

#include "ucent/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

namespace ucent {

enum class Orientation { LowerIsCentral, HigherIsCentral };

inline const char* to_string(Orientation o) { return o == Orientation::LowerIsCentral ? "lower" : "higher"; }

/// Per-node scores of one centrality measure.
///
/// Scores that differ by at most `tie_tolerance()` count as tied, so that
/// nodes related by a graph automorphism tie despite roundoff.
template <typename Scalar = double>
struct CentralityVector {
  std::string measure;
  Vector<Scalar> scores;
  Orientation orientation = Orientation::LowerIsCentral;

  Index size() const noexcept { return scores.size(); }

  Scalar tie_tolerance() const {
    if (scores.size() == 0) return Scalar(0);
    return Scalar(1e-12) * scores.cwiseAbs().maxCoeff();
  }

  /// Score transformed so that larger always means more central.
  Scalar centrality(Index i) const {
    return orientation == Orientation::LowerIsCentral ? -scores(i) : scores(i);
  }

  bool more_central(Index i, Index j) const { return centrality(i) > centrality(j) + tie_tolerance(); }

  /// Every index attaining the extremum, ascending.
  std::vector<Index> central_set() const {
    std::vector<Index> out;
    if (size() == 0) return out;
    Index best = 0;
    for (Index i = 1; i < size(); ++i)
      if (centrality(i) > centrality(best)) best = i;
    for (Index i = 0; i < size(); ++i)
      if (!more_central(best, i)) out.push_back(i);
    return out;
  }

  /// Node indices, most central first; ties keep index order.
  std::vector<Index> ranking() const {
    const auto r = ranks();
    std::vector<Index> order(static_cast<std::size_t>(size()));
    std::iota(order.begin(), order.end(), Index(0));
    std::stable_sort(order.begin(), order.end(),
                     [&](Index a, Index b) { return r[static_cast<std::size_t>(a)] < r[static_cast<std::size_t>(b)]; });
    return order;
  }

  /// Competition rank per node: 1 + number of strictly more central nodes.
  std::vector<Index> ranks() const {
    std::vector<Index> out(static_cast<std::size_t>(size()), 1);
    for (Index i = 0; i < size(); ++i)
      for (Index j = 0; j < size(); ++j)
        if (more_central(j, i)) ++out[static_cast<std::size_t>(i)];
    return out;
  }
};

}  // namespace ucent
