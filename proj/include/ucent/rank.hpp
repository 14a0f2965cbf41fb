#pragma once

#include "ucent/centrality_vector.hpp"

namespace ucent {

struct RankCorrelation {
  double value = 0.0;
  bool degenerate = false;  // denominator was zero; value forced to 0
  long concordant = 0;
  long discordant = 0;
};

/// Kendall tau-b between two score vectors after flipping each so that
/// higher means more central. Exact ties only.
RankCorrelation kendall_tau(const Vector<double>& a, Orientation oa, const Vector<double>& b, Orientation ob);
/// Same, with ties taken at each vector's tie_tolerance().
RankCorrelation kendall_tau(const CentralityVector<double>& a, const CentralityVector<double>& b);

/// (C - D) / (C + D) over the pairs that `reference` separates by more than
/// `rel_gap` times its largest magnitude; pairs tied in `subject` (within its
/// tie_tolerance()) count as neither. Measures agreement on the pairs a reference actually orders.
RankCorrelation restricted_concordance(const CentralityVector<double>& subject,
                                       const CentralityVector<double>& reference, double rel_gap = 0.0);

}  // namespace ucent
