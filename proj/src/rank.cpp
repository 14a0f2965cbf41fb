#include "ucent/rank.hpp"

#include "ucent/errors.hpp"

#include <cmath>

namespace ucent {

namespace {

double oriented(const Vector<double>& v, Orientation o, Index i) {
  return o == Orientation::LowerIsCentral ? -v(i) : v(i);
}

int sign(double x, double tol = 0.0) { return (x > tol) - (x < -tol); }

RankCorrelation tau_b(const Vector<double>& a, Orientation oa, double tol_a, const Vector<double>& b,
                      Orientation ob, double tol_b) {
  const Index n = a.size();
  if (b.size() != n) throw InvalidArgument("kendall_tau: length mismatch");
  if (n < 2) throw InvalidArgument("kendall_tau: need at least two entries");

  RankCorrelation out;
  long tied_a = 0;
  long tied_b = 0;
  long pairs = 0;
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      ++pairs;
      const int sa = sign(oriented(a, oa, i) - oriented(a, oa, j), tol_a);
      const int sb = sign(oriented(b, ob, i) - oriented(b, ob, j), tol_b);
      if (sa == 0) ++tied_a;
      if (sb == 0) ++tied_b;
      if (sa == 0 || sb == 0) continue;
      if (sa == sb)
        ++out.concordant;
      else
        ++out.discordant;
    }
  }
  const double denom = std::sqrt(double(pairs - tied_a) * double(pairs - tied_b));
  if (denom == 0.0) {
    out.degenerate = true;
    return out;
  }
  out.value = double(out.concordant - out.discordant) / denom;
  return out;
}

}  // namespace

RankCorrelation kendall_tau(const Vector<double>& a, Orientation oa, const Vector<double>& b, Orientation ob) {
  return tau_b(a, oa, 0.0, b, ob, 0.0);
}

RankCorrelation kendall_tau(const CentralityVector<double>& a, const CentralityVector<double>& b) {
  if (a.size() != b.size()) throw InvalidArgument("kendall_tau: length mismatch");
  return tau_b(a.scores, a.orientation, a.tie_tolerance(), b.scores, b.orientation, b.tie_tolerance());
}

RankCorrelation restricted_concordance(const CentralityVector<double>& subject,
                                       const CentralityVector<double>& reference, double rel_gap) {
  const Index n = subject.size();
  if (reference.size() != n) throw InvalidArgument("restricted_concordance: length mismatch");
  if (n < 2) throw InvalidArgument("restricted_concordance: need at least two entries");
  const double gap = rel_gap * reference.scores.cwiseAbs().maxCoeff();

  RankCorrelation out;
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      const double rb = reference.centrality(i) - reference.centrality(j);
      if (std::abs(rb) <= gap) continue;
      const int sa = sign(subject.centrality(i) - subject.centrality(j), subject.tie_tolerance());
      if (sa == 0) continue;
      if (sa == sign(rb))
        ++out.concordant;
      else
        ++out.discordant;
    }
  }
  const long total = out.concordant + out.discordant;
  if (total == 0) {
    out.degenerate = true;
    return out;
  }
  out.value = double(out.concordant - out.discordant) / double(total);
  return out;
}

}  // namespace ucent
