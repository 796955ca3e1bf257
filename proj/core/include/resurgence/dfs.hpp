#pragma once

#include <map>
#include <utility>
#include <vector>

#include "resurgence/types.hpp"

namespace resurgence {

/// One vertical ray of the singular support: the point `omega` is
/// singular for every filtration length >= `onset`.
struct Ray {
  cplx omega;
  double onset;
};

/// One step of the filtration: the set of singular points active on
/// [threshold, next threshold). Point lists are cumulative.
struct DfsStep {
  double threshold;
  std::vector<cplx> points;
};

/// A discrete filtered set, represented on [0, budget] in canonical
/// upper-closed form. Internally a map omega -> onset(omega): the point
/// omega belongs to the filtration value at L iff onset(omega) <= L.
/// Point coordinates are rounded to 12 decimal digits when inserted, so
/// that sums of equal points merge; all operations are pure and values
/// are immutable after construction.
class Dfs {
 public:
  /// The trivial d.f.s. (all filtration values empty).
  explicit Dfs(double budget);

  /// Validated, canonicalized d.f.s. from a raw step family. Nesting is
  /// enforced by cumulative union (a point's onset is the smallest
  /// threshold at which it is listed); redundant steps merge. Rejects a
  /// nonempty point set at threshold 0, thresholds outside [0, budget],
  /// and non-finite data.
  static Dfs from_steps(const std::vector<DfsStep>& steps, double budget);

  /// The d.f.s. of a closed discrete set: onset(omega) = |omega|.
  /// Rejects omega = 0; points with |omega| > budget are dropped.
  static Dfs from_closed_discrete(const std::vector<cplx>& points, double budget);

  /// The d.f.s. with value union(F_0..F_n) on [n*delta, (n+1)*delta),
  /// truncated at budget. Requires delta > 0 and F_0 empty.
  static Dfs from_endless_data(double delta, const std::vector<std::vector<cplx>>& fs,
                               double budget);

  double budget() const { return budget_; }
  bool trivial() const { return onset_.empty(); }
  std::size_t point_count() const { return onset_.size(); }

  /// Smallest onset, i.e. the first positive threshold; +infinity for
  /// the trivial d.f.s. The filtration value at L is empty iff L < this.
  double min_onset() const;

  /// Upper-closed filtration value at L: all points with onset <= L.
  /// Rejects L outside [0, budget].
  std::vector<cplx> upper_value(double L) const;

  /// Onset of a specific point; +infinity if absent.
  double onset_of(cplx omega) const;

  /// The singular support as a list of rays, ordered by (re, im).
  std::vector<Ray> rays() const;

  /// Derived step view: thresholds strictly increasing, point lists
  /// cumulative. Always starts with the (0, empty) step.
  std::vector<DfsStep> steps() const;

  /// Pointwise partial order: every point of *this appears in `other`
  /// with onset <= the onset here (so other's filtration contains ours).
  bool subset_of(const Dfs& other) const;

  friend bool operator==(const Dfs& a, const Dfs& b) {
    return a.budget_ == b.budget_ && a.onset_ == b.onset_;
  }

  friend Dfs sum(const Dfs& a, const Dfs& b);

 private:
  using Key = std::pair<double, double>;
  static Key key_of(cplx z);

  void insert(cplx z, double onset);

  double budget_;
  std::map<Key, double> onset_;
};

/// Filtered Minkowski sum: a point w1+w2 appears as soon as the two
/// length budgets can be split, and each operand's own points keep their
/// onsets. Result budget = min of the two. Commutative and associative.
Dfs sum(const Dfs& a, const Dfs& b);

/// n-fold sum a * ... * a, n >= 1.
Dfs star_power(const Dfs& a, int n);

/// Stabilized infinite star: iterates the sum until the step family on
/// [0, budget] stops changing. Terminates because every extra summand
/// raises the minimal onset of new points by at least min_onset(a).
Dfs star_infinity(const Dfs& a);

/// Euclidean distance in R x C from `p` (lambda >= 0) to
/// {(0,0)} union closure(S_Omega). Zero exactly on that set;
/// 1-Lipschitz.
double eta(const Dfs& omega, const LiftedPoint& p);

/// Same over a precomputed ray list (no allocation; for inner loops).
double eta(const std::vector<Ray>& rays, const LiftedPoint& p);

/// Distance from `p` to the single vertical ray of `ray`.
double ray_distance(const Ray& ray, const LiftedPoint& p);

}  // namespace resurgence
