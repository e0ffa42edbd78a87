#pragma once

// L-space slope machinery for rational homology solid tori obtained by
// filling one component of a two-component link with unknotted components
// and linking number zero.

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <variant>
#include <vector>

#include "slope_atlas/rational_slopes.hpp"

namespace slope_atlas {

/// Support data of the normalised Turaev torsion of Y with H_1(Y) = Z + Z/p.
///
/// Classes are pairs (n, t) with n the free coordinate and t in [0, p).
/// Every class with n > threshold lies in the support, every class with n < 0
/// lies outside it, and for 0 <= n <= threshold the table decides.
class TorsionProfile {
 public:
  /// `support[n][t]` for 0 <= n <= threshold, 0 <= t < torsion_order.
  TorsionProfile(std::int64_t torsion_order, std::int64_t threshold, std::vector<std::vector<bool>> support);

  /// Profile of Δ(t)/(1 - t) for a knot-like exterior (p = 1). Coefficients
  /// are listed constant term first; Δ(0) != 0 and Δ(1) = 1 are required.
  static TorsionProfile from_alexander(std::span<const std::int64_t> coefficients);

  /// Header line "p c", then one "n t" line per in-support class with n <= c.
  /// Blank lines and lines starting with '#' are skipped.
  static TorsionProfile read(std::istream& in);
  void write(std::ostream& out) const;

  std::int64_t torsion_order() const { return torsion_order_; }
  std::int64_t threshold() const { return threshold_; }
  bool in_support(std::int64_t n, std::int64_t t) const;

 private:
  std::int64_t torsion_order_;
  std::int64_t threshold_;
  std::vector<std::vector<bool>> support_;
};

/// First coordinates n_1 < ... < n_h of the classes in D^τ_{>0}; all lie in (0, c].
struct DPositiveSet {
  std::vector<std::int64_t> firsts;

  bool empty() const { return firsts.empty(); }
  std::int64_t max() const { return firsts.back(); }
  friend bool operator==(const DPositiveSet&, const DPositiveSet&) = default;
};

DPositiveSet compute_d_positive(const TorsionProfile& profile);

/// L-space filling slopes Q̄ \ {0} (everything but the homological longitude).
struct AllButLongitude {
  bool contains(const ExtRational& x) const { return !x.is_zero(); }
  friend bool operator==(const AllButLongitude&, const AllButLongitude&) = default;
};

/// Possible shapes of L(Y) for a Floer simple filling: either all slopes but
/// the longitude, or one of [n_h, ∞] and [∞, -n_h].
class LSpaceIntervalCandidates {
 public:
  static LSpaceIntervalCandidates all_but_longitude() { return LSpaceIntervalCandidates(std::nullopt); }
  static LSpaceIntervalCandidates one_sided(std::int64_t n_h);

  bool is_all_but_longitude() const { return !n_h_; }
  /// Throws std::logic_error for the all-but-longitude form.
  std::int64_t n_h() const;
  CircularArc right() const;  // [n_h, ∞]
  CircularArc left() const;   // [∞, -n_h]

  friend bool operator==(const LSpaceIntervalCandidates&, const LSpaceIntervalCandidates&) = default;

 private:
  explicit LSpaceIntervalCandidates(std::optional<std::int64_t> n_h) : n_h_(n_h) {}
  std::optional<std::int64_t> n_h_;
};

LSpaceIntervalCandidates interval_candidates(const DPositiveSet& d);

using LSpaceInterval = std::variant<AllButLongitude, CircularArc>;

/// Input data contradicting the interval structure (e.g. a "known" L-space
/// slope that lies in neither candidate).
class LSpaceInconsistency : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Picks the candidate containing a slope known to be an L-space filling.
/// ∞ lies in both one-sided candidates and cannot decide the side; it is
/// rejected like a slope lying in neither.
LSpaceInterval select_interval(const LSpaceIntervalCandidates& candidates, const ExtRational& known);

bool interval_contains(const LSpaceInterval& interval, const ExtRational& x);

/// Fillings guaranteed to be L-spaces once S^3_r is: factor [⌊r_i⌋, ∞] when
/// r_i >= 1 and (0, ∞] when 0 < r_i < 1. Every r_i must be finite and positive.
Region propagate_region(const Multislope& r);

/// ([2b1+1, ∞] x [2b2+1, ∞]) ∪ ({∞} x Q*) ∪ (Q* x {∞}).
Region two_component_region(std::int64_t b1, std::int64_t b2);

}  // namespace slope_atlas
