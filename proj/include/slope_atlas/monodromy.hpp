#pragma once

// Monodromies h = τ0^a0 τ1^a1 ... τk^ak of the k-holed torus: boundary
// labels, the slope intervals attached to each boundary, coherent
// orientations of the β-arcs, and the region of multislopes whose fillings
// carry a coorientable taut foliation.
//
// Boundary components and β-arcs are indexed 0..k-1 here (1..k in the usual
// notation). Indices are cyclic. Boundary i sits between arcs β_i and
// β_{i+1}; arc β_i runs between boundaries i-1 and i.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "slope_atlas/rational_slopes.hpp"

namespace slope_atlas {

class Monodromy {
 public:
  /// Throws std::invalid_argument for k = 0 or a zero exponent a_i (i >= 1).
  Monodromy(std::int64_t a0, std::vector<std::int64_t> exponents);

  /// Parses "a0; a1, a2, ..., ak".
  static Monodromy parse(std::string_view text);

  std::int64_t a0() const { return a0_; }
  const std::vector<std::int64_t>& exponents() const { return exponents_; }
  std::size_t k() const { return exponents_.size(); }
  /// Cyclic access: exponent(i + k) == exponent(i).
  std::int64_t exponent(std::size_t i) const { return exponents_[i % exponents_.size()]; }

  /// The same monodromy with (a1..ak) rotated to (a2..ak, a1).
  Monodromy rotated() const;

  std::string to_string() const;
  friend bool operator==(const Monodromy&, const Monodromy&) = default;

 private:
  std::int64_t a0_;
  std::vector<std::int64_t> exponents_;
};

enum class BoundaryLabel { Pplus, Pminus, N };

/// "p+", "p-", "n".
std::string_view to_string(BoundaryLabel label);

std::vector<BoundaryLabel> labels(const Monodromy& m);

struct BoundaryIntervals {
  Box i_arcs;
  Box j_arcs;
};

BoundaryIntervals intervals(const Monodromy& m);

/// The a0-box ((∞,1)^k for a0 > 0, (-1,∞)^k for a0 < 0, nothing for a0 = 0)
/// together with the boxes I_1 x ... x I_k and J_1 x ... x J_k.
Region foliation_region(const Monodromy& m);

/// Forward: β_i starts at boundary i-1 and ends at boundary i.
enum class ArcDirection { Forward, Backward };

/// Type of an N-labelled boundary: both incident β-arcs start there (Out)
/// or both end there (In).
enum class NType { Out, In };

std::string_view to_string(ArcDirection d);
std::string_view to_string(NType t);

struct OrientationAssignment {
  std::vector<ArcDirection> directions;      // one per β-arc
  std::vector<std::optional<NType>> n_types;  // one per boundary, set only on N labels

  OrientationAssignment reversed() const;
  friend bool operator==(const OrientationAssignment&, const OrientationAssignment&) = default;
};

/// The two coherent orientations. The first one makes the lowest-indexed
/// N boundary of type In, which is the orientation whose boundary train
/// tracks realise the I-box; the second realises the J-box. Without N labels
/// the first has β_1 Forward.
std::pair<OrientationAssignment, OrientationAssignment> coherent_orientations(const Monodromy& m);

/// Checks the coherence conditions and the recorded N types directly.
bool is_coherent(const Monodromy& m, const OrientationAssignment& o);

}  // namespace slope_atlas
