#pragma once

// Boundary train tracks: the slopes each template realises, with explicit
// positive weights (x, y) of slope x - y for the two a0 tracks.

#include <optional>
#include <string_view>
#include <vector>

#include "slope_atlas/monodromy.hpp"

namespace slope_atlas {

enum class TrackTemplate {
  A0Positive,
  A0Negative,
  PplusTrack,
  PminusTrack,
  NOutTrack,
  NInTrack,
  WLSpecialFirst,
  WLSpecialSecond,
};

std::string_view to_string(TrackTemplate t);

CircularArc realized_interval(TrackTemplate t);

struct TrackWitness {
  TrackTemplate track;
  ExtRational slope;
  CircularArc arc;
  /// Set for A0Positive/A0Negative: x - y = slope. Other templates yield a
  /// membership certificate only.
  std::optional<std::pair<Rational, Rational>> weights;

  bool parametric() const { return weights.has_value(); }
};

/// Throws std::domain_error("slope not realized ...") outside the realised arc.
TrackWitness witness(TrackTemplate t, const ExtRational& s);

/// Template used at each boundary component for the given orientation.
std::vector<TrackTemplate> boundary_tracks(const Monodromy& m, const OrientationAssignment& o);

/// Template of the a0 construction; nullopt for a0 = 0.
std::optional<TrackTemplate> a0_track(const Monodromy& m);

}  // namespace slope_atlas
