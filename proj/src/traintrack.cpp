#include "slope_atlas/traintrack.hpp"

#include <algorithm>
#include <stdexcept>

namespace slope_atlas {

std::string_view to_string(TrackTemplate t) {
  switch (t) {
    case TrackTemplate::A0Positive: return "a0_positive";
    case TrackTemplate::A0Negative: return "a0_negative";
    case TrackTemplate::PplusTrack: return "p_plus";
    case TrackTemplate::PminusTrack: return "p_minus";
    case TrackTemplate::NOutTrack: return "n_out";
    case TrackTemplate::NInTrack: return "n_in";
    case TrackTemplate::WLSpecialFirst: return "wl_special_first";
    case TrackTemplate::WLSpecialSecond: return "wl_special_second";
  }
  return "?";
}

CircularArc realized_interval(TrackTemplate t) {
  const auto inf = ExtRational::infinity();
  switch (t) {
    case TrackTemplate::A0Positive:
    case TrackTemplate::PplusTrack:
      return CircularArc::open(inf, ExtRational(1));
    case TrackTemplate::A0Negative:
    case TrackTemplate::PminusTrack:
      return CircularArc::open(ExtRational(-1), inf);
    case TrackTemplate::NOutTrack:
    case TrackTemplate::WLSpecialFirst:
      return CircularArc::open(ExtRational(0), inf);
    case TrackTemplate::NInTrack:
      return CircularArc::open(inf, ExtRational(0));
    case TrackTemplate::WLSpecialSecond:
      return CircularArc::open(ExtRational(-1), ExtRational(1));
  }
  throw std::logic_error("unknown track template");
}

TrackWitness witness(TrackTemplate t, const ExtRational& s) {
  const CircularArc arc = realized_interval(t);
  if (!arc.contains(s)) {
    throw std::domain_error("slope not realized: " + s.to_string() + " is outside " + arc.to_string() + " for " +
                            std::string(to_string(t)));
  }
  TrackWitness w{t, s, arc, std::nullopt};
  if (t == TrackTemplate::A0Positive) {
    // x in (0,1), y > 0
    const Rational r = s.to_rational();
    const Rational x = (std::max(Rational(0), r) + 1) / 2;
    w.weights = std::pair{x, x - r};
  } else if (t == TrackTemplate::A0Negative) {
    // x > 0, y in (0,1)
    const Rational r = s.to_rational();
    const Rational y = (std::max(Rational(0), Rational(-r)) + 1) / 2;
    w.weights = std::pair{y + r, y};
  }
  return w;
}

std::vector<TrackTemplate> boundary_tracks(const Monodromy& m, const OrientationAssignment& o) {
  if (!is_coherent(m, o)) throw std::invalid_argument("orientation is not coherent for monodromy " + m.to_string());
  const auto lab = labels(m);
  std::vector<TrackTemplate> out;
  for (std::size_t b = 0; b < lab.size(); ++b) {
    switch (lab[b]) {
      case BoundaryLabel::Pplus: out.push_back(TrackTemplate::PplusTrack); break;
      case BoundaryLabel::Pminus: out.push_back(TrackTemplate::PminusTrack); break;
      case BoundaryLabel::N:
        out.push_back(*o.n_types[b] == NType::Out ? TrackTemplate::NOutTrack : TrackTemplate::NInTrack);
        break;
    }
  }
  return out;
}

std::optional<TrackTemplate> a0_track(const Monodromy& m) {
  if (m.a0() > 0) return TrackTemplate::A0Positive;
  if (m.a0() < 0) return TrackTemplate::A0Negative;
  return std::nullopt;
}

}  // namespace slope_atlas
