#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "slope_atlas/traintrack.hpp"

using namespace slope_atlas;

namespace {

const ExtRational inf = ExtRational::infinity();
ExtRational q(std::int64_t n, std::int64_t d) { return ExtRational::normalize(n, d); }

const TrackTemplate all_tracks[] = {
    TrackTemplate::A0Positive,  TrackTemplate::A0Negative, TrackTemplate::PplusTrack,     TrackTemplate::PminusTrack,
    TrackTemplate::NOutTrack,   TrackTemplate::NInTrack,   TrackTemplate::WLSpecialFirst, TrackTemplate::WLSpecialSecond,
};

}  // namespace

TEST_CASE("realised intervals") {
  CHECK(realized_interval(TrackTemplate::A0Positive) == CircularArc::open(inf, 1));
  CHECK(realized_interval(TrackTemplate::NInTrack) == CircularArc::open(inf, 0));
  CHECK(realized_interval(TrackTemplate::NOutTrack) == CircularArc::open(0, inf));
  CHECK(realized_interval(TrackTemplate::WLSpecialSecond) == CircularArc::open(-1, 1));
  CHECK(realized_interval(TrackTemplate::PminusTrack) == CircularArc::open(-1, inf));
}

TEST_CASE("explicit witnesses") {
  const auto w = witness(TrackTemplate::A0Positive, q(-3, 2));
  REQUIRE(w.parametric());
  CHECK(w.weights->first == Rational(1, 2));
  CHECK(w.weights->second == Rational(2));
  CHECK_THROWS_AS(witness(TrackTemplate::A0Positive, 1), std::domain_error);
  const auto n = witness(TrackTemplate::A0Negative, 0);
  CHECK(n.weights->first == Rational(1, 2));
  CHECK(n.weights->second == Rational(1, 2));
  const auto cert = witness(TrackTemplate::NInTrack, -4);
  CHECK_FALSE(cert.parametric());
  CHECK(cert.arc == CircularArc::open(inf, 0));
}

TEST_CASE("witness succeeds exactly on the realised arc") {
  std::mt19937_64 rng(51);
  for (int i = 0; i < 2000; ++i) {
    const ExtRational s = i % 50 == 0 ? inf : oracle::random_slope(rng, 12);
    for (auto t : all_tracks) {
      const bool inside = arc_contains(realized_interval(t), s);
      if (!inside) {
        CHECK_THROWS(witness(t, s));
        continue;
      }
      const auto w = witness(t, s);
      if (!w.parametric()) continue;
      const auto [x, y] = *w.weights;
      CHECK(x - y == s.to_rational());
      CHECK(x > 0);
      CHECK(y > 0);
      if (t == TrackTemplate::A0Positive) CHECK(x < 1);
      if (t == TrackTemplate::A0Negative) CHECK(y < 1);
    }
  }
}

TEST_CASE("mirror symmetry of the realised sets") {
  std::mt19937_64 rng(52);
  for (int i = 0; i < 1000; ++i) {
    const ExtRational s = i % 40 == 0 ? inf : oracle::random_slope(rng, 9);
    CHECK(realized_interval(TrackTemplate::A0Positive).contains(s) ==
          realized_interval(TrackTemplate::A0Negative).contains(s.negated()));
    CHECK(realized_interval(TrackTemplate::NOutTrack).contains(s) ==
          realized_interval(TrackTemplate::NInTrack).contains(s.negated()));
  }
}

TEST_CASE("boundary tracks realise the I and J boxes") {
  std::mt19937_64 rng(53);
  for (int i = 0; i < 300; ++i) {
    const std::size_t k = 1 + rng() % 6;
    std::vector<std::int64_t> a(k);
    for (auto& x : a) x = (rng() % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(1 + rng() % 3);
    const Monodromy m(static_cast<std::int64_t>(rng() % 5) - 2, a);
    const auto [first, second] = coherent_orientations(m);
    const auto iv = intervals(m);
    const auto t1 = boundary_tracks(m, first);
    const auto t2 = boundary_tracks(m, second);
    for (std::size_t b = 0; b < k; ++b) {
      CHECK(realized_interval(t1[b]) == iv.i_arcs[b]);
      CHECK(realized_interval(t2[b]) == iv.j_arcs[b]);
    }
    const auto a0 = a0_track(m);
    CHECK(a0.has_value() == (m.a0() != 0));
  }
}
