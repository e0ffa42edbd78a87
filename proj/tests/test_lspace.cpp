#include <random>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "slope_atlas/lspace.hpp"

using namespace slope_atlas;

namespace {

const ExtRational inf = ExtRational::infinity();

ExtRational q(std::int64_t n, std::int64_t d) { return ExtRational::normalize(n, d); }

TorsionProfile random_profile(std::mt19937_64& rng, std::vector<std::vector<bool>>& table) {
  std::uniform_int_distribution<std::int64_t> pd(1, 4);
  std::uniform_int_distribution<std::int64_t> cd(0, 6);
  std::bernoulli_distribution coin(0.5);
  const std::int64_t p = pd(rng);
  const std::int64_t c = cd(rng);
  table.assign(static_cast<std::size_t>(c + 1), std::vector<bool>(static_cast<std::size_t>(p)));
  for (auto& row : table) {
    for (std::size_t t = 0; t < row.size(); ++t) row[t] = coin(rng);
  }
  std::uniform_int_distribution<std::int64_t> td(0, p - 1);
  table[0][static_cast<std::size_t>(td(rng))] = true;
  return TorsionProfile(p, c, table);
}

}  // namespace

TEST_CASE("trefoil profile from its Alexander polynomial") {
  const std::vector<std::int64_t> delta{1, -1, 1};
  const auto prof = TorsionProfile::from_alexander(delta);
  CHECK(prof.torsion_order() == 1);
  CHECK(prof.threshold() == 1);
  CHECK(prof.in_support(0, 0));
  CHECK_FALSE(prof.in_support(1, 0));
  CHECK(prof.in_support(2, 0));
  CHECK_FALSE(prof.in_support(-1, 0));
  const auto d = compute_d_positive(prof);
  CHECK(d.firsts == std::vector<std::int64_t>{1});
  const auto cand = interval_candidates(d);
  CHECK(cand.n_h() == 1);
  const auto chosen = select_interval(cand, 5);
  CHECK(std::get<CircularArc>(chosen) == CircularArc::closed(1, inf));
}

TEST_CASE("Alexander input is validated") {
  const std::vector<std::int64_t> bad_at_one{1, 1};
  const std::vector<std::int64_t> bad_constant{0, 1};
  CHECK_THROWS(TorsionProfile::from_alexander(bad_at_one));
  CHECK_THROWS(TorsionProfile::from_alexander(bad_constant));
  const std::vector<std::int64_t> unknot{1};
  CHECK(compute_d_positive(TorsionProfile::from_alexander(unknot)).empty());
}

TEST_CASE("unknot-style and two-torsion profiles") {
  const TorsionProfile unknot(1, 0, {{true}});
  CHECK(compute_d_positive(unknot).empty());
  CHECK(interval_candidates(compute_d_positive(unknot)).is_all_but_longitude());

  // missing exactly (2, 0)
  const TorsionProfile two(2, 2, {{true, false}, {true, true}, {false, true}});
  CHECK(compute_d_positive(two).firsts == std::vector<std::int64_t>{1, 2});
  const auto cand = interval_candidates(compute_d_positive(two));
  CHECK(cand.right() == CircularArc::closed(2, inf));
  CHECK(cand.left() == CircularArc::closed(inf, -2));
}

TEST_CASE("select_interval") {
  CHECK(std::holds_alternative<AllButLongitude>(select_interval(LSpaceIntervalCandidates::all_but_longitude(), 3)));
  const auto two = LSpaceIntervalCandidates::one_sided(2);
  CHECK_THROWS_AS(select_interval(two, 0), LSpaceInconsistency);
  CHECK_THROWS_AS(select_interval(two, inf), LSpaceInconsistency);
  CHECK(std::get<CircularArc>(select_interval(two, -7)) == CircularArc::closed(inf, -2));
  CHECK(interval_contains(select_interval(two, 3), inf));
  CHECK_FALSE(interval_contains(AllButLongitude{}, 0));
  CHECK(interval_contains(AllButLongitude{}, inf));
}

TEST_CASE("profile file round trip and errors") {
  std::istringstream in("# two torsion\n2 2\n0 0\n\n1 0\n1 1\n2 1\n");
  const auto prof = TorsionProfile::read(in);
  std::ostringstream out;
  prof.write(out);
  CHECK(out.str() == "2 2\n0 0\n1 0\n1 1\n2 1\n");
  CHECK(compute_d_positive(prof).firsts == std::vector<std::int64_t>{1, 2});

  std::istringstream bad("2 2\n0 0\n3 0\n");
  try {
    TorsionProfile::read(bad);
    FAIL("expected an error");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  std::istringstream no_zero("1 1\n1 0\n");
  CHECK_THROWS(TorsionProfile::read(no_zero));
}

TEST_CASE("D positive matches the pair-enumeration oracle on random profiles") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 300; ++i) {
    std::vector<std::vector<bool>> table;
    const auto prof = random_profile(rng, table);
    const auto expected = oracle::d_positive(prof.torsion_order(), prof.threshold(), table);
    const auto got = compute_d_positive(prof);
    CHECK(std::vector<std::int64_t>(expected.begin(), expected.end()) == got.firsts);
    for (auto n : got.firsts) {
      CHECK(n > 0);
      CHECK(n <= prof.threshold());
    }
  }
}

TEST_CASE("propagation region") {
  CHECK(propagate_region(Multislope{q(3, 2), 5}).to_string() == "[1, inf] x [5, inf]");
  CHECK(propagate_region(Multislope{q(1, 2), 2}).to_string() == "(0, inf] x [2, inf]");
  CHECK(propagate_region(Multislope{1, 1}).to_string() == "[1, inf] x [1, inf]");
  CHECK_THROWS(propagate_region(Multislope{0, 1}));
  CHECK_THROWS(propagate_region(Multislope{inf, 1}));
  CHECK_THROWS(propagate_region(Multislope{-1, 1}));
}

TEST_CASE("propagation is monotone") {
  std::mt19937_64 rng(22);
  auto positive = [&]() {
    std::uniform_int_distribution<std::int64_t> d(1, 30);
    return q(d(rng), d(rng));
  };
  for (int i = 0; i < 500; ++i) {
    const ExtRational a = positive();
    const ExtRational b = positive();
    ExtRational lo = a, hi = b;
    if (oracle::less(b, a)) std::swap(lo, hi);
    const Region small = propagate_region(Multislope{hi, 2});
    const Region big = propagate_region(Multislope{lo, 2});
    for (int j = 0; j < 20; ++j) {
      const Multislope m{j == 0 ? inf : oracle::random_slope(rng, 40), oracle::random_slope(rng, 40)};
      if (small.contains(m)) CHECK(big.contains(m));
    }
  }
}

TEST_CASE("two-component region") {
  const Region r00 = two_component_region(0, 0);
  CHECK(r00.contains(Multislope{1, 1}));
  CHECK_FALSE(r00.contains(Multislope{q(1, 2), 7}));
  const Region r10 = two_component_region(1, 0);
  CHECK_FALSE(r10.contains(Multislope{2, 1}));
  CHECK(r10.contains(Multislope{3, 1}));
}

TEST_CASE("two-component region on integer pairs") {
  for (std::int64_t b1 = 0; b1 <= 3; ++b1) {
    for (std::int64_t b2 = 0; b2 <= 3; ++b2) {
      const Region r = two_component_region(b1, b2);
      for (std::int64_t d1 = -10; d1 <= 10; ++d1) {
        for (std::int64_t d2 = -10; d2 <= 10; ++d2) {
          CHECK(r.contains(Multislope{d1, d2}) == (d1 > 2 * b1 && d2 > 2 * b2));
        }
      }
    }
  }
}
