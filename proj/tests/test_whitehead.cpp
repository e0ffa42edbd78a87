#include <random>

#include "doctest.h"
#include "json.hpp"
#include "oracles.hpp"
#include "slope_atlas/lspace.hpp"
#include "slope_atlas/whitehead.hpp"

using namespace slope_atlas;

namespace {

const ExtRational inf = ExtRational::infinity();
ExtRational q(std::int64_t n, std::int64_t d) { return ExtRational::normalize(n, d); }

EulerData wl(std::int64_t p1, std::int64_t q1, std::int64_t p2, std::int64_t q2) {
  auto b = [](std::int64_t qq) { return BigInt(qq < 0 ? 1 : -1); };
  return {{BigInt(-1), b(q1), BigInt(p1), BigInt(q1)}, {BigInt(-1), b(q2), BigInt(p2), BigInt(q2)}};
}

}  // namespace

TEST_CASE("Euler congruence spot values") {
  CHECK(euler_criterion(wl(3, -1, 5, 6), true));
  CHECK_FALSE(euler_criterion(wl(3, -1, 5, 4), true));
  CHECK_FALSE(euler_criterion(wl(3, -1, 5, 6), false));
  CHECK(euler_criterion({{BigInt(7), BigInt(3), BigInt(1), BigInt(-4)}}, true));
  CHECK_THROWS_AS(euler_criterion({{BigInt(-1), BigInt(1), BigInt(0), BigInt(1)}}, true), std::invalid_argument);

  CHECK(wl_euler_vanishes(-3, q(5, 6)));
  CHECK_FALSE(wl_euler_vanishes(-3, q(5, 4)));
  CHECK(wl_euler_vanishes(7, q(9, -1)));
  CHECK_THROWS(wl_euler_vanishes(inf, 2));
  CHECK_THROWS(wl_euler_vanishes(0, 2));
  CHECK(wl_euler_data(-3, q(5, 6)) == wl(3, -1, 5, 6));
}

TEST_CASE("slope sign normalisation") {
  const auto [p, qq] = slope_pq(ExtRational(-3));
  CHECK(p == 3);
  CHECK(qq == -1);
  const auto [p2, q2] = slope_pq(q(-5, 6));
  CHECK(p2 == 5);
  CHECK(q2 == -6);
}

TEST_CASE("foliation region examples") {
  const Region r = wl_foliation_region();
  CHECK(r.contains(Multislope{q(1, 2), 3}));
  CHECK(r.contains(Multislope{1, -1}));
  CHECK_FALSE(r.contains(Multislope{q(3, 2), 2}));
}

TEST_CASE("classification examples") {
  auto v = classify(1, 1);
  CHECK(v.lspace == Verdict::Yes);
  CHECK(v.taut_foliation == Verdict::No);
  CHECK(v.left_orderable == Orderability::No);

  v = classify(-1, q(7, 3));
  CHECK(v.taut_foliation == Verdict::Yes);
  CHECK(v.left_orderable == Orderability::Yes);

  v = classify(2, q(3, 2));
  CHECK(v.lspace == Verdict::Yes);
  CHECK(v.left_orderable == Orderability::No);

  v = classify(-3, q(5, 6));
  CHECK(v.taut_foliation == Verdict::Yes);
  CHECK(v.euler_vanishing == Verdict::Yes);
  CHECK(v.left_orderable == Orderability::Yes);

  v = classify(0, 5);
  CHECK_FALSE(v.is_qhs);
  CHECK(v.lspace == Verdict::NotApplicable);
  CHECK(v.taut_foliation == Verdict::NotApplicable);
  CHECK(v.euler_vanishing == Verdict::NotApplicable);
  CHECK(v.homology.first == 0);
  CHECK(v.homology.second == 5);

  v = classify(inf, q(-7, 2));
  CHECK(v.is_qhs);
  CHECK(v.lspace == Verdict::Yes);
  CHECK(v.taut_foliation == Verdict::No);
  CHECK(v.left_orderable == Orderability::No);
  CHECK(v.homology.first == 1);

  v = classify(q(3, 2), 2);
  CHECK(v.left_orderable == Orderability::No);
  v = classify(q(3, 2), q(5, 2));
  CHECK(v.lspace == Verdict::Yes);
  CHECK(v.left_orderable == Orderability::Unknown);
  v = classify(q(1, 2), q(1, 2));
  CHECK(v.euler_vanishing == Verdict::Yes);
  CHECK(v.left_orderable == Orderability::Yes);
}

TEST_CASE("verdict JSON layout") {
  const auto j = nlohmann::json::parse(classify(-1, q(7, 3)).to_json());
  CHECK(j["slope"] == nlohmann::json::array({"-1", "7/3"}));
  CHECK(j["qhs"] == true);
  CHECK(j["homology"] == nlohmann::json::array({1, 7}));
  CHECK(j["lspace"] == "no");
  CHECK(j["foliation"] == "yes");
  CHECK(j["euler_zero"] == "no");
  CHECK(j["left_orderable"] == "yes");
  CHECK(j["citations"].is_array());
}

TEST_CASE("classification is symmetric") {
  std::mt19937_64 rng(61);
  for (int i = 0; i < 3000; ++i) {
    const ExtRational a = i % 30 == 0 ? inf : oracle::random_slope(rng, 15);
    const ExtRational b = oracle::random_slope(rng, 15);
    auto x = classify(a, b);
    auto y = classify(b, a);
    CHECK(x.is_qhs == y.is_qhs);
    CHECK(x.homology.first == y.homology.second);
    CHECK(x.lspace == y.lspace);
    CHECK(x.taut_foliation == y.taut_foliation);
    CHECK(x.euler_vanishing == y.euler_vanishing);
    CHECK(x.left_orderable == y.left_orderable);
  }
}

TEST_CASE("L-space verdicts match the two-component region with b1 = b2 = 0") {
  const Region r = two_component_region(0, 0);
  CHECK(r.contains(Multislope{1, 1}));
  for (std::int64_t p1 = -8; p1 <= 8; ++p1) {
    for (std::int64_t q1 = -8; q1 <= 8; ++q1) {
      if (q1 == 0 || p1 == 0) continue;
      for (std::int64_t p2 = 1; p2 <= 8; ++p2) {
        for (std::int64_t q2 : {-5, -2, 1, 3, 7}) {
          const Multislope m{q(p1, q1), q(p2, q2)};
          const auto v = classify(m[0], m[1]);
          CHECK((v.lspace == Verdict::Yes) == r.contains(m));
          CHECK((v.lspace == Verdict::Yes) != (v.taut_foliation == Verdict::Yes));
        }
      }
    }
  }
}

TEST_CASE("foliation region identity on random large slopes") {
  std::mt19937_64 rng(62);
  const Region r = wl_foliation_region();
  for (int i = 0; i < 20000; ++i) {
    const ExtRational a = oracle::random_slope(rng, 1000000);
    const ExtRational b = oracle::random_slope(rng, 1000000);
    if (a.is_zero() || b.is_zero()) continue;
    CHECK(r.contains(Multislope{a, b}) == oracle::wl_foliation(a, b));
  }
}
