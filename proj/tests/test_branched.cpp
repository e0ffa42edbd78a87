#include <algorithm>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "slope_atlas/branched.hpp"

using namespace slope_atlas;

namespace {

std::size_t count_kind(const BranchComplex& c, SectorKind k) {
  return static_cast<std::size_t>(
      std::count_if(c.sectors().begin(), c.sectors().end(), [&](const Sector& s) { return s.kind == k; }));
}

std::vector<std::vector<std::int64_t>> as_vectors(const std::vector<WeightSystem>& cone) {
  std::vector<std::vector<std::int64_t>> out;
  for (const auto& w : cone) out.push_back(w.weights);
  return out;
}

std::vector<std::vector<std::int64_t>> sorted(std::vector<std::vector<std::int64_t>> v) {
  std::sort(v.begin(), v.end());
  return v;
}

BranchComplex random_complex(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> nd(1, 10);
  std::bernoulli_distribution coin(0.5);
  BranchComplex c;
  const std::size_t n = nd(rng);
  for (std::size_t i = 0; i < n; ++i) {
    c.add_sector("R" + std::to_string(i), coin(rng) ? SectorKind::Disc : SectorKind::HalfDisc, coin(rng));
  }
  std::uniform_int_distribution<std::size_t> sd(0, n - 1);
  std::uniform_int_distribution<std::size_t> ad(0, 8);
  for (std::size_t a = ad(rng); a > 0; --a) c.add_arc("E" + std::to_string(a), sd(rng), sd(rng), sd(rng));
  return c;
}

}  // namespace

TEST_CASE("parallel-arc complex sizes") {
  const auto c = build_parallel_arc_complex(Monodromy(1, {1, -1}));
  CHECK(count_kind(c, SectorKind::HalfDisc) == 2);
  CHECK(count_kind(c, SectorKind::Disc) == 4);
  CHECK(c.arcs().size() == 6);
  const auto c3 = build_parallel_arc_complex(Monodromy(2, {1, 1, 1}));
  CHECK(count_kind(c3, SectorKind::HalfDisc) == 3);
  CHECK(count_kind(c3, SectorKind::Disc) == 18);
  CHECK(detect_sink_discs(c).empty());
  CHECK(detect_sink_discs(c3).empty());
  CHECK(degenerate_sectors(c3).empty());
  CHECK_THROWS_AS(build_parallel_arc_complex(Monodromy(0, {1, 2})), std::invalid_argument);
}

TEST_CASE("coherent complex sizes") {
  const Monodromy m(1, {5, 10, -5});
  const auto [first, second] = coherent_orientations(m);
  const auto c = build_coherent_arc_complex(m, first);
  CHECK(count_kind(c, SectorKind::HalfDisc) == 3);
  CHECK(count_kind(c, SectorKind::Disc) == 20);
  CHECK(detect_sink_discs(c).empty());
  CHECK(detect_sink_discs(build_coherent_arc_complex(m, second)).empty());

  const Monodromy small(1, {1, -1});
  const auto cs = build_coherent_arc_complex(small, coherent_orientations(small).first);
  CHECK(count_kind(cs, SectorKind::HalfDisc) == 2);
  CHECK(count_kind(cs, SectorKind::Disc) == 2);

  OrientationAssignment bad = first;
  bad.directions[0] = bad.directions[0] == ArcDirection::Forward ? ArcDirection::Backward : ArcDirection::Forward;
  CHECK_THROWS_AS(build_coherent_arc_complex(m, bad), std::invalid_argument);
  CHECK_THROWS_AS(build_coherent_arc_complex(small, coherent_orientations(small).first, {1, 1}),
                  std::invalid_argument);
}

TEST_CASE("weight cones of generated complexes") {
  const auto c = build_parallel_arc_complex(Monodromy(1, {1, -1}));
  const auto cone = carried_weight_cone(c, 3);
  CHECK(cone.size() == 4);
  CHECK(is_fundamental_ray(c, cone, 3));
  CHECK(sorted(as_vectors(cone)) == sorted(oracle::weight_cone(c, 3)));
  for (const auto& w : cone) CHECK(satisfies_switch_equations(c, w));

  const Monodromy m(1, {5, 10, -5});
  const auto cc = build_coherent_arc_complex(m, coherent_orientations(m).first);
  const auto cone2 = carried_weight_cone(cc, 2);
  CHECK(cone2.size() == 3);
  CHECK(is_fundamental_ray(cc, cone2, 2));
}

TEST_CASE("single sector without arcs is degenerate, not a sink") {
  BranchComplex c;
  c.add_sector("Q", SectorKind::Disc, false);
  CHECK(detect_sink_discs(c).empty());
  CHECK(degenerate_sectors(c) == std::vector<std::string>{"Q"});
  CHECK(carried_weight_cone(c, 2).size() == 3);
}

TEST_CASE("flipping one chain arc creates a sink") {
  // coherent complex for (1; 1, -1): the flipped arc leaves S1 with every cusp inward
  const Monodromy m(1, {1, -1});
  auto c = build_coherent_arc_complex(m, coherent_orientations(m).first);
  auto& arc = c.mutable_arcs()[0];
  std::swap(arc.big, arc.small_a);
  CHECK(detect_sink_discs(c) == std::vector<std::string>{"S1"});
  CHECK(oracle::sinks(c) == detect_sink_discs(c));
  const auto cone = carried_weight_cone(c, 2);
  CHECK_FALSE(is_fundamental_ray(c, cone, 2));
  CHECK(sorted(as_vectors(cone)) == sorted(oracle::weight_cone(c, 2)));

  // parallel complex for (2; 1): the same flip inside its single annulus
  auto p = build_parallel_arc_complex(Monodromy(2, {1}));
  auto& chain = p.mutable_arcs()[0];
  std::swap(chain.big, chain.small_a);
  CHECK(detect_sink_discs(p) == std::vector<std::string>{"A1S1"});
  CHECK_FALSE(is_fundamental_ray(p, carried_weight_cone(p, 2), 2));
}

TEST_CASE("flipped parallel complex with a second annulus keeps the ray") {
  // the untouched annulus still forces every D weight to vanish
  auto c = build_parallel_arc_complex(Monodromy(1, {1, -1}));
  auto& arc = c.mutable_arcs()[0];
  std::swap(arc.big, arc.small_a);
  CHECK(detect_sink_discs(c) == std::vector<std::string>{"A1S1"});
  CHECK(is_fundamental_ray(c, carried_weight_cone(c, 2), 2));
}

TEST_CASE("randomised surjective slot assignment keeps the ray") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 30; ++i) {
    const std::size_t k = 1 + rng() % 3;
    std::vector<std::int64_t> a(k, 1);
    const std::int64_t a0 = (rng() % 2 == 0) ? 1 : -2;
    const std::size_t slots = k * static_cast<std::size_t>(a0 < 0 ? -a0 : a0);
    std::vector<std::vector<std::size_t>> table(k + 1, std::vector<std::size_t>(slots + 1));
    for (std::size_t ann = 1; ann <= k; ++ann) {
      std::vector<std::size_t> perm;
      for (std::size_t j = 1; j <= slots; ++j) perm.push_back(((j - 1) % k) + 1);
      std::shuffle(perm.begin(), perm.end(), rng);
      for (std::size_t j = 1; j <= slots; ++j) table[ann][j] = perm[j - 1];
    }
    const auto c = build_parallel_arc_complex(Monodromy(a0, a), [&](std::size_t ann, std::size_t j) {
      return table[ann][j];
    });
    CHECK(detect_sink_discs(c).empty());
    CHECK(is_fundamental_ray(c, carried_weight_cone(c, 3), 3));
  }
  CHECK_THROWS(build_parallel_arc_complex(Monodromy(1, {1, 1}), [](std::size_t, std::size_t) -> std::size_t { return 1; }));
}

TEST_CASE("sink detector and weight cone agree with oracles on random complexes") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 400; ++i) {
    const auto c = random_complex(rng);
    CHECK(detect_sink_discs(c) == oracle::sinks(c));
    if (c.sectors().size() <= 7) {
      const auto cone = carried_weight_cone(c, 2);
      CHECK(sorted(as_vectors(cone)) == sorted(oracle::weight_cone(c, 2)));
      for (const auto& w : cone) CHECK(satisfies_switch_equations(c, w));
    }
  }
}

TEST_CASE("complex JSON round trip") {
  const auto c = build_parallel_arc_complex(Monodromy(-1, {2, -1}));
  const auto back = BranchComplex::from_json(c.to_json());
  CHECK(back.to_json() == c.to_json());
  CHECK(c.index_of("A2S1") == 2 + 2);
  CHECK_THROWS(BranchComplex::from_json(R"({"sectors":[],"arcs":[{"id":"E","big":"Z","a":"Z","b":"Z"}]})"));
}
