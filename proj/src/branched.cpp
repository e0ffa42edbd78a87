#include "slope_atlas/branched.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "json.hpp"

namespace slope_atlas {

std::size_t BranchComplex::add_sector(std::string id, SectorKind kind, bool meets_boundary) {
  if (index_.count(id)) throw std::invalid_argument("duplicate sector id " + id);
  const std::size_t idx = sectors_.size();
  index_.emplace(id, idx);
  sectors_.push_back({std::move(id), kind, meets_boundary});
  return idx;
}

void BranchComplex::add_arc(std::string id, std::size_t big, std::size_t small_a, std::size_t small_b) {
  const std::size_t n = sectors_.size();
  if (big >= n || small_a >= n || small_b >= n) throw std::out_of_range("branch arc " + id + " names an unknown sector");
  arcs_.push_back({std::move(id), big, small_a, small_b});
}

std::size_t BranchComplex::index_of(const std::string& id) const {
  const auto it = index_.find(id);
  if (it == index_.end()) throw std::out_of_range("unknown sector id " + id);
  return it->second;
}

std::string BranchComplex::to_json(int indent) const {
  nlohmann::json j;
  j["sectors"] = nlohmann::json::array();
  for (const auto& s : sectors_) {
    j["sectors"].push_back({{"id", s.id},
                            {"kind", s.kind == SectorKind::Disc ? "disc" : "half_disc"},
                            {"meets_boundary", s.meets_boundary}});
  }
  j["arcs"] = nlohmann::json::array();
  for (const auto& a : arcs_) {
    j["arcs"].push_back({{"id", a.id}, {"big", sectors_[a.big].id}, {"a", sectors_[a.small_a].id}, {"b", sectors_[a.small_b].id}});
  }
  return j.dump(indent);
}

BranchComplex BranchComplex::from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  BranchComplex c;
  for (const auto& s : j.at("sectors")) {
    const std::string kind = s.at("kind").get<std::string>();
    if (kind != "disc" && kind != "half_disc") throw std::invalid_argument("unknown sector kind " + kind);
    c.add_sector(s.at("id").get<std::string>(), kind == "disc" ? SectorKind::Disc : SectorKind::HalfDisc,
                 s.at("meets_boundary").get<bool>());
  }
  for (const auto& a : j.at("arcs")) {
    c.add_arc(a.at("id").get<std::string>(), c.index_of(a.at("big").get<std::string>()),
              c.index_of(a.at("a").get<std::string>()), c.index_of(a.at("b").get<std::string>()));
  }
  return c;
}

namespace {

std::vector<std::size_t> add_half_discs(BranchComplex& c, std::size_t k) {
  std::vector<std::size_t> d;
  for (std::size_t i = 1; i <= k; ++i) d.push_back(c.add_sector("D" + std::to_string(i), SectorKind::HalfDisc, true));
  return d;
}

void require_onto(const std::vector<std::size_t>& used, std::size_t k, const char* what) {
  std::vector<bool> seen(k, false);
  for (std::size_t l : used) {
    if (l < 1 || l > k) throw std::invalid_argument(std::string(what) + " names D" + std::to_string(l) + ", out of range");
    seen[l - 1] = true;
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw std::invalid_argument(std::string(what) + " must involve every D sector");
  }
}

}  // namespace

BranchComplex build_parallel_arc_complex(const Monodromy& m, const SlotAssignment& l) {
  if (m.a0() == 0) throw std::invalid_argument("parallel-arc construction needs a0 != 0");
  const std::size_t k = m.k();
  const std::size_t slots = k * static_cast<std::size_t>(m.a0() < 0 ? -m.a0() : m.a0());
  BranchComplex c;
  const auto d = add_half_discs(c, k);

  std::vector<std::vector<std::size_t>> delta(k);
  for (std::size_t i = 1; i <= k; ++i) {
    for (std::size_t j = 1; j <= slots; ++j) {
      delta[i - 1].push_back(
          c.add_sector("A" + std::to_string(i) + "S" + std::to_string(j), SectorKind::Disc, false));
    }
  }
  for (std::size_t i = 1; i <= k; ++i) {
    std::vector<std::size_t> used;
    for (std::size_t j = 1; j <= slots; ++j) used.push_back(l ? l(i, j) : ((j - 1) % k) + 1);
    require_onto(used, k, "slot assignment");
    for (std::size_t j = 1; j <= slots; ++j) {
      c.add_arc("A" + std::to_string(i) + "E" + std::to_string(j), delta[i - 1][j % slots], delta[i - 1][j - 1],
                d[used[j - 1] - 1]);
    }
  }
  for (std::size_t i = 1; i <= k; ++i) {
    const std::size_t prev = (i + k - 2) % k;
    c.add_arc("X" + std::to_string(i), delta[i - 1][0], delta[prev][slots - 1], d[i - 1]);
  }
  return c;
}

BranchComplex build_coherent_arc_complex(const Monodromy& m, const OrientationAssignment& o,
                                         std::vector<std::size_t> source) {
  if (!is_coherent(m, o)) throw std::invalid_argument("orientation is not coherent for monodromy " + m.to_string());
  const std::size_t k = m.k();
  std::size_t n = 0;
  for (std::int64_t a : m.exponents()) n += static_cast<std::size_t>(a < 0 ? -a : a);
  if (source.empty()) {
    for (std::size_t l = 1; l <= n; ++l) source.push_back(((l - 1) % k) + 1);
  }
  if (source.size() != n) throw std::invalid_argument("source order must list one D index per arc");
  require_onto(source, k, "source order");

  const auto [first, second] = coherent_orientations(m);
  const bool forward = o == first;

  BranchComplex c;
  const auto d = add_half_discs(c, k);
  std::vector<std::size_t> delta;
  for (std::size_t l = 1; l <= n; ++l) delta.push_back(c.add_sector("S" + std::to_string(l), SectorKind::Disc, false));
  for (std::size_t l = 1; l <= n; ++l) {
    const std::size_t here = delta[l - 1];
    const std::size_t next = delta[l % n];
    if (forward) {
      c.add_arc("E" + std::to_string(l), next, here, d[source[l - 1] - 1]);
    } else {
      c.add_arc("E" + std::to_string(l), here, next, d[source[l - 1] - 1]);
    }
  }
  return c;
}

std::vector<std::string> detect_sink_discs(const BranchComplex& c) {
  const std::size_t n = c.sectors().size();
  std::vector<bool> incident(n, false);
  std::vector<bool> small(n, false);
  for (const auto& a : c.arcs()) {
    incident[a.big] = incident[a.small_a] = incident[a.small_b] = true;
    small[a.small_a] = small[a.small_b] = true;
  }
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& s = c.sectors()[i];
    const bool candidate = s.kind == SectorKind::HalfDisc || !s.meets_boundary;
    if (candidate && incident[i] && !small[i]) out.push_back(s.id);
  }
  return out;
}

std::vector<std::string> degenerate_sectors(const BranchComplex& c) {
  std::vector<bool> incident(c.sectors().size(), false);
  for (const auto& a : c.arcs()) incident[a.big] = incident[a.small_a] = incident[a.small_b] = true;
  std::vector<std::string> out;
  for (std::size_t i = 0; i < incident.size(); ++i) {
    if (!incident[i]) out.push_back(c.sectors()[i].id);
  }
  return out;
}

std::map<std::string, std::int64_t> WeightSystem::by_id(const BranchComplex& c) const {
  std::map<std::string, std::int64_t> out;
  for (std::size_t i = 0; i < weights.size(); ++i) out[c.sectors()[i].id] = weights[i];
  return out;
}

bool satisfies_switch_equations(const BranchComplex& c, const WeightSystem& w) {
  if (w.weights.size() != c.sectors().size()) return false;
  for (const auto& a : c.arcs()) {
    if (w.weights[a.big] != w.weights[a.small_a] + w.weights[a.small_b]) return false;
  }
  return true;
}

namespace {

// pivot_value * scale = -Σ coeff[j] * free_value[j]
struct PivotRow {
  std::size_t pivot;
  std::int64_t scale;
  std::vector<std::int64_t> coeff;  // indexed like the free columns
};

std::int64_t to_int64(const BigInt& v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("switch-equation coefficient exceeds 64 bits");
  }
  return static_cast<std::int64_t>(v);
}

}  // namespace

std::vector<WeightSystem> carried_weight_cone(const BranchComplex& c, std::int64_t bound) {
  if (bound < 0) throw std::invalid_argument("bound must be nonnegative");
  const std::size_t n = c.sectors().size();
  std::vector<std::vector<Rational>> rows;
  for (const auto& a : c.arcs()) {
    std::vector<Rational> row(n, Rational(0));
    row[a.big] += 1;
    row[a.small_a] -= 1;
    row[a.small_b] -= 1;
    rows.push_back(std::move(row));
  }

  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < rows.size(); ++col) {
    std::size_t sel = r;
    while (sel < rows.size() && rows[sel][col] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    const Rational inv = 1 / rows[r][col];
    for (auto& v : rows[r]) v *= inv;
    for (std::size_t o = 0; o < rows.size(); ++o) {
      if (o == r || rows[o][col] == 0) continue;
      const Rational f = rows[o][col];
      for (std::size_t j = 0; j < n; ++j) rows[o][j] -= f * rows[r][j];
    }
    pivots.push_back(col);
    ++r;
  }

  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < n; ++j) {
    if (!is_pivot[j]) free_cols.push_back(j);
  }

  std::vector<PivotRow> pivot_rows;
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    BigInt lcm = 1;
    for (std::size_t f : free_cols) lcm = boost::multiprecision::lcm(lcm, denominator(rows[i][f]));
    PivotRow pr{pivots[i], to_int64(lcm), {}};
    for (std::size_t f : free_cols) {
      const Rational scaled = rows[i][f] * Rational(lcm);
      pr.coeff.push_back(to_int64(numerator(scaled)));
    }
    pivot_rows.push_back(std::move(pr));
  }

  std::vector<WeightSystem> out;
  std::vector<std::int64_t> values(free_cols.size(), 0);
  WeightSystem w{std::vector<std::int64_t>(n, 0)};
  while (true) {
    for (std::size_t f = 0; f < free_cols.size(); ++f) w.weights[free_cols[f]] = values[f];
    bool ok = true;
    for (const auto& pr : pivot_rows) {
      std::int64_t acc = 0;
      for (std::size_t f = 0; f < free_cols.size(); ++f) acc -= pr.coeff[f] * values[f];
      if (acc % pr.scale != 0) {
        ok = false;
        break;
      }
      const std::int64_t v = acc / pr.scale;
      if (v < 0 || v > bound) {
        ok = false;
        break;
      }
      w.weights[pr.pivot] = v;
    }
    if (ok) out.push_back(w);

    std::size_t f = 0;
    while (f < values.size() && values[f] == bound) values[f++] = 0;
    if (f == values.size()) break;
    ++values[f];
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_fundamental_ray(const BranchComplex& c, const std::vector<WeightSystem>& cone, std::int64_t bound) {
  std::vector<WeightSystem> expected;
  for (std::int64_t t = 0; t <= bound; ++t) {
    WeightSystem w;
    for (const auto& s : c.sectors()) w.weights.push_back(s.kind == SectorKind::Disc ? t : 0);
    expected.push_back(std::move(w));
  }
  std::vector<WeightSystem> sorted = cone;
  std::sort(sorted.begin(), sorted.end());
  return sorted == expected;
}

}  // namespace slope_atlas
