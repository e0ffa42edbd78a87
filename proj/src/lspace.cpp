#include "slope_atlas/lspace.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <string>

namespace slope_atlas {

TorsionProfile::TorsionProfile(std::int64_t torsion_order, std::int64_t threshold,
                               std::vector<std::vector<bool>> support)
    : torsion_order_(torsion_order), threshold_(threshold), support_(std::move(support)) {
  if (torsion_order_ < 1) throw std::invalid_argument("torsion order must be positive");
  if (threshold_ < 0) throw std::invalid_argument("threshold must be nonnegative");
  if (support_.size() != static_cast<std::size_t>(threshold_ + 1)) {
    throw std::invalid_argument("support table must have threshold + 1 rows");
  }
  for (const auto& row : support_) {
    if (row.size() != static_cast<std::size_t>(torsion_order_)) {
      throw std::invalid_argument("support table rows must have torsion_order entries");
    }
  }
  if (std::none_of(support_[0].begin(), support_[0].end(), [](bool b) { return b; })) {
    throw std::invalid_argument("normalised torsion needs a class with n = 0 in its support");
  }
}

TorsionProfile TorsionProfile::from_alexander(std::span<const std::int64_t> coefficients) {
  if (coefficients.empty()) throw std::invalid_argument("empty Alexander polynomial");
  std::size_t degree = coefficients.size() - 1;
  while (degree > 0 && coefficients[degree] == 0) --degree;
  if (coefficients[0] == 0) throw std::invalid_argument("Alexander polynomial must have nonzero constant term");
  const std::int64_t at_one = std::accumulate(coefficients.begin(), coefficients.begin() + degree + 1, std::int64_t{0});
  if (at_one != 1) throw std::invalid_argument("Alexander polynomial must satisfy Δ(1) = 1");

  // τ = Δ/(1 - t): the n-th coefficient is the n-th partial sum of Δ, which
  // equals Δ(1) = 1 from n = deg Δ on.
  const std::int64_t threshold = degree == 0 ? 0 : static_cast<std::int64_t>(degree) - 1;
  std::vector<std::vector<bool>> table;
  std::int64_t partial = 0;
  for (std::int64_t n = 0; n <= threshold; ++n) {
    partial += coefficients[static_cast<std::size_t>(n)];
    table.push_back({partial != 0});
  }
  return TorsionProfile(1, threshold, std::move(table));
}

TorsionProfile TorsionProfile::read(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      return true;
    }
    return false;
  };
  auto fail = [&](const std::string& msg) -> std::invalid_argument {
    return std::invalid_argument("torsion profile line " + std::to_string(line_no) + ": " + msg);
  };

  if (!next_line()) throw std::invalid_argument("torsion profile: missing header line \"p c\"");
  std::int64_t p = 0;
  std::int64_t c = 0;
  {
    std::istringstream header(line);
    std::string extra;
    if (!(header >> p >> c) || (header >> extra)) throw fail("expected header \"p c\"");
    if (p < 1 || c < 0) throw fail("need p >= 1 and c >= 0");
  }
  std::vector<std::vector<bool>> table(static_cast<std::size_t>(c + 1), std::vector<bool>(static_cast<std::size_t>(p)));
  while (next_line()) {
    std::istringstream row(line);
    std::int64_t n = 0;
    std::int64_t t = 0;
    std::string extra;
    if (!(row >> n >> t) || (row >> extra)) throw fail("expected \"n t\"");
    if (n < 0 || n > c || t < 0 || t >= p) throw fail("class out of range");
    table[static_cast<std::size_t>(n)][static_cast<std::size_t>(t)] = true;
  }
  return TorsionProfile(p, c, std::move(table));
}

void TorsionProfile::write(std::ostream& out) const {
  out << torsion_order_ << ' ' << threshold_ << '\n';
  for (std::int64_t n = 0; n <= threshold_; ++n) {
    for (std::int64_t t = 0; t < torsion_order_; ++t) {
      if (in_support(n, t)) out << n << ' ' << t << '\n';
    }
  }
}

bool TorsionProfile::in_support(std::int64_t n, std::int64_t t) const {
  if (n < 0) return false;
  if (n > threshold_) return true;
  const std::int64_t r = ((t % torsion_order_) + torsion_order_) % torsion_order_;
  return support_[static_cast<std::size_t>(n)][static_cast<std::size_t>(r)];
}

DPositiveSet compute_d_positive(const TorsionProfile& profile) {
  // x - y must lie in i(H_1(∂Y)) = Z x {0}, so x and y share the torsion
  // coordinate. x outside the support with φ(x) > φ(y) >= 0 forces
  // 0 < φ(x) <= c.
  std::set<std::int64_t> found;
  const std::int64_t c = profile.threshold();
  for (std::int64_t t = 0; t < profile.torsion_order(); ++t) {
    for (std::int64_t nx = 1; nx <= c; ++nx) {
      if (profile.in_support(nx, t)) continue;
      for (std::int64_t ny = 0; ny < nx; ++ny) {
        if (profile.in_support(ny, t)) found.insert(nx - ny);
      }
    }
  }
  return DPositiveSet{{found.begin(), found.end()}};
}

LSpaceIntervalCandidates LSpaceIntervalCandidates::one_sided(std::int64_t n_h) {
  if (n_h <= 0) throw std::invalid_argument("n_h must be positive");
  return LSpaceIntervalCandidates(n_h);
}

std::int64_t LSpaceIntervalCandidates::n_h() const {
  if (!n_h_) throw std::logic_error("all-but-longitude candidates carry no n_h");
  return *n_h_;
}

CircularArc LSpaceIntervalCandidates::right() const {
  return CircularArc::closed(ExtRational(n_h()), ExtRational::infinity());
}

CircularArc LSpaceIntervalCandidates::left() const {
  return CircularArc::closed(ExtRational::infinity(), ExtRational(-n_h()));
}

LSpaceIntervalCandidates interval_candidates(const DPositiveSet& d) {
  if (d.empty()) return LSpaceIntervalCandidates::all_but_longitude();
  return LSpaceIntervalCandidates::one_sided(d.max());
}

LSpaceInterval select_interval(const LSpaceIntervalCandidates& candidates, const ExtRational& known) {
  if (candidates.is_all_but_longitude()) return AllButLongitude{};
  const CircularArc right = candidates.right();
  const CircularArc left = candidates.left();
  const bool in_right = right.contains(known);
  const bool in_left = left.contains(known);
  if (in_right && in_left) {
    throw LSpaceInconsistency("slope " + known.to_string() + " lies in both candidate intervals and cannot pick a side");
  }
  if (in_right) return right;
  if (in_left) return left;
  throw LSpaceInconsistency("known L-space slope " + known.to_string() + " lies in neither " + right.to_string() +
                            " nor " + left.to_string());
}

bool interval_contains(const LSpaceInterval& interval, const ExtRational& x) {
  return std::visit([&](const auto& v) { return v.contains(x); }, interval);
}

Region propagate_region(const Multislope& r) {
  if (r.size() == 0) throw std::invalid_argument("empty multislope");
  Box box;
  for (const auto& ri : r.components()) {
    if (ri.is_infinite() || ri.num() <= 0) {
      throw std::invalid_argument("propagation needs finite positive slopes, got " + ri.to_string());
    }
    if (ri.num() >= ri.den()) {
      box.push_back(CircularArc::closed(ExtRational::normalize(floor_of(ri), 1), ExtRational::infinity()));
    } else {
      box.emplace_back(ExtRational(0), ExtRational::infinity(), false, true);
    }
  }
  Region out(r.size());
  out.add_box(std::move(box));
  return out;
}

Region two_component_region(std::int64_t b1, std::int64_t b2) {
  if (b1 < 0 || b2 < 0) throw std::invalid_argument("b1 and b2 must be nonnegative");
  Region out(2);
  out.add_box({CircularArc::closed(ExtRational(2 * b1 + 1), ExtRational::infinity()),
               CircularArc::closed(ExtRational(2 * b2 + 1), ExtRational::infinity())});
  out.add_line(0);
  out.add_line(1);
  return out;
}

}  // namespace slope_atlas
