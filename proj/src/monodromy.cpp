#include "slope_atlas/monodromy.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>

namespace slope_atlas {

namespace {

std::int64_t parse_exponent(std::string_view s, std::string_view whole) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw std::invalid_argument("malformed exponent '" + std::string(s) + "' in monodromy '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Monodromy::Monodromy(std::int64_t a0, std::vector<std::int64_t> exponents)
    : a0_(a0), exponents_(std::move(exponents)) {
  if (exponents_.empty()) throw std::invalid_argument("monodromy needs at least one boundary twist");
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] == 0) {
      throw std::invalid_argument("twist exponent a" + std::to_string(i + 1) + " must be nonzero");
    }
  }
}

Monodromy Monodromy::parse(std::string_view text) {
  const auto semi = text.find(';');
  if (semi == std::string_view::npos) {
    throw std::invalid_argument("monodromy must look like \"a0; a1, ..., ak\", got '" + std::string(text) + "'");
  }
  const std::int64_t a0 = parse_exponent(text.substr(0, semi), text);
  std::vector<std::int64_t> exps;
  std::string_view rest = text.substr(semi + 1);
  std::size_t pos = 0;
  while (true) {
    const auto comma = rest.find(',', pos);
    exps.push_back(parse_exponent(rest.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos), text));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Monodromy(a0, std::move(exps));
}

Monodromy Monodromy::rotated() const {
  std::vector<std::int64_t> r(exponents_.begin() + 1, exponents_.end());
  r.push_back(exponents_.front());
  return Monodromy(a0_, std::move(r));
}

std::string Monodromy::to_string() const {
  std::string out = std::to_string(a0_) + ";";
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    out += (i ? ", " : " ") + std::to_string(exponents_[i]);
  }
  return out;
}

std::string_view to_string(BoundaryLabel label) {
  switch (label) {
    case BoundaryLabel::Pplus: return "p+";
    case BoundaryLabel::Pminus: return "p-";
    case BoundaryLabel::N: return "n";
  }
  return "?";
}

std::string_view to_string(ArcDirection d) { return d == ArcDirection::Forward ? "forward" : "backward"; }
std::string_view to_string(NType t) { return t == NType::Out ? "n_out" : "n_in"; }

std::vector<BoundaryLabel> labels(const Monodromy& m) {
  std::vector<BoundaryLabel> out;
  out.reserve(m.k());
  for (std::size_t i = 0; i < m.k(); ++i) {
    const std::int64_t a = m.exponent(i);
    const std::int64_t b = m.exponent(i + 1);
    if (a > 0 && b > 0) {
      out.push_back(BoundaryLabel::Pplus);
    } else if (a < 0 && b < 0) {
      out.push_back(BoundaryLabel::Pminus);
    } else {
      out.push_back(BoundaryLabel::N);
    }
  }
  return out;
}

BoundaryIntervals intervals(const Monodromy& m) {
  const auto inf = ExtRational::infinity();
  const CircularArc below_one = CircularArc::open(inf, ExtRational(1));
  const CircularArc above_minus_one = CircularArc::open(ExtRational(-1), inf);
  const CircularArc negative = CircularArc::open(inf, ExtRational(0));
  const CircularArc positive = CircularArc::open(ExtRational(0), inf);

  BoundaryIntervals out;
  std::size_t n_seen = 0;
  for (BoundaryLabel label : labels(m)) {
    switch (label) {
      case BoundaryLabel::Pplus:
        out.i_arcs.push_back(below_one);
        out.j_arcs.push_back(below_one);
        break;
      case BoundaryLabel::Pminus:
        out.i_arcs.push_back(above_minus_one);
        out.j_arcs.push_back(above_minus_one);
        break;
      case BoundaryLabel::N:
        // Odd positions in the ascending list of N boundaries get (∞,0) in I.
        ++n_seen;
        out.i_arcs.push_back(n_seen % 2 == 1 ? negative : positive);
        out.j_arcs.push_back(n_seen % 2 == 1 ? positive : negative);
        break;
    }
  }
  return out;
}

Region foliation_region(const Monodromy& m) {
  Region region(m.k());
  const auto inf = ExtRational::infinity();
  if (m.a0() > 0) {
    region.add_box(Box(m.k(), CircularArc::open(inf, ExtRational(1))));
  } else if (m.a0() < 0) {
    region.add_box(Box(m.k(), CircularArc::open(ExtRational(-1), inf)));
  }
  auto [i_arcs, j_arcs] = intervals(m);
  region.add_box(i_arcs);
  if (j_arcs != i_arcs) region.add_box(std::move(j_arcs));
  return region;
}

OrientationAssignment OrientationAssignment::reversed() const {
  OrientationAssignment r = *this;
  for (auto& d : r.directions) d = d == ArcDirection::Forward ? ArcDirection::Backward : ArcDirection::Forward;
  for (auto& t : r.n_types) {
    if (t) t = *t == NType::Out ? NType::In : NType::Out;
  }
  return r;
}

namespace {

std::optional<NType> n_type_at(const OrientationAssignment& o, std::size_t boundary) {
  const std::size_t k = o.directions.size();
  const ArcDirection before = o.directions[boundary];
  const ArcDirection after = o.directions[(boundary + 1) % k];
  if (before == after) return std::nullopt;
  // β_i Forward ends at boundary i; β_{i+1} Backward also ends there.
  return before == ArcDirection::Forward ? NType::In : NType::Out;
}

OrientationAssignment propagate(const std::vector<BoundaryLabel>& lab, ArcDirection first) {
  const std::size_t k = lab.size();
  OrientationAssignment o;
  o.directions.reserve(k);
  o.directions.push_back(first);
  for (std::size_t i = 1; i < k; ++i) {
    const ArcDirection prev = o.directions.back();
    const bool flip = lab[i - 1] == BoundaryLabel::N;
    o.directions.push_back(flip ? (prev == ArcDirection::Forward ? ArcDirection::Backward : ArcDirection::Forward) : prev);
  }
  o.n_types.resize(k);
  for (std::size_t b = 0; b < k; ++b) {
    if (lab[b] == BoundaryLabel::N) o.n_types[b] = n_type_at(o, b);
  }
  return o;
}

}  // namespace

std::pair<OrientationAssignment, OrientationAssignment> coherent_orientations(const Monodromy& m) {
  const auto lab = labels(m);
  OrientationAssignment forward = propagate(lab, ArcDirection::Forward);
  OrientationAssignment backward = propagate(lab, ArcDirection::Backward);
  const auto first_n = std::find(lab.begin(), lab.end(), BoundaryLabel::N);
  if (first_n != lab.end()) {
    const auto idx = static_cast<std::size_t>(first_n - lab.begin());
    if (forward.n_types[idx] != NType::In) std::swap(forward, backward);
  }
  return {std::move(forward), std::move(backward)};
}

bool is_coherent(const Monodromy& m, const OrientationAssignment& o) {
  const std::size_t k = m.k();
  if (o.directions.size() != k || o.n_types.size() != k) return false;
  const auto lab = labels(m);
  for (std::size_t b = 0; b < k; ++b) {
    const bool same = o.directions[b] == o.directions[(b + 1) % k];
    if ((lab[b] == BoundaryLabel::N) == same) return false;
    if (o.n_types[b] != (lab[b] == BoundaryLabel::N ? n_type_at(o, b) : std::nullopt)) return false;
  }
  return true;
}

}  // namespace slope_atlas
