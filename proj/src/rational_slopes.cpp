#include "slope_atlas/rational_slopes.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace slope_atlas {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Parses an optionally signed run of decimal digits; false on anything else.
bool parse_integer(std::string_view s, BigInt& out) {
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty() || s.size() > 4096) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  out = BigInt(std::string(s));
  if (negative) out = -out;
  return true;
}

}  // namespace

ExtRational ExtRational::normalize(BigInt num, BigInt den) {
  if (num == 0 && den == 0) throw SlopeError("undefined slope 0/0", "0/0");
  if (den == 0) return infinity();
  if (num == 0) return ExtRational(BigInt(0), BigInt(1), Canonical{});
  if (den < 0) {
    num = -num;
    den = -den;
  }
  BigInt g = boost::multiprecision::gcd(boost::multiprecision::abs(num), den);
  if (g != 1) {
    num /= g;
    den /= g;
  }
  return ExtRational(std::move(num), std::move(den), Canonical{});
}

ExtRational ExtRational::from_rational(const Rational& r) {
  return normalize(boost::multiprecision::numerator(r), boost::multiprecision::denominator(r));
}

ExtRational ExtRational::parse(std::string_view text) {
  const std::string token(text);
  std::string_view s = trim(text);
  if (s == "inf" || s == "+inf" || s == "-inf" || s == "infinity" || s == "∞") {
    return infinity();
  }
  const auto slash = s.find('/');
  BigInt num;
  BigInt den(1);
  if (slash == std::string_view::npos) {
    if (!parse_integer(s, num)) throw SlopeError("malformed slope '" + token + "'", token);
  } else {
    if (!parse_integer(s.substr(0, slash), num) || !parse_integer(s.substr(slash + 1), den)) {
      throw SlopeError("malformed slope '" + token + "'", token);
    }
  }
  if (num == 0 && den == 0) throw SlopeError("undefined slope '" + token + "'", token);
  return normalize(std::move(num), std::move(den));
}

Rational ExtRational::to_rational() const {
  if (is_infinite()) throw std::domain_error("slope at infinity has no rational value");
  return Rational(num_, den_);
}

ExtRational ExtRational::negated() const {
  if (is_infinite()) return *this;
  return ExtRational(-num_, den_, Canonical{});
}

std::string ExtRational::to_string() const {
  if (is_infinite()) return "inf";
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b) {
  if (a.is_infinite() || b.is_infinite()) {
    return a.is_infinite() <=> b.is_infinite();
  }
  return compare_finite(a, b);
}

std::ostream& operator<<(std::ostream& os, const ExtRational& x) { return os << x.to_string(); }

std::strong_ordering compare_finite(const ExtRational& a, const ExtRational& b) {
  if (a.is_infinite() || b.is_infinite()) {
    throw std::domain_error("compare_finite called with the slope at infinity");
  }
  // Denominators are positive, so cross-multiplication preserves the order.
  const BigInt lhs = a.num() * b.den();
  const BigInt rhs = b.num() * a.den();
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

BigInt floor_of(const ExtRational& x) {
  if (x.is_infinite()) throw std::domain_error("floor of infinity");
  BigInt q = x.num() / x.den();
  if (x.num() < 0 && q * x.den() != x.num()) q -= 1;
  return q;
}

// ---------------------------------------------------------------------------
// Multislope

Multislope Multislope::parse(std::string_view text) {
  std::string_view s = trim(text);
  if (!s.empty() && s.front() == '(') {
    if (s.back() != ')') throw SlopeError("unbalanced parenthesis in '" + std::string(text) + "'", std::string(text));
    s = trim(s.substr(1, s.size() - 2));
  }
  if (s.empty()) throw SlopeError("empty multislope", std::string(text));
  std::vector<ExtRational> parts;
  std::size_t pos = 0;
  while (true) {
    const auto comma = s.find(',', pos);
    const auto piece = s.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    parts.push_back(ExtRational::parse(piece));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Multislope(std::move(parts));
}

std::string Multislope::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i) out += ", ";
    out += components_[i].to_string();
  }
  return out + ")";
}

// ---------------------------------------------------------------------------
// CircularArc

CircularArc::CircularArc(ExtRational start, ExtRational end, bool start_closed, bool end_closed)
    : start_(std::move(start)), end_(std::move(end)), start_closed_(start_closed), end_closed_(end_closed) {
  if (start_ == end_ && !start_closed_ && end_closed_) {
    throw std::invalid_argument("degenerate arc with flags (open, closed) is not well-formed");
  }
}

bool CircularArc::contains(const ExtRational& x) const {
  if (is_degenerate()) {
    if (is_point()) return x == start_;
    return start_closed_;  // full or empty
  }
  if (x == start_) return start_closed_;
  if (x == end_) return end_closed_;

  if (start_.is_infinite()) return x.is_finite() && compare_finite(x, end_) < 0;
  if (end_.is_infinite()) return x.is_finite() && compare_finite(x, start_) > 0;
  if (compare_finite(start_, end_) < 0) {
    return x.is_finite() && compare_finite(start_, x) < 0 && compare_finite(x, end_) < 0;
  }
  // Wraps through ∞.
  return x.is_infinite() || compare_finite(x, start_) > 0 || compare_finite(x, end_) < 0;
}

CircularArc CircularArc::complement() const {
  if (is_point()) throw std::domain_error("complement of a point arc is not an arc");
  return CircularArc(end_, start_, !end_closed_, !start_closed_);
}

std::string CircularArc::to_string() const {
  if (is_empty()) return "{}";
  if (is_full()) return "all";
  if (is_point()) return "{" + start_.to_string() + "}";
  std::string out(1, start_closed_ ? '[' : '(');
  out += start_.to_string();
  out += ", ";
  out += end_.to_string();
  out += end_closed_ ? ']' : ')';
  return out;
}

std::ostream& operator<<(std::ostream& os, const CircularArc& arc) { return os << arc.to_string(); }

std::vector<CircularArc> intersect(const CircularArc& a, const CircularArc& b) {
  // Sweep the circle. The finite endpoints cut it into points and open gaps;
  // membership is constant on each gap, so one sample per gap suffices.
  std::vector<ExtRational> cuts;
  for (const auto* x : {&a.start(), &a.end(), &b.start(), &b.end()}) {
    if (x->is_finite()) cuts.push_back(*x);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  const std::size_t n = cuts.size();

  // Element 0 is ∞, element 2i is cut i (1-based), element 2i+1 is the gap after it.
  const std::size_t m = 2 * n + 2;
  auto point_of = [&](std::size_t idx) -> ExtRational {
    return idx == 0 ? ExtRational::infinity() : cuts[idx / 2 - 1];
  };
  auto sample_of_gap = [&](std::size_t idx) -> ExtRational {
    const std::size_t g = (idx - 1) / 2;  // gap between cut g and cut g+1 (0 means ∞)
    if (n == 0) return ExtRational(0);
    if (g == 0) return ExtRational::from_rational(cuts.front().to_rational() - 1);
    if (g == n) return ExtRational::from_rational(cuts.back().to_rational() + 1);
    return ExtRational::from_rational((cuts[g - 1].to_rational() + cuts[g].to_rational()) / 2);
  };

  std::vector<bool> inside(m);
  for (std::size_t idx = 0; idx < m; ++idx) {
    const ExtRational x = idx % 2 == 0 ? point_of(idx) : sample_of_gap(idx);
    inside[idx] = a.contains(x) && b.contains(x);
  }

  const auto first_out = std::find(inside.begin(), inside.end(), false);
  if (first_out == inside.end()) return {CircularArc::full()};
  if (std::find(inside.begin(), inside.end(), true) == inside.end()) return {};

  std::vector<CircularArc> pieces;
  const std::size_t origin = static_cast<std::size_t>(first_out - inside.begin());
  std::size_t step = 1;
  while (step <= m) {
    const std::size_t idx = (origin + step) % m;
    if (!inside[idx]) {
      ++step;
      continue;
    }
    std::size_t last = idx;
    while (step + 1 <= m && inside[(origin + step + 1) % m]) {
      ++step;
      last = (origin + step) % m;
    }
    ++step;

    const bool first_is_point = idx % 2 == 0;
    const bool last_is_point = last % 2 == 0;
    if (idx == last && first_is_point) {
      pieces.push_back(CircularArc::point(point_of(idx)));
      continue;
    }
    ExtRational lo = first_is_point ? point_of(idx) : point_of((idx + m - 1) % m);
    ExtRational hi = last_is_point ? point_of(last) : point_of((last + 1) % m);
    if (lo == hi) throw std::logic_error("arc intersection produced a punctured circle");
    pieces.emplace_back(std::move(lo), std::move(hi), first_is_point, last_is_point);
  }
  return pieces;
}

// ---------------------------------------------------------------------------
// Region

namespace {

void require_dimension(std::size_t expected, std::size_t got) {
  if (expected != got) {
    throw DimensionMismatch("dimension mismatch: expected " + std::to_string(expected) + " components, got " +
                            std::to_string(got));
  }
}

// Expands per-coordinate alternatives into every combination.
std::vector<Box> cartesian(const std::vector<std::vector<CircularArc>>& choices) {
  std::vector<Box> out{Box{}};
  for (const auto& options : choices) {
    std::vector<Box> next;
    for (const auto& prefix : out) {
      for (const auto& arc : options) {
        Box b = prefix;
        b.push_back(arc);
        next.push_back(std::move(b));
      }
    }
    out = std::move(next);
  }
  return out;
}

std::string box_to_string(const Box& box) {
  std::string out;
  for (std::size_t i = 0; i < box.size(); ++i) {
    if (i) out += " x ";
    out += box[i].to_string();
  }
  return out;
}

}  // namespace

Region& Region::add_box(Box box) {
  require_dimension(dimension_, box.size());
  boxes_.push_back(std::move(box));
  return *this;
}

Region& Region::add_line(std::size_t pinned) {
  return add_line(InfinityLine{pinned, Box(dimension_, CircularArc::full())});
}

Region& Region::add_line(InfinityLine line) {
  require_dimension(dimension_, line.constraint.size());
  if (line.pinned >= dimension_) throw std::out_of_range("pinned coordinate out of range");
  line.constraint[line.pinned] = CircularArc::full();
  lines_.push_back(std::move(line));
  return *this;
}

bool Region::contains(const Multislope& m) const {
  require_dimension(dimension_, m.size());
  for (const auto& box : boxes_) {
    bool in = true;
    for (std::size_t i = 0; i < dimension_ && in; ++i) in = box[i].contains(m[i]);
    if (in) return true;
  }
  for (const auto& line : lines_) {
    if (!m[line.pinned].is_infinite()) continue;
    bool in = true;
    for (std::size_t i = 0; i < dimension_ && in; ++i) {
      if (i == line.pinned) continue;
      in = m[i].is_finite() && !m[i].is_zero() && line.constraint[i].contains(m[i]);
    }
    if (in) return true;
  }
  return false;
}

std::string Region::to_string() const {
  std::vector<std::string> terms;
  for (const auto& box : boxes_) terms.push_back(box_to_string(box));
  for (const auto& line : lines_) {
    std::string t;
    for (std::size_t i = 0; i < dimension_; ++i) {
      if (i) t += " x ";
      if (i == line.pinned) {
        t += "{inf}";
      } else if (line.constraint[i].is_full()) {
        t += "Q*";
      } else {
        t += "Q* & " + line.constraint[i].to_string();
      }
    }
    terms.push_back(std::move(t));
  }
  if (terms.empty()) return "{}";
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) out += " U ";
    out += terms[i];
  }
  return out;
}

Region region_union(const Region& a, const Region& b) {
  require_dimension(a.dimension(), b.dimension());
  Region out = a;
  for (const auto& box : b.boxes()) out.add_box(box);
  for (const auto& line : b.lines()) out.add_line(line);
  return out;
}

Region region_intersect(const Region& a, const Region& b) {
  require_dimension(a.dimension(), b.dimension());
  const std::size_t d = a.dimension();
  Region out(d);

  auto coordinatewise = [&](const Box& x, const Box& y, std::size_t skip) {
    std::vector<std::vector<CircularArc>> choices(d);
    for (std::size_t i = 0; i < d; ++i) {
      choices[i] = i == skip ? std::vector<CircularArc>{CircularArc::full()} : intersect(x[i], y[i]);
      if (choices[i].empty()) return std::vector<Box>{};
    }
    return cartesian(choices);
  };

  for (const auto& x : a.boxes()) {
    for (const auto& y : b.boxes()) {
      for (auto& box : coordinatewise(x, y, d)) out.add_box(std::move(box));
    }
  }
  auto box_with_line = [&](const Box& box, const InfinityLine& line) {
    if (!box[line.pinned].contains(ExtRational::infinity())) return;
    for (auto& c : coordinatewise(box, line.constraint, line.pinned)) out.add_line({line.pinned, std::move(c)});
  };
  for (const auto& box : a.boxes()) {
    for (const auto& line : b.lines()) box_with_line(box, line);
  }
  for (const auto& box : b.boxes()) {
    for (const auto& line : a.lines()) box_with_line(box, line);
  }
  for (const auto& x : a.lines()) {
    for (const auto& y : b.lines()) {
      if (x.pinned != y.pinned) continue;  // one needs ∞ where the other needs a finite slope
      for (auto& c : coordinatewise(x.constraint, y.constraint, x.pinned)) out.add_line({x.pinned, std::move(c)});
    }
  }
  return out;
}

}  // namespace slope_atlas
