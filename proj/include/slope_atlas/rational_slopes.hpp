#pragma once

// Exact arithmetic on the slope circle Q ∪ {∞} and on regions of multislopes.
//
// A slope is stored as a reduced fraction num/den with den >= 0 and the sign
// carried by the numerator. The point at infinity is 1/0 and zero is 0/1, so
// equal slopes always have identical representations.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace slope_atlas {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Raised for malformed slope text and for the undefined slope 0/0.
class SlopeError : public std::invalid_argument {
 public:
  SlopeError(const std::string& what, std::string token)
      : std::invalid_argument(what), token_(std::move(token)) {}

  /// The offending input token (empty when not applicable).
  const std::string& token() const noexcept { return token_; }

 private:
  std::string token_;
};

/// Raised when a multislope and a region disagree on the number of components.
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ExtRational {
 public:
  /// The slope 0.
  ExtRational() : num_(0), den_(1) {}
  /// The integer slope n.
  ExtRational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)

  /// Canonical representative of num/den. (n, 0) maps to ∞ for every n != 0.
  /// Throws SlopeError for (0, 0).
  static ExtRational normalize(BigInt num, BigInt den);
  static ExtRational infinity() { return ExtRational(BigInt(1), BigInt(0), Canonical{}); }
  static ExtRational from_rational(const Rational& r);

  /// Accepts "p", "p/q" (either sign on either part), "inf", "-inf", "∞".
  static ExtRational parse(std::string_view text);

  bool is_infinite() const { return den_ == 0; }
  bool is_finite() const { return den_ != 0; }
  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  /// Throws std::domain_error for ∞.
  Rational to_rational() const;

  ExtRational negated() const;

  /// Canonical text: "n" for integers, "p/q" otherwise, "inf" for ∞.
  std::string to_string() const;

  friend bool operator==(const ExtRational&, const ExtRational&) = default;

  /// Linear order on Q with ∞ placed after every finite slope. The circle has
  /// no linear order; this one exists for sorting and deduplication only.
  friend std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b);

 private:
  struct Canonical {};
  ExtRational(BigInt num, BigInt den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}

  BigInt num_;
  BigInt den_;
};

std::ostream& operator<<(std::ostream& os, const ExtRational& x);

/// Order of two finite slopes by cross-multiplication. Throws on ∞.
std::strong_ordering compare_finite(const ExtRational& a, const ExtRational& b);

class Multislope {
 public:
  Multislope() = default;
  Multislope(std::initializer_list<ExtRational> components) : components_(components) {}
  explicit Multislope(std::vector<ExtRational> components) : components_(std::move(components)) {}

  /// Parses "(p1/q1, p2/q2, ...)"; the parentheses are optional.
  static Multislope parse(std::string_view text);

  std::size_t size() const { return components_.size(); }
  const ExtRational& operator[](std::size_t i) const { return components_[i]; }
  const std::vector<ExtRational>& components() const { return components_; }

  std::string to_string() const;

  friend bool operator==(const Multislope&, const Multislope&) = default;

 private:
  std::vector<ExtRational> components_;
};

/// A connected piece of the slope circle, traversed in increasing direction
/// from start to end and wrapping through ∞ when start > end.
///
///   finite s < e  : s < x < e
///   finite s > e  : x > s, or x = ∞, or x < e
///   s = ∞         : x < e
///   e = ∞         : x > s
///
/// Endpoint flags add the endpoints. When start = end the arc is degenerate:
/// both open is the empty set, both closed is the whole circle, and
/// (closed, open) is the single point {start}. The remaining combination
/// (open, closed) is rejected.
class CircularArc {
 public:
  CircularArc(ExtRational start, ExtRational end, bool start_closed, bool end_closed);

  static CircularArc open(ExtRational start, ExtRational end) {
    return {std::move(start), std::move(end), false, false};
  }
  static CircularArc closed(ExtRational start, ExtRational end) {
    return {std::move(start), std::move(end), true, true};
  }
  static CircularArc point(const ExtRational& x) { return {x, x, true, false}; }
  static CircularArc full() { return closed(ExtRational::infinity(), ExtRational::infinity()); }
  static CircularArc empty() { return open(ExtRational::infinity(), ExtRational::infinity()); }

  const ExtRational& start() const { return start_; }
  const ExtRational& end() const { return end_; }
  bool start_closed() const { return start_closed_; }
  bool end_closed() const { return end_closed_; }

  bool is_degenerate() const { return start_ == end_; }
  bool is_empty() const { return is_degenerate() && !start_closed_ && !end_closed_; }
  bool is_full() const { return is_degenerate() && start_closed_ && end_closed_; }
  bool is_point() const { return is_degenerate() && start_closed_ && !end_closed_; }

  bool contains(const ExtRational& x) const;

  /// The set-theoretic complement, obtained by swapping the endpoints and
  /// negating the flags. Throws std::domain_error for point arcs, whose
  /// complement is not an arc.
  CircularArc complement() const;

  /// Interval notation, e.g. "(inf, 1)", "[1, inf]", "{3}".
  std::string to_string() const;

  friend bool operator==(const CircularArc&, const CircularArc&) = default;

 private:
  ExtRational start_;
  ExtRational end_;
  bool start_closed_;
  bool end_closed_;
};

std::ostream& operator<<(std::ostream& os, const CircularArc& arc);

inline bool arc_contains(const CircularArc& arc, const ExtRational& x) { return arc.contains(x); }

/// Exact intersection of two arcs as a list of pairwise disjoint arcs
/// (at most two, possibly including point arcs). Empty list for no overlap.
std::vector<CircularArc> intersect(const CircularArc& a, const CircularArc& b);

/// One arc per coordinate.
using Box = std::vector<CircularArc>;

/// Multislopes with coordinate `pinned` equal to ∞ and every other
/// coordinate a nonzero finite slope lying in the matching constraint arc.
/// The constraint entry at `pinned` is ignored.
struct InfinityLine {
  std::size_t pinned;
  Box constraint;

  friend bool operator==(const InfinityLine&, const InfinityLine&) = default;
};

/// A finite union of arc products (boxes) and ∞-lines.
class Region {
 public:
  explicit Region(std::size_t dimension) : dimension_(dimension) {}

  std::size_t dimension() const { return dimension_; }
  const std::vector<Box>& boxes() const { return boxes_; }
  const std::vector<InfinityLine>& lines() const { return lines_; }

  Region& add_box(Box box);
  /// Adds the unconstrained line {∞ at `pinned`} × (Q*)^(d-1).
  Region& add_line(std::size_t pinned);
  Region& add_line(InfinityLine line);

  /// Throws DimensionMismatch when m has the wrong number of components.
  bool contains(const Multislope& m) const;

  std::string to_string() const;

 private:
  std::size_t dimension_;
  std::vector<Box> boxes_;
  std::vector<InfinityLine> lines_;
};

inline bool region_contains(const Region& r, const Multislope& m) { return r.contains(m); }

Region region_union(const Region& a, const Region& b);
Region region_intersect(const Region& a, const Region& b);

/// Integer floor of a finite slope.
BigInt floor_of(const ExtRational& x);

}  // namespace slope_atlas
