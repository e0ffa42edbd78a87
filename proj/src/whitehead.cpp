#include "slope_atlas/whitehead.hpp"

#include <limits>

#include "json.hpp"
#include "slope_atlas/lspace.hpp"

namespace slope_atlas {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    case Verdict::NotApplicable: return "na";
  }
  return "?";
}

std::string_view to_string(Orderability o) {
  switch (o) {
    case Orderability::Yes: return "yes";
    case Orderability::No: return "no";
    case Orderability::Unknown: return "unknown";
  }
  return "?";
}

namespace {

nlohmann::json big_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(v);
  }
  return v.str();
}

BigInt mod(const BigInt& x, const BigInt& p) {
  BigInt r = x % p;
  if (r < 0) r += p;
  return r;
}

}  // namespace

std::string SurgeryVerdict::to_json(int indent) const {
  nlohmann::json j;
  j["slope"] = nlohmann::json::array();
  for (const auto& s : input.components()) j["slope"].push_back(s.to_string());
  j["qhs"] = is_qhs;
  j["homology"] = {big_to_json(homology.first), big_to_json(homology.second)};
  j["lspace"] = std::string(to_string(lspace));
  j["foliation"] = std::string(to_string(taut_foliation));
  j["euler_zero"] = std::string(to_string(euler_vanishing));
  j["left_orderable"] = std::string(to_string(left_orderable));
  j["citations"] = citations;
  return j.dump(indent);
}

bool euler_criterion(const EulerData& d, bool e_tf_zero) {
  bool all = true;
  for (const auto& e : d) {
    if (e.p <= 0) throw std::invalid_argument("Euler data needs p > 0, got " + e.p.str());
    if (mod(e.a * e.q - e.b, e.p) != 0) all = false;
  }
  return e_tf_zero && all;
}

std::pair<BigInt, BigInt> slope_pq(const ExtRational& s) {
  if (s.is_infinite()) throw SlopeError("slope inf has no finite (p, q) with q != 0", "inf");
  if (s.num() < 0) return {-s.num(), -s.den()};
  return {s.num(), s.den()};
}

EulerData wl_euler_data(const ExtRational& s1, const ExtRational& s2) {
  // Constants of the Whitehead-link fibration: a = -1 always, b = ±1 by the
  // sign of q.
  EulerData d;
  for (const auto* s : {&s1, &s2}) {
    auto [p, q] = slope_pq(*s);
    d.push_back({BigInt(-1), BigInt(q < 0 ? 1 : -1), std::move(p), std::move(q)});
  }
  return d;
}

bool wl_euler_vanishes(const ExtRational& s1, const ExtRational& s2) {
  for (const auto* s : {&s1, &s2}) {
    if (s->is_infinite()) throw std::invalid_argument("Euler test needs finite slopes");
    if (s->is_zero()) throw std::invalid_argument("Euler test needs p != 0");
  }
  for (const auto* s : {&s1, &s2}) {
    const auto [p, q] = slope_pq(*s);
    if (mod(abs(q) - 1, p) != 0) return false;
  }
  return true;
}

Region wl_foliation_region() {
  const auto inf = ExtRational::infinity();
  const auto below_one = CircularArc::open(inf, ExtRational(1));
  const auto positive = CircularArc::open(ExtRational(0), inf);
  const auto negative = CircularArc::open(inf, ExtRational(0));
  const auto middle = CircularArc::open(ExtRational(-1), ExtRational(1));
  Region r(2);
  r.add_box({below_one, below_one});
  r.add_box({positive, negative});
  r.add_box({negative, positive});
  r.add_box({positive, middle});
  r.add_box({middle, positive});
  return r;
}

Region wl_lspace_region() { return two_component_region(0, 0); }

SurgeryVerdict classify(const ExtRational& s1, const ExtRational& s2) {
  SurgeryVerdict v;
  v.input = Multislope{s1, s2};
  auto order = [](const ExtRational& s) { return s.is_infinite() ? BigInt(1) : BigInt(abs(s.num())); };
  v.homology = {order(s1), order(s2)};
  v.citations.push_back("linking-number-zero-homology");
  v.is_qhs = !s1.is_zero() && !s2.is_zero();
  if (!v.is_qhs) return v;

  if (s1.is_infinite() || s2.is_infinite()) {
    v.lspace = Verdict::Yes;
    v.taut_foliation = Verdict::No;
    v.left_orderable = Orderability::No;
    v.citations.push_back("lens-space-filling");
    v.citations.push_back("trivial-group-not-lo");
    return v;
  }

  const ExtRational one(1);
  const bool ge1_first = compare_finite(s1, one) >= 0;
  const bool ge1_second = compare_finite(s2, one) >= 0;
  const bool lspace = ge1_first && ge1_second;
  v.lspace = lspace ? Verdict::Yes : Verdict::No;
  v.taut_foliation = lspace ? Verdict::No : Verdict::Yes;
  v.citations.push_back(lspace ? "lspace-region" : "foliation-region");

  bool lo_yes = false;
  if (!lspace) {
    const bool zero = wl_euler_vanishes(s1, s2);
    v.euler_vanishing = zero ? Verdict::Yes : Verdict::No;
    v.citations.push_back("euler-congruence");
    if (zero) {
      lo_yes = true;
      v.citations.push_back("euler-zero-lo");
    }
  }
  const ExtRational minus_one(-1);
  auto integer_at_most_minus_one = [&](const ExtRational& s) {
    return s.is_integer() && compare_finite(s, minus_one) <= 0;
  };
  if (integer_at_most_minus_one(s1) || integer_at_most_minus_one(s2)) {
    lo_yes = true;
    v.citations.push_back("integer-surgery-lo");
  }
  const bool lo_no = (s1.is_integer() && ge1_first && ge1_second) || (s2.is_integer() && ge1_second && ge1_first);
  if (lo_no) v.citations.push_back("integer-surgery-nlo");

  if (lo_yes && lo_no) {
    throw InternalInconsistency("orderability rules disagree on " + v.input.to_string());
  }
  v.left_orderable = lo_yes ? Orderability::Yes : lo_no ? Orderability::No : Orderability::Unknown;
  return v;
}

}  // namespace slope_atlas
