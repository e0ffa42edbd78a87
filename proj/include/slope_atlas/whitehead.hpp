#pragma once

// Classification of Dehn surgeries on the Whitehead link, and the Euler-class
// congruence test for foliations filled from a fibred exterior.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "slope_atlas/rational_slopes.hpp"

namespace slope_atlas {

enum class Verdict { Yes, No, NotApplicable };
enum class Orderability { Yes, No, Unknown };

std::string_view to_string(Verdict v);        // "yes", "no", "na"
std::string_view to_string(Orderability o);   // "yes", "no", "unknown"

/// Orderability rules firing both ways on one input.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct SurgeryVerdict {
  Multislope input;
  bool is_qhs = false;
  /// |H_1| of each filled solid torus factor: |p_i|, with 0 for a Z factor
  /// and 1 for the slope ∞.
  std::pair<BigInt, BigInt> homology;
  Verdict lspace = Verdict::NotApplicable;
  Verdict taut_foliation = Verdict::NotApplicable;
  Verdict euler_vanishing = Verdict::NotApplicable;
  /// Non-QHS inputs report Unknown here: the field has no "not applicable".
  Orderability left_orderable = Orderability::Unknown;
  std::vector<std::string> citations;

  std::string to_json(int indent = -1) const;
  friend bool operator==(const SurgeryVerdict&, const SurgeryVerdict&) = default;
};

/// One boundary of the Euler data: a q ≡ b (mod p) is tested.
struct EulerBoundary {
  BigInt a;
  BigInt b;
  BigInt p;
  BigInt q;

  friend bool operator==(const EulerBoundary&, const EulerBoundary&) = default;
};

using EulerData = std::vector<EulerBoundary>;

/// Throws std::invalid_argument when some p <= 0.
bool euler_criterion(const EulerData& d, bool e_tf_zero);

/// (p, q) with p >= 0 and p/q = s. Throws SlopeError for ∞.
std::pair<BigInt, BigInt> slope_pq(const ExtRational& s);

/// a = -1 and b = +1 when q < 0, b = -1 when q > 0, at both boundaries.
EulerData wl_euler_data(const ExtRational& s1, const ExtRational& s2);

/// |q_i| ≡ 1 (mod p_i) for both slopes. Rejects ∞ and integral-longitude
/// slopes (p = 0) with std::invalid_argument.
bool wl_euler_vanishes(const ExtRational& s1, const ExtRational& s2);

/// (∞,1)² ∪ (0,∞)×(∞,0) ∪ (∞,0)×(0,∞) ∪ (0,∞)×(-1,1) ∪ (-1,1)×(0,∞).
Region wl_foliation_region();

/// L-space fillings: [1,∞]² together with the two ∞-lines.
Region wl_lspace_region();

SurgeryVerdict classify(const ExtRational& s1, const ExtRational& s2);

}  // namespace slope_atlas
