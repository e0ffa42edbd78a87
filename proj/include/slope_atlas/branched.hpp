#pragma once

// Sector / branch-arc complexes of branched surfaces, sink-disc detection
// and the cone of nonnegative integer weight systems.
//
// Each branch arc carries the switch equation w(big) = w(a) + w(b); the cusp
// points into `big`. A sector named on both small sides counts twice.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "slope_atlas/monodromy.hpp"

namespace slope_atlas {

enum class SectorKind { Disc, HalfDisc };

struct Sector {
  std::string id;
  SectorKind kind;
  bool meets_boundary;
};

struct BranchArc {
  std::string id;
  std::size_t big;
  std::size_t small_a;
  std::size_t small_b;
};

class BranchComplex {
 public:
  std::size_t add_sector(std::string id, SectorKind kind, bool meets_boundary);
  /// Sectors are given by index; throws std::out_of_range for unknown ones.
  void add_arc(std::string id, std::size_t big, std::size_t small_a, std::size_t small_b);

  const std::vector<Sector>& sectors() const { return sectors_; }
  const std::vector<BranchArc>& arcs() const { return arcs_; }
  std::vector<BranchArc>& mutable_arcs() { return arcs_; }

  /// Throws std::out_of_range for an unknown id.
  std::size_t index_of(const std::string& id) const;

  std::string to_json(int indent = 2) const;
  static BranchComplex from_json(const std::string& text);

 private:
  std::vector<Sector> sectors_;
  std::vector<BranchArc> arcs_;
  std::map<std::string, std::size_t> index_;
};

/// l(j) for j = 1..k|a0| in every annulus: the D-sector (1-based) entering
/// the j-th chain equation. Must be onto {1..k}.
using SlotAssignment = std::function<std::size_t(std::size_t annulus, std::size_t slot)>;

/// Half discs D1..Dk and, per annulus i, discs A{i}S1..A{i}S{k|a0|}.
/// Chain arcs A{i}E{j}: w(A{i}S{j+1}) = w(A{i}S{j}) + w(D_{l(j)}), cyclically.
/// Cross arcs X{i}: w(A{i}S1) = w(A{i-1}S{last}) + w(D_i).
/// Throws std::invalid_argument for a0 = 0 or a non-surjective assignment.
BranchComplex build_parallel_arc_complex(const Monodromy& m, const SlotAssignment& l = {});

/// Half discs D1..Dk and N = Σ|a_i| discs S1..SN in cusp order, with arcs
/// E{l}: w(S{l+1}) = w(S{l}) + w(D_{source(l)}) (reversed along the chain for
/// the second orientation). `source` lists 1-based D indices, one per arc,
/// and must visit every D; by default source(l) = ((l-1) mod k) + 1.
/// Throws std::invalid_argument for a non-coherent orientation.
BranchComplex build_coherent_arc_complex(const Monodromy& m, const OrientationAssignment& o,
                                         std::vector<std::size_t> source = {});

/// Disc sectors away from the boundary, and half discs, that have incident
/// arcs but are never on the small side of one. Ids in sector order.
std::vector<std::string> detect_sink_discs(const BranchComplex& c);

/// Sectors with no incident arc at all.
std::vector<std::string> degenerate_sectors(const BranchComplex& c);

struct WeightSystem {
  std::vector<std::int64_t> weights;  // indexed like the complex's sectors

  std::map<std::string, std::int64_t> by_id(const BranchComplex& c) const;
  friend bool operator==(const WeightSystem&, const WeightSystem&) = default;
  friend auto operator<=>(const WeightSystem&, const WeightSystem&) = default;
};

bool satisfies_switch_equations(const BranchComplex& c, const WeightSystem& w);

/// Every nonnegative integer solution with all weights <= bound, sorted.
/// The equations are row-reduced first and only the free sectors are
/// enumerated.
std::vector<WeightSystem> carried_weight_cone(const BranchComplex& c, std::int64_t bound);

/// Whether `cone` is exactly {t·(Δ ≡ 1, D ≡ 0) : t = 0..bound}, with Δ the
/// Disc sectors and D the HalfDisc sectors.
bool is_fundamental_ray(const BranchComplex& c, const std::vector<WeightSystem>& cone, std::int64_t bound);

}  // namespace slope_atlas
