#pragma once

// Subcommand bodies of the slope-atlas tool. Each returns the process exit
// code: 0 success, 2 input error, 3 internal inconsistency.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "slope_atlas/rational_slopes.hpp"
#include "slope_atlas/whitehead.hpp"

namespace slope_atlas::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitInternal = 3;

int cmd_classify(const std::string& s1, const std::string& s2, std::ostream& out, std::ostream& err);

struct MonodromyOptions {
  bool json = false;
  std::string complex;  // "", "parallel" or "coherent"
};
int cmd_monodromy(const std::string& text, const MonodromyOptions& opt, std::ostream& out, std::ostream& err);

struct RegionOptions {
  std::string kind;  // whitehead-lspace | whitehead-foliation | link | propagate | monodromy
  std::vector<std::string> args;
  std::int64_t b1 = 0;
  std::int64_t b2 = 0;
  std::optional<std::string> contains;
  bool json = false;
};
int cmd_region(const RegionOptions& opt, std::ostream& out, std::ostream& err);

std::string region_json(const Region& r, int indent = -1);

// ---- batch

struct BatchRecord {
  std::string id;
  Multislope slopes;
  std::optional<std::string> label;

  friend bool operator==(const BatchRecord&, const BatchRecord&) = default;
};

/// Splits "id,s1,s2[,label]"; surrounding blanks are trimmed. Throws
/// SlopeError or std::invalid_argument.
BatchRecord parse_batch_row(const std::string& line);
/// Canonical input-format row.
std::string format_batch_row(const BatchRecord& r);

inline constexpr const char* kBatchOutputHeader = "id,s1,s2,qhs,lspace,foliation,euler_zero,left_orderable,label";
std::string format_verdict_row(const BatchRecord& r, const SurgeryVerdict& v);

struct BatchSummary {
  std::size_t rows = 0;
  std::size_t failed = 0;
  std::size_t non_qhs = 0;
  std::size_t lspace = 0;
  std::size_t foliation = 0;
  std::size_t lo_yes = 0;
  std::size_t lo_no = 0;
  std::size_t lo_unknown = 0;
  std::size_t labelled = 0;
  std::size_t agree = 0;
  std::size_t disagree = 0;
  std::size_t undecided = 0;  // labelled rows whose verdict is unknown
  bool internal_error = false;

  std::string to_string() const;
};

/// Labels "yes"/"lo" and "no"/"nlo" are compared with left_orderable.
BatchSummary run_batch(std::istream& in, std::ostream& csv_out, std::ostream& err, unsigned threads);

/// Worker count from SLOPE_ATLAS_THREADS, capped by the hardware.
unsigned batch_threads();

int cmd_batch(const std::string& in_path, const std::string& out_path, std::ostream& out, std::ostream& err);

// ---- plot

struct PlotBounds {
  std::int64_t pmin, pmax, qmin, qmax;
};

/// "pmin:pmax,qmin:qmax". Throws std::invalid_argument for malformed or
/// degenerate bounds.
PlotBounds parse_bounds(const std::string& text);

/// Distinct slopes p/q in the bounds with q != 0, ascending.
std::vector<ExtRational> plot_grid(const PlotBounds& b);

/// "lspace", "foliation" or "non_qhs".
std::string plot_class(const SurgeryVerdict& v);

void write_plot_tsv(const PlotBounds& b, std::ostream& out);
void write_plot_svg(const PlotBounds& b, std::int64_t resolution, std::ostream& out);

int cmd_plot(const std::string& bounds, bool svg, std::int64_t resolution, std::ostream& out, std::ostream& err);

}  // namespace slope_atlas::cli
