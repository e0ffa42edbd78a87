#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "slope_atlas/branched.hpp"
#include "slope_atlas/lspace.hpp"
#include "slope_atlas/monodromy.hpp"

namespace slope_atlas::cli {

namespace {

std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

// Maps library exceptions onto the exit-code contract.
template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const SlopeError& e) {
    err << "error: " << e.what();
    if (!e.token().empty()) err << " (token '" << e.token() << "')";
    err << '\n';
    return kExitInput;
  } catch (const InternalInconsistency& e) {
    err << "internal inconsistency: " << e.what() << '\n';
    return kExitInternal;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

std::string box_string(const Box& b) {
  std::string s;
  for (std::size_t i = 0; i < b.size(); ++i) s += (i ? " x " : "") + b[i].to_string();
  return s;
}

nlohmann::json box_json(const Box& b) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& a : b) j.push_back(a.to_string());
  return j;
}

nlohmann::json orientation_json(const OrientationAssignment& o) {
  nlohmann::json dirs = nlohmann::json::array();
  for (auto d : o.directions) dirs.push_back(std::string(to_string(d)));
  nlohmann::json types = nlohmann::json::array();
  for (const auto& t : o.n_types) types.push_back(t ? nlohmann::json(std::string(to_string(*t))) : nlohmann::json(nullptr));
  return {{"directions", dirs}, {"n_types", types}};
}

std::string orientation_string(const OrientationAssignment& o) {
  std::string s;
  for (std::size_t i = 0; i < o.directions.size(); ++i) {
    s += (i ? " " : "") + std::string(to_string(o.directions[i]));
  }
  s += " | n types:";
  for (const auto& t : o.n_types) s += " " + (t ? std::string(to_string(*t)) : std::string("-"));
  return s;
}

}  // namespace

int cmd_classify(const std::string& s1, const std::string& s2, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto v = classify(ExtRational::parse(s1), ExtRational::parse(s2));
    out << v.to_json(2) << '\n';
    return kExitOk;
  });
}

int cmd_monodromy(const std::string& text, const MonodromyOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Monodromy m = Monodromy::parse(text);
    if (!opt.complex.empty()) {
      BranchComplex c;
      if (opt.complex == "parallel") {
        c = build_parallel_arc_complex(m);
      } else if (opt.complex == "coherent") {
        c = build_coherent_arc_complex(m, coherent_orientations(m).first);
      } else {
        throw std::invalid_argument("--complex takes 'parallel' or 'coherent', got '" + opt.complex + "'");
      }
      out << c.to_json(2) << '\n';
      return kExitOk;
    }

    const auto lab = labels(m);
    const auto iv = intervals(m);
    const auto [first, second] = coherent_orientations(m);
    const Region region = foliation_region(m);
    if (opt.json) {
      nlohmann::json j;
      j["monodromy"] = m.to_string();
      j["labels"] = nlohmann::json::array();
      for (auto l : lab) j["labels"].push_back(std::string(to_string(l)));
      j["I"] = box_json(iv.i_arcs);
      j["J"] = box_json(iv.j_arcs);
      j["orientations"] = {orientation_json(first), orientation_json(second)};
      j["region"] = nlohmann::json::parse(region_json(region));
      out << j.dump(2) << '\n';
      return kExitOk;
    }
    out << "monodromy: " << m.to_string() << '\n';
    out << "labels:";
    for (auto l : lab) out << ' ' << to_string(l);
    out << '\n';
    out << "I: " << box_string(iv.i_arcs) << '\n';
    out << "J: " << box_string(iv.j_arcs) << '\n';
    out << "orientation 1: " << orientation_string(first) << '\n';
    out << "orientation 2: " << orientation_string(second) << '\n';
    out << "region: " << region.to_string() << '\n';
    return kExitOk;
  });
}

std::string region_json(const Region& r, int indent) {
  nlohmann::json j;
  j["dimension"] = r.dimension();
  j["boxes"] = nlohmann::json::array();
  for (const auto& b : r.boxes()) j["boxes"].push_back(box_json(b));
  j["lines"] = nlohmann::json::array();
  for (const auto& l : r.lines()) {
    nlohmann::json c = nlohmann::json::array();
    for (std::size_t i = 0; i < l.constraint.size(); ++i) {
      if (i == l.pinned) {
        c.push_back("inf");
      } else {
        c.push_back(l.constraint[i].is_full() ? std::string("Q*") : "Q* & " + l.constraint[i].to_string());
      }
    }
    j["lines"].push_back({{"pinned", l.pinned}, {"constraint", c}});
  }
  return j.dump(indent);
}

int cmd_region(const RegionOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() -> int {
    std::optional<Region> region;
    if (opt.kind == "whitehead-lspace") {
      region = wl_lspace_region();
    } else if (opt.kind == "whitehead-foliation") {
      region = wl_foliation_region();
    } else if (opt.kind == "link") {
      region = two_component_region(opt.b1, opt.b2);
    } else if (opt.kind == "propagate") {
      std::vector<ExtRational> r;
      for (const auto& a : opt.args) r.push_back(ExtRational::parse(a));
      region = propagate_region(Multislope(std::move(r)));
    } else if (opt.kind == "monodromy") {
      if (opt.args.size() != 1) throw std::invalid_argument("region monodromy takes one \"a0; a1, ..., ak\" argument");
      region = foliation_region(Monodromy::parse(opt.args[0]));
    } else {
      throw std::invalid_argument("unknown region kind '" + opt.kind + "'");
    }
    if (opt.contains) {
      const bool inside = region->contains(Multislope::parse(*opt.contains));
      out << (inside ? "yes" : "no") << '\n';
      return kExitOk;
    }
    if (opt.json) {
      out << region_json(*region, 2) << '\n';
    } else {
      out << region->to_string() << '\n';
    }
    return kExitOk;
  });
}

BatchRecord parse_batch_row(const std::string& line) {
  const auto fields = split(line, ',');
  if (fields.size() != 3 && fields.size() != 4) {
    throw std::invalid_argument("expected 3 or 4 fields, got " + std::to_string(fields.size()));
  }
  if (fields[0].empty()) throw std::invalid_argument("empty row id");
  BatchRecord r{fields[0], Multislope{ExtRational::parse(fields[1]), ExtRational::parse(fields[2])}, std::nullopt};
  if (fields.size() == 4 && !fields[3].empty()) r.label = fields[3];
  return r;
}

std::string format_batch_row(const BatchRecord& r) {
  std::string s = r.id + "," + r.slopes[0].to_string() + "," + r.slopes[1].to_string();
  if (r.label) s += "," + *r.label;
  return s;
}

std::string format_verdict_row(const BatchRecord& r, const SurgeryVerdict& v) {
  std::ostringstream os;
  os << r.id << ',' << r.slopes[0] << ',' << r.slopes[1] << ',' << (v.is_qhs ? "true" : "false") << ','
     << to_string(v.lspace) << ',' << to_string(v.taut_foliation) << ',' << to_string(v.euler_vanishing) << ','
     << to_string(v.left_orderable) << ',' << r.label.value_or("");
  return os.str();
}

std::string BatchSummary::to_string() const {
  std::ostringstream os;
  os << "rows " << rows << "\nfailed " << failed << "\nnon_qhs " << non_qhs << "\nlspace " << lspace
     << "\nfoliation " << foliation << "\nlo_yes " << lo_yes << "\nlo_no " << lo_no << "\nlo_unknown "
     << lo_unknown << '\n';
  if (labelled > 0) {
    os << "labelled " << labelled << "\nagree " << agree << "\ndisagree " << disagree << "\nundecided "
       << undecided << '\n';
  }
  return os.str();
}

namespace {

std::optional<Orderability> label_orderability(std::string label) {
  std::transform(label.begin(), label.end(), label.begin(), [](unsigned char c) { return std::tolower(c); });
  if (label == "yes" || label == "lo") return Orderability::Yes;
  if (label == "no" || label == "nlo") return Orderability::No;
  return std::nullopt;
}

struct RowResult {
  std::size_t line_no = 0;
  std::optional<BatchRecord> record;
  std::optional<SurgeryVerdict> verdict;
  std::string error;
  bool internal = false;
};

}  // namespace

BatchSummary run_batch(std::istream& in, std::ostream& csv_out, std::ostream& err, unsigned threads) {
  std::vector<RowResult> rows;
  std::vector<std::string> lines;
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    if (!header_seen) {
      header_seen = true;
      const auto h = split(line, ',');
      const bool ok = (h.size() == 3 || h.size() == 4) && h[0] == "id" && h[1] == "s1" && h[2] == "s2" &&
                      (h.size() == 3 || h[3] == "label");
      if (ok) continue;
      err << "line " << line_no << ": expected header \"id,s1,s2[,label]\"\n";
      rows.push_back({line_no, std::nullopt, std::nullopt, "bad header", false});
      continue;
    }
    rows.push_back({line_no, std::nullopt, std::nullopt, {}, false});
    lines.push_back(line);
  }

  // rows that carry data are those with an empty error at this point
  std::vector<std::size_t> work;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].error.empty()) work.push_back(i);
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t w = next++; w < work.size(); w = next++) {
      RowResult& r = rows[work[w]];
      try {
        r.record = parse_batch_row(lines[w]);
        r.verdict = classify(r.record->slopes[0], r.record->slopes[1]);
      } catch (const SlopeError& e) {
        r.error = std::string(e.what()) + (e.token().empty() ? "" : " (token '" + e.token() + "')");
      } catch (const InternalInconsistency& e) {
        r.error = e.what();
        r.internal = true;
      } catch (const std::exception& e) {
        r.error = e.what();
      }
    }
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(work.size(), 1))));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  BatchSummary s;
  csv_out << kBatchOutputHeader << '\n';
  for (const auto& r : rows) {
    if (!r.verdict) {
      if (r.error != "bad header") err << "line " << r.line_no << ": " << r.error << '\n';
      ++s.failed;
      s.internal_error |= r.internal;
      continue;
    }
    ++s.rows;
    const auto& v = *r.verdict;
    csv_out << format_verdict_row(*r.record, v) << '\n';
    if (!v.is_qhs) ++s.non_qhs;
    if (v.lspace == Verdict::Yes) ++s.lspace;
    if (v.taut_foliation == Verdict::Yes) ++s.foliation;
    switch (v.left_orderable) {
      case Orderability::Yes: ++s.lo_yes; break;
      case Orderability::No: ++s.lo_no; break;
      case Orderability::Unknown: ++s.lo_unknown; break;
    }
    if (r.record->label) {
      ++s.labelled;
      const auto expected = label_orderability(*r.record->label);
      if (v.left_orderable == Orderability::Unknown) {
        ++s.undecided;
      } else if (expected && *expected == v.left_orderable) {
        ++s.agree;
      } else {
        ++s.disagree;
      }
    }
  }
  return s;
}

unsigned batch_threads() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("SLOPE_ATLAS_THREADS")) {
    unsigned cap = 0;
    const std::string_view v(env);
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), cap);
    if (ec == std::errc{} && ptr == v.data() + v.size() && cap > 0) n = std::min(n, cap);
  }
  return n;
}

int cmd_batch(const std::string& in_path, const std::string& out_path, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    std::ifstream in(in_path);
    if (!in) throw std::invalid_argument("cannot open " + in_path);
    std::ofstream file;
    std::ostream* csv = &out;
    if (!out_path.empty()) {
      file.open(out_path);
      if (!file) throw std::invalid_argument("cannot write " + out_path);
      csv = &file;
    }
    const BatchSummary s = run_batch(in, *csv, err, batch_threads());
    // summary goes to stderr when the CSV itself is on stdout
    (out_path.empty() ? err : out) << s.to_string();
    if (s.internal_error) return kExitInternal;
    return s.failed > 0 ? kExitInput : kExitOk;
  });
}

PlotBounds parse_bounds(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 2) throw std::invalid_argument("bounds must look like \"pmin:pmax,qmin:qmax\"");
  auto range = [&](const std::string& s, std::int64_t& lo, std::int64_t& hi) {
    const auto ends = split(s, ':');
    if (ends.size() != 2) throw std::invalid_argument("malformed range '" + s + "' in bounds");
    for (int i = 0; i < 2; ++i) {
      std::int64_t& dst = i == 0 ? lo : hi;
      const auto& e = ends[static_cast<std::size_t>(i)];
      const auto [ptr, ec] = std::from_chars(e.data(), e.data() + e.size(), dst);
      if (e.empty() || ec != std::errc{} || ptr != e.data() + e.size()) {
        throw std::invalid_argument("malformed integer '" + e + "' in bounds");
      }
    }
    if (lo > hi) throw std::invalid_argument("degenerate range '" + s + "': start exceeds end");
  };
  PlotBounds b{};
  range(parts[0], b.pmin, b.pmax);
  range(parts[1], b.qmin, b.qmax);
  if (b.qmin == 0 && b.qmax == 0) throw std::invalid_argument("degenerate bounds: q range contains only 0");
  return b;
}

std::vector<ExtRational> plot_grid(const PlotBounds& b) {
  std::set<ExtRational> g;
  for (std::int64_t p = b.pmin; p <= b.pmax; ++p) {
    for (std::int64_t q = b.qmin; q <= b.qmax; ++q) {
      if (q == 0) continue;
      g.insert(ExtRational::normalize(p, q));
    }
  }
  return {g.begin(), g.end()};
}

std::string plot_class(const SurgeryVerdict& v) {
  if (!v.is_qhs) return "non_qhs";
  return v.lspace == Verdict::Yes ? "lspace" : "foliation";
}

void write_plot_tsv(const PlotBounds& b, std::ostream& out) {
  const auto g = plot_grid(b);
  out << "s1\ts2\tclass\n";
  for (const auto& x : g) {
    for (const auto& y : g) out << x << '\t' << y << '\t' << plot_class(classify(x, y)) << '\n';
  }
}

namespace {

// Nonnegative rational rounded to two decimals without floating point.
std::string fixed2(const Rational& v) {
  const BigInt scaled = (numerator(v) * 200 + denominator(v)) / (2 * denominator(v));
  const BigInt whole = scaled / 100;
  const BigInt frac = scaled % 100;
  return whole.str() + "." + (frac < 10 ? "0" : "") + frac.str();
}

}  // namespace

void write_plot_svg(const PlotBounds& b, std::int64_t resolution, std::ostream& out) {
  if (resolution < 100) throw std::invalid_argument("resolution must be at least 100 pixels");
  const auto g = plot_grid(b);
  const Rational lo = g.front().to_rational();
  const Rational hi = g.back().to_rational();
  const std::int64_t margin = 40;
  const Rational span(resolution - 2 * margin);
  auto px = [&](const ExtRational& s) -> Rational {
    if (hi == lo) return Rational(resolution) / 2;
    return margin + (s.to_rational() - lo) / (hi - lo) * span;
  };
  auto py = [&](const ExtRational& s) -> Rational { return Rational(resolution) - px(s); };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << resolution << "\" height=\"" << resolution
      << "\" viewBox=\"0 0 " << resolution << ' ' << resolution << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"4\" y=\"11\" font-size=\"10\" fill=\"red\">L-space</text>\n";
  out << "<text x=\"4\" y=\"23\" font-size=\"10\" fill=\"blue\">taut foliation</text>\n";
  out << "<text x=\"4\" y=\"35\" font-size=\"10\" fill=\"gray\">not a QHS</text>\n";
  for (const auto& x : g) {
    for (const auto& y : g) {
      const std::string cls = plot_class(classify(x, y));
      const char* color = cls == "lspace" ? "red" : cls == "foliation" ? "blue" : "gray";
      out << "<circle cx=\"" << fixed2(px(x)) << "\" cy=\"" << fixed2(py(y)) << "\" r=\"2\" fill=\"" << color
          << "\" data-s1=\"" << x << "\" data-s2=\"" << y << "\"/>\n";
    }
  }
  out << "</svg>\n";
}

int cmd_plot(const std::string& bounds, bool svg, std::int64_t resolution, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const PlotBounds b = parse_bounds(bounds);
    if (svg) {
      write_plot_svg(b, resolution, out);
    } else {
      write_plot_tsv(b, out);
    }
    return kExitOk;
  });
}

}  // namespace slope_atlas::cli
