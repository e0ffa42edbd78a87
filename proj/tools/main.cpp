#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"

using namespace slope_atlas::cli;

int main(int argc, char** argv) {
  CLI::App app{"Dehn-surgery slope regions, Whitehead-link verdicts and monodromy foliation data"};
  app.require_subcommand(1);

  auto* classify = app.add_subcommand("classify", "Classify the surgery (s1, s2) on the Whitehead link");
  std::string s1, s2;
  classify->add_option("s1", s1, "first slope, e.g. 7/3, -1, inf")->required();
  classify->add_option("s2", s2, "second slope")->required();
  classify->footer("Put -- before slopes such as -inf that look like flags.");

  auto* monodromy = app.add_subcommand("monodromy", "Labels, intervals, orientations and region of a monodromy");
  std::string mono_text;
  MonodromyOptions mono;
  monodromy->add_option("monodromy", mono_text, "\"a0; a1, ..., ak\"")->required();
  monodromy->add_flag("--json", mono.json, "JSON report");
  monodromy->add_option("--complex", mono.complex, "emit the parallel or coherent branch complex as JSON")
      ->check(CLI::IsMember({"parallel", "coherent"}));

  auto* region = app.add_subcommand("region", "Print a slope region or test membership");
  RegionOptions reg;
  region->add_option("kind", reg.kind, "whitehead-lspace | whitehead-foliation | link | propagate | monodromy")
      ->required();
  region->add_option("args", reg.args, "slopes for propagate, monodromy text for monodromy");
  region->add_option("--b1", reg.b1, "link region parameter b1");
  region->add_option("--b2", reg.b2, "link region parameter b2");
  region->add_option("--contains", reg.contains, "multislope \"(s1, s2, ...)\" to test");
  region->add_flag("--json", reg.json, "JSON output");

  auto* batch = app.add_subcommand("batch", "Classify every row of a CSV file \"id,s1,s2[,label]\"");
  std::string batch_in, batch_out;
  batch->add_option("input", batch_in, "input CSV")->required();
  batch->add_option("--out", batch_out, "output CSV (default: standard output)");

  auto* plot = app.add_subcommand("plot", "Grid of slopes p/q classified, as TSV or SVG");
  std::string bounds;
  bool svg = false;
  std::int64_t resolution = 600;
  plot->add_option("--bounds", bounds, "\"pmin:pmax,qmin:qmax\"")->required();
  plot->add_flag("--svg", svg, "SVG scatter instead of TSV");
  plot->add_option("--resolution", resolution, "SVG canvas side in pixels")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInput;
  }

  if (*classify) return cmd_classify(s1, s2, std::cout, std::cerr);
  if (*monodromy) return cmd_monodromy(mono_text, mono, std::cout, std::cerr);
  if (*region) return cmd_region(reg, std::cout, std::cerr);
  if (*batch) return cmd_batch(batch_in, batch_out, std::cout, std::cerr);
  if (*plot) return cmd_plot(bounds, svg, resolution, std::cout, std::cerr);
  return kExitInput;
}
