#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <coxtoric/coxtoric.hpp>

namespace {

constexpr const char* kFixturePrefix = "fixture:";

struct NamedFan {
  std::string label;
  coxtoric::Fan fan;
};

NamedFan load_input(const std::string& input) {
  if (input.rfind(kFixturePrefix, 0) == 0) {
    std::string name = input.substr(std::string(kFixturePrefix).size());
    return NamedFan{name, coxtoric::fixtures::fixture_fan(name)};
  }
  std::filesystem::path path(input);
  return NamedFan{path.filename().string(), coxtoric::parse_fan_file(path)};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact-arithmetic toolkit for Cox rings of toric varieties"};
  app.require_subcommand(1);
  bool tsv = false;
  app.add_flag("--tsv", tsv, "emit tab-separated values");

  std::string analyze_input;
  CLI::App* analyze = app.add_subcommand("analyze", "validate a fan and report its invariants");
  analyze->fallthrough();
  analyze->add_option("input", analyze_input, "fan file path or fixture:NAME")->required();

  std::string dual_input;
  CLI::App* dual = app.add_subcommand("dual", "dual variety of a Fano fan");
  dual->fallthrough();
  dual->add_option("input", dual_input, "fan file path or fixture:NAME")->required();

  std::string scan_dir;
  CLI::App* scan = app.add_subcommand("scan", "list fan files with irrelevant codim >= 3");
  scan->fallthrough();
  scan->add_option("directory", scan_dir, "directory of fan files")->required();

  int bm_n = 0, bm_d = 0;
  CLI::App* blowup = app.add_subcommand("blowup-model", "section-4 blowup and Z1 gradings");
  blowup->fallthrough();
  blowup->add_option("--n", bm_n, "ambient projective dimension (>= 3)")->required();
  blowup->add_option("--d", bm_d, "hypersurface degree (>= 3)")->required();

  std::string h_model;
  int h_n = 3, h_d = 0;
  std::vector<long long> h_deg;
  bool h_oracle = false;
  std::uint64_t h_seed = coxtoric::kDefaultCoeffSeed;
  CLI::App* hilbert = app.add_subcommand("hilbert", "graded dimension of a model Cox ring");
  hilbert->fallthrough();
  hilbert->add_option("--model", h_model, "cox3 or cox4")
      ->required()
      ->check(CLI::IsMember({"cox3", "cox4"}));
  hilbert->add_option("--n", h_n, "ambient projective dimension (default 3)");
  hilbert->add_option("--d", h_d, "hypersurface degree (>= 3)")->required();
  hilbert->add_option("--deg", h_deg, "degree (a, b) of the graded piece")
      ->required()
      ->expected(2);
  hilbert->add_flag("--oracle", h_oracle, "also print the linear-algebra count");
  hilbert->add_option("--seed", h_seed, "coefficient seed");

  std::string export_dir;
  CLI::App* exportf = app.add_subcommand("export-fixtures", "write all fixture fans as files");
  exportf->fallthrough();
  exportf->add_option("directory", export_dir, "output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*analyze) {
      NamedFan in = load_input(analyze_input);
      std::cout << coxtoric::cmd_analyze(in.fan, in.label, tsv);
    } else if (*dual) {
      NamedFan in = load_input(dual_input);
      std::cout << coxtoric::cmd_dual(in.fan, in.label, tsv);
    } else if (*scan) {
      coxtoric::ScanOutcome out = coxtoric::cmd_scan(scan_dir, tsv);
      for (const std::string& err : out.errors) std::cerr << err << "\n";
      std::cout << out.report;
    } else if (*blowup) {
      std::cout << coxtoric::cmd_blowup_model(bm_n, bm_d, tsv);
    } else if (*hilbert) {
      std::cout << coxtoric::cmd_hilbert(h_model, h_n, h_d, h_deg[0], h_deg[1], h_oracle,
                                         h_seed, tsv);
    } else if (*exportf) {
      std::filesystem::create_directories(export_dir);
      for (const std::string& name : coxtoric::fixtures::fixture_names()) {
        std::filesystem::path path = std::filesystem::path(export_dir) / (name + ".fan");
        coxtoric::write_fan_file(path, coxtoric::fixtures::fixture_fan(name));
        std::cout << path.string() << "\n";
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
