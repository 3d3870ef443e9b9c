#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hermtri/errors.hpp"
#include "hermtri/interp.hpp"

namespace hermtri::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const RunConfig& config, const std::string& text, std::ostream& out) {
  if (config.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(config.output, std::ios::binary | std::ios::trunc);
  if (!file) throw std::runtime_error("cannot write '" + config.output + "'");
  file << text;
}

std::string degree_text(const std::vector<unsigned>& d) {
  std::string s = "(";
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s + ")";
}

// Loads and validates a family; returns false (after printing) on violations.
bool load_family(const RunConfig& config, PrimaryFamily& fam, std::ostream& err) {
  fam = family_from_json(read_file(config.input));
  const FamilyCheck check = validate_family(fam);
  if (check.ok()) return true;
  for (const auto& v : check.violations) err << "violation: " << v << "\n";
  return false;
}

int run_unchecked(const RunConfig& config, std::ostream& out, std::ostream& err) {
  switch (config.command) {
    case Command::kGen: {
      if (!config.seed_set) {
        err << "gen: --seed is required\n";
        return kBadInput;
      }
      emit(config, family_to_json(gen_family(config.spec, config.seed)), out);
      return kOk;
    }
    case Command::kValidate: {
      const PrimaryFamily fam = family_from_json(read_file(config.input));
      const FamilyCheck check = validate_family(fam);
      if (!check.ok()) {
        for (const auto& v : check.violations) out << "violation: " << v << "\n";
        return kCheckFailed;
      }
      out << "ok: degrees " << degree_text(check.degrees) << "\n";
      return kOk;
    }
    case Command::kBuild: {
      PrimaryFamily fam(1);
      if (!load_family(config, fam, err)) return kCheckFailed;
      emit(config, result_to_json(fam, reconstruct(fam), config.audit), out);
      return kOk;
    }
    case Command::kVerify: {
      PrimaryFamily fam(1);
      if (!load_family(config, fam, err)) return kCheckFailed;
      const ReconstructionResult r = result_from_json(read_file(config.result_input));
      const VerificationReport report = verify_all(fam, r);
      emit(config, report.to_text(), out);
      return report.all_passed() ? kOk : kCheckFailed;
    }
    case Command::kMeasure: {
      PrimaryFamily fam(1);
      if (!load_family(config, fam, err)) return kCheckFailed;
      const ReconstructionResult r =
          config.result_input.empty() ? reconstruct(fam) : result_from_json(read_file(config.result_input));
      const HeightReport report = measure(fam, r, config.convention);
      switch (config.format) {
        case ReportFormat::kCsv: emit(config, report_csv(report), out); break;
        case ReportFormat::kMarkdown: emit(config, report_markdown(report), out); break;
        case ReportFormat::kJson: emit(config, report_json(report), out); break;
      }
      return kOk;
    }
  }
  return kBadInput;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    return run_unchecked(config, out, err);
  } catch (const ParseError& e) {
    err << "malformed input: " << e.what() << "\n";
  } catch (const SpecError& e) {
    err << "bad generator spec: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return kBadInput;
}

int main_with_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reconstruct triangular sets from primary components and measure coefficient growth", "hermtri"};
  app.require_subcommand(1);
  RunConfig config;

  auto* gen = app.add_subcommand("gen", "Generate a random primary family");
  std::vector<unsigned> delta_range{1, 1};
  gen->add_option("--n", config.spec.n, "Number of variables")->required();
  gen->add_option("--fibers", config.spec.fibers, "Fiber degrees d_1,...,d_n")->delimiter(',')->required();
  gen->add_option("--delta", delta_range, "Exponent range min,max")->delimiter(',');
  gen->add_option("--coeff-bits", config.spec.coeff_bits, "Bit bound for ctable numerators/denominators");
  gen->add_option("--point-bits", config.spec.point_bits, "Bit bound for point coordinates");
  gen->add_option("--max-mu", config.spec.max_mu, "Cap on chain multiplicity (0 = none)");
  gen->add_option("--seed", config.seed, "Random seed")->required();
  gen->add_option("-o,--output", config.output, "Output file (default stdout)");

  auto* validate = app.add_subcommand("validate", "Check a family file");
  validate->add_option("family", config.input)->required();

  auto* build = app.add_subcommand("build", "Reconstruct T, N and F");
  build->add_option("family", config.input)->required();
  build->add_option("-o,--output", config.output, "Output file (default stdout)");
  build->add_flag("--audit", config.audit, "Include per-node branch products and idempotents");

  auto* verify = app.add_subcommand("verify", "Check a result against its family");
  verify->add_option("family", config.input)->required();
  verify->add_option("result", config.result_input)->required();
  verify->add_option("-o,--output", config.output, "Report file (default stdout)");

  auto* meas = app.add_subcommand("measure", "Height report");
  std::string format = "csv";
  bool ctable_only = false;
  meas->add_option("family", config.input)->required();
  meas->add_option("result", config.result_input, "Result JSON (reconstructed when omitted)");
  meas->add_option("--format", format)->check(CLI::IsMember({"csv", "markdown", "json"}));
  meas->add_option("-o,--output", config.output, "Output file (default stdout)");
  meas->add_flag("--ctable-only", ctable_only, "Leave the leading term out of component heights");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, e2;
    const int code = app.exit(e, o, e2);
    out << o.str();
    err << e2.str();
    return code == 0 ? kOk : kBadInput;
  }

  if (*gen) {
    config.command = Command::kGen;
    config.seed_set = true;
    if (delta_range.size() == 1) delta_range.push_back(delta_range.front());
    if (delta_range.size() != 2) {
      err << "gen: --delta takes min,max\n";
      return kBadInput;
    }
    config.spec.delta_min = delta_range[0];
    config.spec.delta_max = delta_range[1];
  } else if (*validate) {
    config.command = Command::kValidate;
  } else if (*build) {
    config.command = Command::kBuild;
  } else if (*verify) {
    config.command = Command::kVerify;
  } else {
    config.command = Command::kMeasure;
    config.format = format == "markdown" ? ReportFormat::kMarkdown
                                         : (format == "json" ? ReportFormat::kJson : ReportFormat::kCsv);
    config.convention = ctable_only ? LeadingTerm::kExclude : LeadingTerm::kInclude;
  }
  return run(config, out, err);
}

}  // namespace hermtri::cli
