#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "hermtri/height.hpp"
#include "hermtri/primary.hpp"

namespace hermtri::cli {

enum class Command { kGen, kValidate, kBuild, kVerify, kMeasure };
enum class ReportFormat { kCsv, kMarkdown, kJson };

/// Exit statuses of run().
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kBadInput = 2;

struct RunConfig {
  Command command = Command::kValidate;
  std::string input;         // family JSON
  std::string result_input;  // result JSON (verify, optional for measure)
  std::string output;        // empty = stdout
  std::uint64_t seed = 0;
  bool seed_set = false;
  GenSpec spec;
  ReportFormat format = ReportFormat::kCsv;
  bool audit = false;
  LeadingTerm convention = LeadingTerm::kInclude;
};

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv into a RunConfig and runs it.
int main_with_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hermtri::cli
