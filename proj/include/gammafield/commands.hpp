#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "gammafield/cache.hpp"
#include "gammafield/invariants.hpp"

namespace gammafield {

/// Process exit codes shared by every subcommand.
enum ExitCode : int {
  kExitOk = 0,
  kExitDifferent = 1,
  kExitParse = 2,
  kExitInput = 3,
  kExitNotApplicable = 4,
};

struct CommandOptions {
  bool human = false;
  bool use_cache = true;
  std::optional<std::string> cache_dir;
  bool pairs = false;
  unsigned jobs = 1;
};

struct CommandResult {
  int exit_code = kExitOk;
  std::string out;
  std::string err;
};

/// One corpus line: `label,polynomial` or a bare polynomial.
struct CorpusRecord {
  std::string label;
  std::string poly;
  std::size_t line = 0;
};

/// CSV corpus: optional `label,polynomial` header, `#` comments and blank lines
/// skipped. Everything after the first comma is the polynomial, so coefficient
/// lists need no quoting.
std::vector<CorpusRecord> parse_corpus(const std::string& text);

/// Analysis with cache lookup; `warnings` collects cache problems.
FieldAnalysis analyze_with_cache(const IntPoly& f, const AnalysisCache& cache, std::vector<std::string>& warnings);

/// Parses and validates a field-defining polynomial. Throws ParseError or InputError.
IntPoly parse_field_poly(const std::string& text);

AnalysisCache make_cache(const CommandOptions& opts);

CommandResult cmd_analyze(const std::string& poly_text, const CommandOptions& opts);
CommandResult cmd_compare(const std::string& text_a, const std::string& text_b, const CommandOptions& opts);
CommandResult cmd_scan_text(const std::string& corpus, const CommandOptions& opts);
CommandResult cmd_scan(const std::string& path, const CommandOptions& opts);

}  // namespace gammafield
