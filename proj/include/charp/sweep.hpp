#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "charp/factor.hpp"

namespace charp {

inline constexpr std::string_view kFourLinesExpr = "x*y*(x-y)*(x-t*y)";

struct ProbeRecord {
  std::string prime;
  bool associated = false;
  std::optional<std::string> witness;

  friend bool operator==(const ProbeRecord&, const ProbeRecord&) = default;
};

// One JSONL line of a sweep. Checks that do not apply are nullopt
// (the torsion-witness triple for q < 3, ge_check without a split form).
struct SweepRecord {
  std::uint32_t p = 0;
  unsigned e = 0;
  std::uint64_t q = 0;
  std::string f_expr;
  bool lemma11 = false;
  std::optional<bool> thm12_member_tau_g;
  std::optional<bool> thm12_not_member_g;
  std::optional<bool> thm12_contraction_is_tau;
  std::optional<bool> ge_check;
  std::vector<std::string> divisors;  // non-unit invariant factors
  std::vector<ProbeRecord> probes;
  std::int64_t duration_ms = 0;

  // Key used to skip finished cells when a sweep resumes.
  std::tuple<std::uint32_t, unsigned, std::string> key() const { return {p, e, f_expr}; }
  // True when a check the construction guarantees came out false.
  bool regression() const;

  friend bool operator==(const SweepRecord&, const SweepRecord&) = default;
};

// Compact one-line JSON, no trailing newline.
std::string to_jsonl(const SweepRecord& record);
// Throws std::invalid_argument on malformed input.
SweepRecord parse_record(std::string_view line);

// Evaluates one (p, e, F) cell. Throws ParseError for a bad expression.
SweepRecord evaluate_cell(std::uint32_t p, unsigned e, const std::string& f_expr,
                          std::uint64_t seed = kDefaultFactorSeed);

struct SweepConfig {
  std::vector<std::uint32_t> primes;
  std::vector<unsigned> exponents;
  std::vector<std::string> f_exprs;
  std::filesystem::path out;
  unsigned jobs = 1;
  std::uint64_t seed = kDefaultFactorSeed;
};

struct SweepSummary {
  std::size_t computed = 0;
  std::size_t skipped = 0;
  std::size_t regressions = 0;
};

// Keys of complete records already in a JSONL file; unreadable lines (a
// torn final write, say) are ignored.
std::set<std::tuple<std::uint32_t, unsigned, std::string>> completed_keys(const std::filesystem::path& path);

// Appends one record per missing grid cell to config.out. Cells run on up
// to config.jobs threads; a single writer appends lines in completion order.
SweepSummary run_sweep(const SweepConfig& config);

}  // namespace charp
