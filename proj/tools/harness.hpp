#pragma once

// Orchestration behind the fermat command-line tool.  Every entry point
// returns a JSON document; the CLI only parses flags and picks exit codes.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fermat/error.hpp"
#include "fermat/factorization.hpp"
#include "fermat/integer.hpp"

namespace fermat::harness {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;
inline constexpr unsigned long kDefaultDeskCap = 200;
inline constexpr const char* kDeskCapVariable = "FERMAT_DESK_CAP";

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitInvalidInput = 2,
  kExitPropertyFailure = 3,
  kExitNoContext = 4,
};

/// No (D, z) with D z^p = x^r + y^r passes validation.
class NoValidContext : public Error {
 public:
  using Error::Error;
};

/// Bound cap for search and sweep; FERMAT_DESK_CAP overrides the default.
unsigned long desk_cap();

/// {"command", "result", "schema_version"}.
json envelope(const std::string& command, json result);

/// Pretty-printed with sorted keys and a trailing newline.
std::string render(const json& document);

struct AnalyzeRequest {
  unsigned r = 0;
  Integer x, y;
  unsigned p = 0;
  std::optional<Integer> D, z;
};

json analyze(const AnalyzeRequest& request, const FactorBudget& budget = {});
json analyze_context(const SolutionContext& ctx, const FactorBudget& budget = {});

struct ContextCandidate {
  Integer D, z;
  bool valid = false;
  std::string reason;
};

/// Every z >= 1 with z^p | V, smallest z first.  (V, 1) is always present.
std::vector<ContextCandidate> enumerate_contexts(unsigned r, const Integer& x, const Integer& y, unsigned p,
                                                 const FactorBudget& budget = {});
json contexts(unsigned r, const Integer& x, const Integer& y, unsigned p, const FactorBudget& budget = {});

struct Fixture {
  Integer x, y;
};

/// y = -1 and x = a r^(pk-1) + 1 with a the (seed+1)-th positive integer prime to r.
Fixture fixture_type2(unsigned r, unsigned p, unsigned k, std::uint64_t seed);
json fixture_type2_report(unsigned r, unsigned p, unsigned k, std::uint64_t seed);

struct SearchHit {
  Integer x, y, z;
  bool trivial = false;
  bool context_valid = false;
};

std::vector<SearchHit> search(unsigned r, const Integer& D, unsigned p, unsigned long bound);
json search_report(unsigned r, const Integer& D, unsigned p, unsigned long bound);

struct SweepOutcome {
  json report;
  bool all_passed = true;
};

SweepOutcome sweep(const std::vector<unsigned>& r_values, unsigned long bound);

/// Conclusions of the modular argument that hold only for p past an
/// ineffective bound; listed in every analysis.
const std::vector<std::string>& large_p_conclusions();

}  // namespace fermat::harness
