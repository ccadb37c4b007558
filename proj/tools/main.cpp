#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "harness.hpp"

using namespace fermat;
using namespace fermat::harness;

namespace {

constexpr const char* kExitCodes =
    "Exit codes: 0 success, 1 usage error, 2 invalid mathematical input or desk-scale cap exceeded,\n"
    "            3 sweep property failure, 4 no valid (D, z) context.\n"
    "Environment: FERMAT_DESK_CAP overrides the search/sweep bound cap (default 200).";

int emit(const json& document, const std::string& path) {
  const std::string text = render(document);
  if (path.empty()) {
    std::cout << text;
    return kExitOk;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write " << path << "\n";
    return kExitUsage;
  }
  out << text;
  return kExitOk;
}

std::optional<Integer> maybe_integer(const std::string& text) {
  if (text.empty()) return std::nullopt;
  return parse_integer(text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact arithmetic for x^r + y^r = D z^p over the real cyclotomic ring Z[2cos(2pi/r)]"};
  app.footer(kExitCodes);
  app.require_subcommand(1);

  std::string json_out;
  app.add_option("--json-out", json_out, "Write the JSON report to this path instead of stdout");

  unsigned r = 0, p = 0, k = 1;
  std::string x_text, y_text, D_text, z_text;
  unsigned long bound = 0;
  std::uint64_t seed = 0;
  std::vector<unsigned> r_list;

  auto* analyze_cmd = app.add_subcommand("analyze", "Full report for one (r, x, y, p[, D, z])");
  analyze_cmd->add_option("--r", r)->required();
  analyze_cmd->add_option("--x", x_text)->required();
  analyze_cmd->add_option("--y", y_text)->required();
  analyze_cmd->add_option("--p", p)->required();
  analyze_cmd->add_option("--D", D_text, "Omit D and z to enumerate every valid context");
  analyze_cmd->add_option("--z", z_text);

  auto* contexts_cmd = app.add_subcommand("contexts", "Every (D, z) with D z^p = x^r + y^r");
  contexts_cmd->add_option("--r", r)->required();
  contexts_cmd->add_option("--x", x_text)->required();
  contexts_cmd->add_option("--y", y_text)->required();
  contexts_cmd->add_option("--p", p)->required();

  auto* fixture_cmd = app.add_subcommand("fixture-type2", "Pair (x, -1) with v_r(x + y) = pk - 1");
  fixture_cmd->add_option("--r", r)->required();
  fixture_cmd->add_option("--p", p)->required();
  fixture_cmd->add_option("--k", k)->capture_default_str();
  fixture_cmd->add_option("--seed", seed)->capture_default_str();

  auto* search_cmd = app.add_subcommand("search", "Scan coprime |x|, |y| <= bound for x^r + y^r = D z^p");
  search_cmd->add_option("--r", r)->required();
  search_cmd->add_option("--D", D_text)->required();
  search_cmd->add_option("--p", p)->required();
  search_cmd->add_option("--bound", bound)->required();

  auto* sweep_cmd = app.add_subcommand("sweep", "Property sweep over coprime |x|, |y| <= bound");
  sweep_cmd->add_option("--r", r_list, "Comma-separated list; empty gives an empty report")->delimiter(',');
  sweep_cmd->add_option("--bound", bound)->required();

  for (auto* sub : {analyze_cmd, contexts_cmd, fixture_cmd, search_cmd, sweep_cmd}) {
    sub->add_option("--json-out", json_out, "Write the JSON report to this path instead of stdout");
    sub->footer(kExitCodes);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (analyze_cmd->parsed()) {
      AnalyzeRequest request{r, parse_integer(x_text), parse_integer(y_text), p, maybe_integer(D_text),
                             maybe_integer(z_text)};
      return emit(envelope("analyze", analyze(request)), json_out);
    }
    if (contexts_cmd->parsed()) {
      return emit(envelope("contexts", contexts(r, parse_integer(x_text), parse_integer(y_text), p)), json_out);
    }
    if (fixture_cmd->parsed()) {
      return emit(envelope("fixture-type2", fixture_type2_report(r, p, k, seed)), json_out);
    }
    if (search_cmd->parsed()) {
      return emit(envelope("search", search_report(r, parse_integer(D_text), p, bound)), json_out);
    }
    if (sweep_cmd->parsed()) {
      SweepOutcome outcome = sweep(r_list, bound);
      const int code = emit(envelope("sweep", std::move(outcome.report)), json_out);
      if (code != kExitOk) return code;
      return outcome.all_passed ? kExitOk : kExitPropertyFailure;
    }
  } catch (const NoValidContext& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitNoContext;
  } catch (const InvalidInput& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitInvalidInput;
  } catch (const DeskScaleExceeded& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitInvalidInput;
  }
  return kExitUsage;
}
