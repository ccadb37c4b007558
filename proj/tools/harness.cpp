#include "harness.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <map>
#include <mutex>
#include <thread>

#include "fermat/frey.hpp"
#include "fermat/ideal.hpp"
#include "fermat/ring.hpp"

namespace fermat::harness {

namespace {

json big(const Integer& n) { return to_string(n); }

// Runs f(lo..hi) on a small worker pool; results come back in index order.
template <class F>
auto shard_map(long lo, long hi, F f) -> std::vector<decltype(f(lo))> {
  using Result = decltype(f(lo));
  const long count = hi < lo ? 0 : hi - lo + 1;
  std::vector<Result> out(static_cast<std::size_t>(count));
  const unsigned workers = std::clamp(std::thread::hardware_concurrency(), 1u, 16u);
  std::atomic<long> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (long i; (i = next++) < count;) {
        try {
          out[static_cast<std::size_t>(i)] = f(lo + i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return out;
}

void require_p(unsigned r, unsigned p) {
  if (p < 5 || !is_prime(static_cast<std::uint64_t>(p))) throw InvalidInput("p must be a prime >= 5");
  if (p == r) throw InvalidInput("p must differ from r");
}

Ring require_ring(unsigned r) { return RingContext::build(r); }

Integer require_pair(unsigned r, const Integer& x, const Integer& y) {
  if (x == 0 && y == 0) throw InvalidInput("x and y are both zero");
  if (gcd(x, y) != 1) throw InvalidInput("x and y are not coprime");
  const Integer V = power_sum(r, x, y);
  if (V == 0) throw InvalidInput("x + y = 0 gives x^r + y^r = 0");
  return V;
}

json prime_list(const std::vector<PrimeFactor>& primes) {
  json out = json::array();
  for (const auto& pf : primes) {
    out.push_back({{"prime", pf.prime.to_string()}, {"norm", big(pf.prime.lattice.norm())}, {"exponent", pf.exponent}});
  }
  return out;
}

json valuations_json(const BetaValuations& v) { return {{"A", v.A}, {"B", v.B}, {"C", v.C}}; }

struct CurveSummary {
  json report;
  std::optional<bool> semistable;
};

CurveSummary describe_curve(const FreyCurve& curve, const SolutionContext& ctx, const FactorBudget& budget) {
  CurveSummary out;
  json& c = out.report;
  c["kind"] = to_string(curve.kind);
  c["A"] = curve.A.to_string();
  c["B"] = curve.B.to_string();
  c["C"] = curve.C.to_string();
  c["beta_valuations"] = valuations_json(curve.beta_valuations());
  c["c4_beta_valuation"] = beta_valuation(curve.inv.c4);
  c["disc_beta_valuation"] = beta_valuation(curve.inv.disc);

  json level;
  try {
    const LevelData data = level_data(curve, ctx.D, ctx.p, budget);
    json bad = json::array();
    for (const auto& bp : data.bad_primes) {
      bad.push_back({{"prime", bp.prime.to_string()},
                     {"norm", big(bp.prime.lattice.norm())},
                     {"reduction", to_string(bp.reduction.kind)},
                     {"disc_valuation", bp.reduction.disc_valuation},
                     {"c4_valuation", bp.reduction.c4_valuation},
                     {"in_mp", bp.in_mp}});
    }
    json multiplicative = json::array();
    for (const auto* bp : data.multiplicative_primes()) multiplicative.push_back(bp->prime.to_string());
    json two_adic = json::array();
    for (const auto& range : data.two_adic_ranges) {
      two_adic.push_back({{"prime", range.prime.to_string()}, {"low", range.range.low}, {"high", range.range.high}});
    }
    level["available"] = true;
    level["bad_primes"] = std::move(bad);
    level["multiplicative_primes"] = std::move(multiplicative);
    level["additive_count"] = data.additive_primes.size();
    level["d_radical_norm"] = big(data.d_radical.norm());
    level["d_radical_divides_D"] = d_radical_divides_D(data, ctx.D, budget);
    level["beta_exponent_range"] = {{"low", data.beta_exponent_range.low}, {"high", data.beta_exponent_range.high}};
    level["two_adic_ranges"] = std::move(two_adic);
    out.semistable = data.additive_primes.empty();
  } catch (const DeskScaleExceeded& err) {
    level = {{"available", false}, {"reason", err.what()}};
  }
  c["level"] = std::move(level);
  return out;
}

}  // namespace

unsigned long desk_cap() {
  if (const char* raw = std::getenv(kDeskCapVariable); raw != nullptr && *raw != '\0') {
    char* end = nullptr;
    const unsigned long value = std::strtoul(raw, &end, 10);
    if (end != nullptr && *end == '\0' && value > 0) return value;
    throw InvalidInput(std::string(kDeskCapVariable) + " must be a positive integer");
  }
  return kDefaultDeskCap;
}

json envelope(const std::string& command, json result) {
  return {{"command", command}, {"result", std::move(result)}, {"schema_version", kSchemaVersion}};
}

std::string render(const json& document) { return document.dump(2) + "\n"; }

const std::vector<std::string>& large_p_conclusions() {
  static const std::vector<std::string> list = {
      "irreducibility_of_mod_p_representation",
      "level_lowering",
      "newform_elimination",
      "image_of_inertia_at_beta_forces_contradiction",
  };
  return list;
}

json analyze_context(const SolutionContext& ctx, const FactorBudget& budget) {
  json report;
  report["input"] = {{"r", ctx.r}, {"x", big(ctx.x)}, {"y", big(ctx.y)}, {"p", ctx.p}, {"D", big(ctx.D)},
                     {"z", big(ctx.z)}};
  report["is_trivial"] = ctx.is_trivial;
  if (ctx.is_trivial) {
    report["short_circuit"] = true;
    return report;
  }
  report["short_circuit"] = false;

  const Ring ring = require_ring(ctx.r);
  const FactorProfile profile = build_factors(ring, ctx.x, ctx.y);

  json factors = json::array();
  for (std::size_t j = 0; j < profile.factors.size(); ++j) {
    factors.push_back({{"index", j},
                       {"element", profile.factors[j].to_string()},
                       {"norm", big(norm(profile.factors[j]))},
                       {"beta_valuation", profile.beta_vals[j]}});
  }
  const auto direct = profile.product().as_integer();
  report["profile"] = {{"factors", std::move(factors)},
                       {"e", profile.e},
                       {"x_plus_y_r_valuation", profile.x_plus_y_r_valuation},
                       {"beta_profile_constant", profile.beta_profile_constant()},
                       {"product_identity", direct.has_value() && *direct == power_sum(ctx.r, ctx.x, ctx.y)}};

  const CoprimalityReport coprimality = verify_pairwise_coprimality(profile);
  json pairs = json::array();
  for (const auto& pair : coprimality.pairs) {
    pairs.push_back({{"i", pair.i}, {"j", pair.j}, {"gcd_norm", big(pair.gcd_norm)}});
  }
  report["coprimality"] = {{"pairs", std::move(pairs)}, {"supported_at_beta", coprimality.all_r_powers}};

  std::optional<FactorDecomposition> decomposition;
  json dec;
  try {
    decomposition = decompose_factors(profile, ctx.D, ctx.p, budget);
    json parts = json::array();
    for (const auto& part : decomposition->parts) {
      parts.push_back({{"index", part.index},
                       {"i_part_norm", big(part.i_part.ideal.norm())},
                       {"i_part_primes", prime_list(part.i_part.primes)},
                       {"d_part_norm", big(part.d_part.ideal.norm())},
                       {"d_part_primes", prime_list(part.d_part.primes)},
                       {"ramified_exponent", part.ramified_exponent}});
    }
    const DecompositionCheck check = check_decomposition(profile, *decomposition, ctx.D);
    dec = {{"available", true},
           {"e", decomposition->e},
           {"e0_r", decomposition->e0_r},
           {"e0_beta", decomposition->e0_beta},
           {"parts", std::move(parts)},
           {"check",
            {{"reconstructs", check.reconstructs},
             {"i_parts_coprime", check.i_parts_coprime},
             {"i_parts_prime_to_beta", check.i_parts_prime_to_beta},
             {"d_product_matches", check.d_product_matches}}}};
  } catch (const DeskScaleExceeded& err) {
    dec = {{"available", false}, {"reason", err.what()}};
  }
  report["decomposition"] = std::move(dec);
  report["valuation_balance"] = valuation_balance_check(profile, ctx.p, ctx.z);

  std::vector<FreyCurve> curves{frey_type1(profile)};
  json curves_json;
  {
    CurveSummary t1 = describe_curve(curves[0], ctx, budget);
    const JLambdaReport jl = j_lambda_check(curves[0], profile);
    t1.report["j_lambda"] = {{"invariant_form", jl.invariant_form},
                             {"lambda_form", jl.lambda_form},
                             {"ratio_relation", jl.ratio_relation}};
    curves_json["type1"] = std::move(t1.report);
    std::vector<std::optional<bool>> semistable_flags{t1.semistable};

    json inertia = nullptr;
    if (ctx.r_divides_z) {
      curves.push_back(frey_type2(profile, ctx.p, ctx.z));
      const FreyCurve& c2 = curves.back();
      CurveSummary t2 = describe_curve(c2, ctx, budget);
      const BetaValuations expected = expected_type2_valuations(ctx.r, ctx.p, c2.k);
      const BetaValuations got = c2.beta_valuations();
      t2.report["k"] = c2.k;
      t2.report["expected_beta_valuations"] = valuations_json(expected);
      t2.report["beta_valuations_match"] = got.A == expected.A && got.B == expected.B && got.C == expected.C;
      const JValuation jv = j_beta_valuation(c2, ctx.p, c2.k);
      t2.report["j_beta_valuation"] = {{"computed", jv.computed}, {"predicted", jv.predicted}, {"matches", jv.matches()}};
      inertia = inertia_criterion(jv.computed, ctx.p);
      t2.report["inertia_criterion"] = inertia;
      curves_json["type2"] = std::move(t2.report);
      semistable_flags.push_back(t2.semistable);
    } else {
      curves_json["type2"] = nullptr;
    }
    report["curves"] = std::move(curves_json);

    json semistable = true;
    for (const auto& flag : semistable_flags) {
      if (!flag.has_value()) {
        semistable = nullptr;
        break;
      }
      if (!*flag) semistable = false;
    }

    json p_divides = nullptr;
    if (decomposition) {
      bool ok = true;
      for (const auto& part : decomposition->parts) {
        for (const auto& pf : part.i_part.primes) {
          for (const auto& curve : curves) ok = ok && valuation_at(pf.prime, curve.inv.disc) % ctx.p == 0;
        }
      }
      p_divides = ok;
    }

    report["checklist"] = {
        {"semistable_away_from_2_beta", semistable},
        {"p_divides_disc_at_i_primes", p_divides},
        {"type2_applicable", ctx.r_divides_z},
        {"inertia_criterion_at_beta", inertia},
        {"eichler_shimura_side_condition", eichler_shimura_condition(ctx.r, ctx.p)},
    };
  }
  report["requires_large_p"] = large_p_conclusions();
  return report;
}

json analyze(const AnalyzeRequest& request, const FactorBudget& budget) {
  require_ring(request.r);
  require_p(request.r, request.p);
  const Integer V = require_pair(request.r, request.x, request.y);

  std::vector<SolutionContext> chosen;
  bool enumerated = false;
  if (request.D && request.z) {
    chosen.push_back(SolutionContext::make(request.r, request.x, request.y, request.p, *request.D, *request.z, budget));
  } else if (request.z) {
    const Integer zp = pow(*request.z, request.p);
    if (*request.z == 0 || V % zp != 0) throw InvalidInput("z^p does not divide x^r + y^r");
    chosen.push_back(SolutionContext::make(request.r, request.x, request.y, request.p, V / zp, *request.z, budget));
  } else if (request.D) {
    if (*request.D == 0 || V % *request.D != 0) throw InvalidInput("D does not divide x^r + y^r");
    const auto z = exact_root(V / *request.D, request.p);
    if (!z) throw InvalidInput("(x^r + y^r) / D is not a p-th power");
    chosen.push_back(SolutionContext::make(request.r, request.x, request.y, request.p, *request.D, *z, budget));
  } else {
    enumerated = true;
    for (const auto& candidate : enumerate_contexts(request.r, request.x, request.y, request.p, budget)) {
      if (candidate.valid) {
        chosen.push_back(
            SolutionContext::make(request.r, request.x, request.y, request.p, candidate.D, candidate.z, budget));
      }
    }
    if (chosen.empty()) throw NoValidContext("no (D, z) passes validation for this (r, x, y, p)");
  }

  json analyses = json::array();
  for (const auto& ctx : chosen) analyses.push_back(analyze_context(ctx, budget));
  return {{"analyses", std::move(analyses)}, {"contexts_enumerated", enumerated}};
}

std::vector<ContextCandidate> enumerate_contexts(unsigned r, const Integer& x, const Integer& y, unsigned p,
                                                 const FactorBudget& budget) {
  require_ring(r);
  require_p(r, p);
  const Integer V = require_pair(r, x, y);

  std::vector<Integer> zs{Integer(1)};
  const Integer magnitude = abs(V);
  if (magnitude > 1) {
    for (const auto& pp : factor_integer(magnitude, budget)) {
      const unsigned top = pp.exponent / p;
      if (top == 0) continue;
      std::vector<Integer> grown;
      for (const Integer& z : zs) {
        Integer power = 1;
        for (unsigned a = 0; a <= top; ++a) {
          grown.push_back(z * power);
          power *= pp.prime;
        }
      }
      zs = std::move(grown);
    }
  }
  std::sort(zs.begin(), zs.end());

  std::vector<ContextCandidate> out;
  for (const Integer& z : zs) {
    ContextCandidate candidate{V / pow(z, p), z, false, {}};
    try {
      SolutionContext::make(r, x, y, p, candidate.D, z, budget);
      candidate.valid = true;
    } catch (const InvalidInput& err) {
      candidate.reason = err.what();
    }
    out.push_back(std::move(candidate));
  }
  return out;
}

json contexts(unsigned r, const Integer& x, const Integer& y, unsigned p, const FactorBudget& budget) {
  json list = json::array();
  for (const auto& c : enumerate_contexts(r, x, y, p, budget)) {
    json entry = {{"D", big(c.D)}, {"z", big(c.z)}, {"valid", c.valid}};
    entry["reason"] = c.valid ? json(nullptr) : json(c.reason);
    list.push_back(std::move(entry));
  }
  return {{"input", {{"r", r}, {"x", big(x)}, {"y", big(y)}, {"p", p}}},
          {"V", big(power_sum(r, x, y))},
          {"contexts", std::move(list)}};
}

Fixture fixture_type2(unsigned r, unsigned p, unsigned k, std::uint64_t seed) {
  require_ring(r);
  require_p(r, p);
  if (k == 0) throw InvalidInput("k must be positive");
  const Integer a = Integer(static_cast<unsigned long>(seed)) + 1 + Integer(static_cast<unsigned long>(seed / (r - 1)));
  return {a * pow(Integer(r), p * k - 1) + 1, Integer(-1)};
}

json fixture_type2_report(unsigned r, unsigned p, unsigned k, std::uint64_t seed) {
  const Fixture f = fixture_type2(r, p, k, seed);
  const Integer V = power_sum(r, f.x, f.y);
  return {{"input", {{"r", r}, {"p", p}, {"k", k}, {"seed", seed}}},
          {"x", big(f.x)},
          {"y", big(f.y)},
          {"x_plus_y_r_valuation", valuation(f.x + f.y, Integer(r))},
          {"power_sum_r_valuation", valuation(V, Integer(r))},
          {"z_r_part", big(pow(Integer(r), k))}};
}

std::vector<SearchHit> search(unsigned r, const Integer& D, unsigned p, unsigned long bound) {
  require_ring(r);
  if (p < 2 || !is_prime(static_cast<std::uint64_t>(p))) throw InvalidInput("p must be prime");
  if (D == 0) throw InvalidInput("D must be nonzero");
  const unsigned long cap = desk_cap();
  if (bound > cap) {
    throw InvalidInput("bound " + std::to_string(bound) + " exceeds the desk-scale cap " + std::to_string(cap) +
                       " (override with " + kDeskCapVariable + ")");
  }
  const long b = static_cast<long>(bound);
  auto rows = shard_map(-b, b, [&](long x) {
    std::vector<SearchHit> hits;
    const Integer X(x);
    for (long y = -b; y <= b; ++y) {
      const Integer Y(y);
      if (gcd(X, Y) != 1) continue;
      const Integer V = power_sum(r, X, Y);
      if (V == 0 || V % D != 0) continue;
      const auto z = exact_root(V / D, p);
      if (!z) continue;
      SearchHit hit{X, Y, *z, abs(X * Y * *z) <= 1, false};
      try {
        SolutionContext::make(r, X, Y, p, D, *z);
        hit.context_valid = true;
      } catch (const Error&) {
      }
      hits.push_back(std::move(hit));
    }
    return hits;
  });
  std::vector<SearchHit> out;
  for (auto& row : rows) std::move(row.begin(), row.end(), std::back_inserter(out));
  return out;
}

json search_report(unsigned r, const Integer& D, unsigned p, unsigned long bound) {
  json trivial = json::array(), nontrivial = json::array();
  for (const auto& hit : search(r, D, p, bound)) {
    json entry = {{"x", big(hit.x)}, {"y", big(hit.y)}, {"z", big(hit.z)}, {"context_valid", hit.context_valid}};
    (hit.trivial ? trivial : nontrivial).push_back(std::move(entry));
  }
  return {{"input", {{"r", r}, {"D", big(D)}, {"p", p}, {"bound", bound}}},
          {"trivial", std::move(trivial)},
          {"nontrivial", std::move(nontrivial)}};
}

namespace {

using Properties = std::map<std::string, std::optional<bool>>;

constexpr unsigned kSweepP = 5;

Properties ring_properties(const Ring& ring) {
  Properties props;
  const unsigned d = ring->degree();
  bool diffs = true;
  for (unsigned i = 0; i <= d; ++i) {
    for (unsigned j = i + 1; j <= d; ++j) diffs = diffs && beta_valuation(alpha_element(ring, i) - alpha_element(ring, j)) == 1;
  }
  props["alpha_differences_beta_valuation"] = diffs;
  props["beta_valuation_of_r"] = beta_valuation(RingElement(ring, Integer(ring->r()))) == d;
  return props;
}

Properties case_properties(const Ring& ring, long x, long y) {
  Properties props;
  const Integer X(x), Y(y);
  const FactorProfile profile = build_factors(ring, X, Y);
  const auto direct = profile.product().as_integer();
  props["product_identity"] = direct.has_value() && *direct == power_sum(ring->r(), X, Y);
  const bool r_divides = (x + y) % static_cast<long>(ring->r()) == 0;
  props["beta_profile"] = profile.beta_profile_constant() && profile.e <= 1 && (profile.e == 1) == r_divides;
  props["pairwise_gcd_at_beta"] = verify_pairwise_coprimality(profile).all_r_powers;

  const FreyCurve curve = frey_type1(profile);
  props["frey_relation"] = (curve.A + curve.B + curve.C).is_zero();
  const CurveInvariants generic = legendre_model(curve.A, curve.B).invariants();
  props["invariants_closed_form"] =
      generic.c4 == curve.inv.c4 && generic.c6 == curve.inv.c6 && generic.disc == curve.inv.disc;
  props["invariants_syzygy"] = curve.inv.c4.pow(3) - curve.inv.c6 * curve.inv.c6 == curve.inv.disc * Integer(1728);
  const BetaValuations v = curve.beta_valuations();
  const unsigned t = profile.e + 1;
  props["type1_beta_valuations"] = v.A == t && v.B == t && v.C == t;

  try {
    const LevelData data = level_data(curve, Integer(1), kSweepP);
    props["no_additive_reduction"] = data.additive_primes.empty();
    bool mp = true;
    for (const auto* bp : data.mp_primes()) {
      mp = mp && bp->reduction.disc_valuation % kSweepP == 0 && bp->reduction.c4_valuation == 0;
    }
    for (const auto* bp : data.multiplicative_primes()) mp = mp && bp->reduction.c4_valuation == 0;
    props["multiplicative_primes_consistent"] = mp;
  } catch (const DeskScaleExceeded&) {
    props["no_additive_reduction"] = std::nullopt;
    props["multiplicative_primes_consistent"] = std::nullopt;
  }
  return props;
}

json properties_json(const Properties& props) {
  json out = json::object();
  for (const auto& [name, value] : props) out[name] = value ? json(*value) : json(nullptr);
  return out;
}

}  // namespace

SweepOutcome sweep(const std::vector<unsigned>& r_values, unsigned long bound) {
  const unsigned long cap = desk_cap();
  if (bound > cap) {
    throw InvalidInput("bound " + std::to_string(bound) + " exceeds the desk-scale cap " + std::to_string(cap) +
                       " (override with " + kDeskCapVariable + ")");
  }
  std::vector<unsigned> rs = r_values;
  std::sort(rs.begin(), rs.end());
  rs.erase(std::unique(rs.begin(), rs.end()), rs.end());
  const long b = static_cast<long>(bound);

  SweepOutcome outcome;
  std::map<std::string, std::array<std::size_t, 3>> tally;  // passed, failed, skipped
  auto count = [&](const Properties& props) {
    for (const auto& [name, value] : props) {
      auto& slot = tally[name];
      if (!value) {
        ++slot[2];
      } else if (*value) {
        ++slot[0];
      } else {
        ++slot[1];
        outcome.all_passed = false;
      }
    }
  };

  json rings = json::array();
  json cases = json::array();
  for (unsigned r : rs) {
    const Ring ring = require_ring(r);
    const Properties rp = ring_properties(ring);
    count(rp);
    rings.push_back({{"r", r}, {"properties", properties_json(rp)}});
    auto rows = shard_map(-b, b, [&](long x) {
      std::vector<std::pair<long, Properties>> row;
      for (long y = -b; y <= b; ++y) {
        if (x + y == 0 || std::gcd(x, y) != 1) continue;
        row.emplace_back(y, case_properties(ring, x, y));
      }
      return row;
    });
    for (long i = 0; i < static_cast<long>(rows.size()); ++i) {
      for (const auto& [y, props] : rows[static_cast<std::size_t>(i)]) {
        count(props);
        cases.push_back({{"r", r}, {"x", -b + i}, {"y", y}, {"properties", properties_json(props)}});
      }
    }
  }

  json summary = json::object();
  for (const auto& [name, slot] : tally) {
    summary[name] = {{"passed", slot[0]}, {"failed", slot[1]}, {"skipped", slot[2]}};
  }
  outcome.report = {{"input", {{"r", rs}, {"bound", bound}}},
                    {"rings", std::move(rings)},
                    {"cases", std::move(cases)},
                    {"summary", std::move(summary)},
                    {"all_passed", outcome.all_passed}};
  return outcome;
}

}  // namespace fermat::harness
