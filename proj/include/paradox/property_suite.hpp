#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "paradox/graph.hpp"

namespace paradox {

/// Test-only fault injected into the suite to prove that it can fail.
enum class Fault { None, FlipSign };

struct PropertyResult {
  std::string name;
  std::size_t checks = 0;
  std::size_t violations = 0;
  std::string first_failure;

  bool ok() const noexcept { return violations == 0; }
};

/// Collects pass/fail counts per named property.
class PropertyLedger {
 public:
  void record(const std::string& property, bool ok, const std::string& detail = {});
  std::vector<PropertyResult> results() const;
  bool ok() const;
  const PropertyResult* find(const std::string& property) const;

 private:
  std::map<std::string, PropertyResult> results_;
};

// Property names recorded by the checks below.
inline constexpr const char* kPropOracle = "oracle_equivalence";
inline constexpr const char* kPropOracleExact = "oracle_exact";
inline constexpr const char* kPropReformulations = "reformulation_equivalence";
inline constexpr const char* kPropNonNegative = "non_negativity";
inline constexpr const char* kPropStrictlyPositive = "strict_positivity";
inline constexpr const char* kPropSignRule = "sign_rules";
inline constexpr const char* kPropUndefinedZero = "undefined_correlation_zero_gap";
inline constexpr const char* kPropGammaSum = "gamma_sum_equals_n";
inline constexpr const char* kPropDeltaSum = "delta_sum_equals_n";
inline constexpr const char* kPropShift = "shift_invariance";
inline constexpr const char* kPropNegation = "negation_flips_sign";
inline constexpr const char* kPropAlwaysPositive = "always_positive_correlations";

/// Non-negativity of LFP/SFP/LWFP/SWFP on g; with `accepted` (connected,
/// non-regular, non-weighted-regular) also strict positivity.
void check_non_negativity(const Graph& g, bool accepted, PropertyLedger& ledger, Fault fault = Fault::None);

/// Sign rules for the four attribute gaps under `attributes`.
void check_sign_rules(const Graph& g, std::span<const double> attributes, PropertyLedger& ledger,
                      Fault fault = Fault::None);

/// Constant attribute: every sign correlation undefined and every attribute
/// gap within 1e-9 of zero.
void check_constant_attribute(const Graph& g, double value, PropertyLedger& ledger);

/// Sum of gamma and of delta equal n within 1e-9 n; r_{delta,d} and
/// r_{gamma,w} positive when defined.
void check_identities(const Graph& g, PropertyLedger& ledger);

/// Shift invariance and negation of the attribute gaps.
void check_attribute_transforms(const Graph& g, std::span<const double> attributes, PropertyLedger& ledger);

/// Closed forms against list-semantics oracles and algebraic reformulations;
/// with `exact` also against the rational oracle (integer weights, n <= 100).
void check_oracles(const Graph& g, std::span<const double> attributes, bool exact, PropertyLedger& ledger,
                   Fault fault = Fault::None);

/// |x - y| <= rel * max(|x|, |y|, scale).
bool close_relative(double x, double y, double rel, double scale);

struct VerifyOptions {
  std::size_t graphs = 200;
  std::size_t max_n = 30;
  std::uint64_t seed = 1;
  Fault fault = Fault::None;
};

/// Random small graphs (integer weights 1..10) run through every check.
std::vector<PropertyResult> run_property_suite(const VerifyOptions& options);

struct CorpusSpec {
  std::size_t count = 500;
  std::size_t n_min = 10;
  std::size_t n_max = 300;
  double p_min = 0.02;
  double p_max = 0.3;
  int max_weight = 10;
  std::uint64_t seed = 7;
};

/// `count` accepted G(n,p) graphs with (n, p) drawn uniformly per attempt.
std::vector<Graph> accepted_gnp_corpus(const CorpusSpec& spec);

}  // namespace paradox
