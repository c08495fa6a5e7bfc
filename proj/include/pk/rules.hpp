#pragma once

/**
 * @file rules.hpp
 * @brief Executable checks of the conditional-expectation rules.
 *
 * Each rule is evaluated against a concrete preorder: its hypotheses are
 * decided exactly (existence of expectations, partial extended arithmetic,
 * side conditions by explicit preorder queries) and its conclusion is then
 * compared exactly. For a plausible preorder a Violation can never occur.
 */

#include "pk/algebra.hpp"
#include "pk/preorder.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pk {

enum class RuleId {
    Consistency,
    RealAdditivity,
    GeneralAdditivity,
    Homogeneity,
    Monotonicity,
    MinMax,
    CompletenessZero,
    CompletenessOne,
    Subadditivity,
    BayesChain,
    BayesChainZeroE,
    BayesChainZeroP,
    BayesChainInfE,
    BayesCond,
    BayesCondZeroE,
    BayesCondInfE,
    BayesCondZeroP,
    BayesPForm,
    BayesPZeroE,
    BayesPInfE,
};

inline constexpr std::size_t kRuleCount = 20;

const std::array<RuleId, kRuleCount>& all_rules();
std::string_view rule_name(RuleId id);
/// Throws InputError for an unknown name.
RuleId rule_from_name(std::string_view name);

struct RuleArgs {
    RandomQuantity x;
    RandomQuantity y;
    Event b;
    Event c;
    Event d;
    Rational r;
    /// Caller-supplied witness for existential side conditions; tried first.
    std::optional<Rational> p;
    /// A_1..A_k for subadditivity.
    std::vector<Event> events;

    /// All quantities zero, all events 1, r = 0.
    explicit RuleArgs(std::size_t n);
};

struct RuleOutcome {
    enum class Status { Holds, PreconditionUnmet, Violation };
    Status status = Status::Holds;
    std::string detail;

    [[nodiscard]] bool holds() const { return status == Status::Holds; }
    [[nodiscard]] bool violated() const { return status == Status::Violation; }
};

const char* to_string(RuleOutcome::Status s);

RuleOutcome verify_rule(const Preorder& p, RuleId rule, const RuleArgs& args);

struct RuleTally {
    std::size_t holds = 0;
    std::size_t unmet = 0;
    std::size_t violations = 0;
};

struct FuzzReport {
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    std::array<RuleTally, kRuleCount> per_rule{};
    /// "rule: detail" for every violation, in evaluation order.
    std::vector<std::string> violations;

    [[nodiscard]] std::size_t total_violations() const { return violations.size(); }
};

/// Deterministic sweep of every rule over `trials` sampled argument sets.
/// Throws InputError for trials == 0.
FuzzReport fuzz_rules(const Preorder& p, std::size_t trials, std::uint64_t seed);

} // namespace pk
