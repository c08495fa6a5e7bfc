#include "pk/rules.hpp"

#include "pk/errors.hpp"
#include "pk/expectation.hpp"

#include <random>

namespace pk {

namespace {

using Status = RuleOutcome::Status;

constexpr std::array<RuleId, kRuleCount> kAll = {
    RuleId::Consistency,     RuleId::RealAdditivity,  RuleId::GeneralAdditivity, RuleId::Homogeneity,
    RuleId::Monotonicity,    RuleId::MinMax,          RuleId::CompletenessZero,  RuleId::CompletenessOne,
    RuleId::Subadditivity,   RuleId::BayesChain,      RuleId::BayesChainZeroE,   RuleId::BayesChainZeroP,
    RuleId::BayesChainInfE,  RuleId::BayesCond,       RuleId::BayesCondZeroE,    RuleId::BayesCondInfE,
    RuleId::BayesCondZeroP,  RuleId::BayesPForm,      RuleId::BayesPZeroE,       RuleId::BayesPInfE,
};

constexpr std::array<std::string_view, kRuleCount> kNames = {
    "consistency",     "real_additivity",  "general_additivity", "homogeneity",
    "monotonicity",    "min_max",          "completeness_zero",  "completeness_one",
    "subadditivity",   "bayes_chain",      "bayes_chain_zero_e", "bayes_chain_zero_p",
    "bayes_chain_inf_e", "bayes_cond",     "bayes_cond_zero_e",  "bayes_cond_inf_e",
    "bayes_cond_zero_p", "bayes_p_form",   "bayes_p_zero_e",     "bayes_p_inf_e",
};

RuleOutcome holds() { return {Status::Holds, ""}; }
RuleOutcome unmet(std::string why) { return {Status::PreconditionUnmet, std::move(why)}; }
RuleOutcome violation(std::string what) { return {Status::Violation, std::move(what)}; }

std::string show(const MaybeExt& v) { return v ? v->str() : "undefined"; }

bool is_zero(const MaybeExt& v) { return v && v->is_finite() && v->value().is_zero(); }
bool is_one(const MaybeExt& v) { return v && *v == ExtReal(1); }
bool is_infinite(const MaybeExt& v) { return v && v->is_infinite(); }

// E(X|C) as a value, or nullopt when C == 0 or the expectation is undefined.
MaybeExt ex(const Preorder& p, const RandomQuantity& x, const Event& c) {
    if (c.is_zero()) {
        return std::nullopt;
    }
    auto r = conditional_expectation(p, x, c);
    if (!r.defined) {
        return std::nullopt;
    }
    return r.value;
}

MaybeExt pr(const Preorder& p, const Event& a, const Event& c) {
    return ex(p, a.quantity(), c);
}

// Concludes "lhs == rhs" where lhs must exist.
RuleOutcome expect_equal(const std::string& lhs_name, const MaybeExt& lhs, const MaybeExt& rhs) {
    if (lhs && rhs && *lhs == *rhs) {
        return holds();
    }
    return violation(lhs_name + " = " + show(lhs) + ", expected " + show(rhs));
}

std::vector<Rational> p_candidates(const RuleArgs& a, bool positive_only) {
    std::vector<Rational> base;
    if (a.p) {
        base.push_back(*a.p);
    }
    for (long k : {1L, 2L, 4L}) {
        base.emplace_back(k);
    }
    base.emplace_back(1, 2);
    Rational top(0);
    std::optional<Rational> smallest;
    for (const auto& v : a.x.components()) {
        top = max(top, abs(v));
        if (!v.is_zero() && (!smallest || abs(v) < *smallest)) {
            smallest = abs(v);
        }
    }
    base.push_back(top + Rational(1));
    base.push_back(Rational(1) / (top + Rational(1)));
    if (smallest) {
        base.push_back(Rational(1) / *smallest);
    }
    std::vector<Rational> out;
    auto push = [&](const Rational& v) {
        if (positive_only && v.sign() <= 0) {
            return;
        }
        for (const auto& o : out) {
            if (o == v) {
                return;
            }
        }
        out.push_back(v);
    };
    for (const auto& v : base) {
        push(v);
    }
    for (const auto& v : base) {
        push(-v);
    }
    return out;
}

// -p <~_G V <~_G p
bool bounded_by(const Preorder& p, const Event& g, const RandomQuantity& v, const Rational& bound) {
    const Preorder pg = p.conditional(g);
    const std::size_t n = p.dim();
    return pg.nonstrict(embed_scalar(-bound, n), v) && pg.nonstrict(v, embed_scalar(bound, n));
}

std::optional<Rational> find_bound(const Preorder& p, const Event& g, const RandomQuantity& v, const RuleArgs& a) {
    for (const auto& c : p_candidates(a, false)) {
        if (bounded_by(p, g, v, c)) {
            return c;
        }
    }
    return std::nullopt;
}

// positive p with p <~_D C
std::optional<Rational> find_lower_event_bound(const Preorder& p, const RuleArgs& a) {
    const Preorder pd = p.conditional(a.d);
    for (const auto& c : p_candidates(a, true)) {
        if (pd.nonstrict(embed_scalar(c, p.dim()), a.c.quantity())) {
            return c;
        }
    }
    return std::nullopt;
}

RuleOutcome check_subadditivity_rule(const Preorder& p, const RuleArgs& a) {
    if (a.events.empty()) {
        return unmet("no events given");
    }
    MaybeExt sum = ExtReal(0);
    for (const auto& e : a.events) {
        const MaybeExt pe = pr(p, e, a.d);
        if (!pe) {
            return unmet("P(A_i|D) does not exist");
        }
        sum = ext_add(sum, pe);
    }
    const MaybeExt lhs = pr(p, disjunction(a.events, p.dim()), a.d);
    if (!lhs) {
        return unmet("P(OR A_i|D) does not exist");
    }
    if (!sum) {
        return unmet("sum of P(A_i|D) is undefined");
    }
    if (*lhs <= *sum) {
        return holds();
    }
    return violation("P(OR A_i|D) = " + lhs->str() + " > sum " + sum->str());
}

} // namespace

RuleArgs::RuleArgs(std::size_t n)
    : x(n), y(n), b(Event::one(n)), c(Event::one(n)), d(Event::one(n)), r(0) {}

const std::array<RuleId, kRuleCount>& all_rules() { return kAll; }

std::string_view rule_name(RuleId id) {
    return kNames.at(static_cast<std::size_t>(id));
}

RuleId rule_from_name(std::string_view name) {
    for (std::size_t i = 0; i < kRuleCount; ++i) {
        if (kNames[i] == name) {
            return kAll[i];
        }
    }
    throw InputError("unknown rule: " + std::string(name));
}

const char* to_string(RuleOutcome::Status s) {
    switch (s) {
    case Status::Holds: return "holds";
    case Status::PreconditionUnmet: return "precondition_unmet";
    case Status::Violation: return "violation";
    }
    return "?";
}

RuleOutcome verify_rule(const Preorder& p, RuleId rule, const RuleArgs& a) {
    const std::size_t n = p.dim();
    if (a.x.dim() != n || a.y.dim() != n || a.b.dim() != n || a.c.dim() != n || a.d.dim() != n) {
        throw InputError("rule arguments do not match preorder dimension");
    }
    const Event cd = a.c & a.d;
    const RandomQuantity xc = a.x * a.c;

    switch (rule) {
    case RuleId::Consistency: {
        const MaybeExt lhs = ex(p, a.x, a.c);
        const MaybeExt rhs = ex(p, xc, a.c);
        if (!lhs && !rhs) {
            return unmet("neither E(X|C) nor E(X.C|C) exists");
        }
        return expect_equal("E(X|C)", lhs, rhs);
    }
    case RuleId::RealAdditivity: {
        const MaybeExt e = ex(p, a.x, a.c);
        if (!e) {
            return unmet("E(X|C) does not exist");
        }
        return expect_equal("E(X+r|C)", ex(p, a.x + a.r, a.c), ext_add(*e, ExtReal(a.r)));
    }
    case RuleId::GeneralAdditivity: {
        const MaybeExt rhs = ext_add(ex(p, a.x, a.c), ex(p, a.y, a.c));
        if (!rhs) {
            return unmet("E(X|C)+E(Y|C) does not make sense");
        }
        return expect_equal("E(X+Y|C)", ex(p, a.x + a.y, a.c), rhs);
    }
    case RuleId::Homogeneity: {
        const MaybeExt rhs = ext_mul(MaybeExt(ExtReal(a.r)), ex(p, a.x, a.c));
        if (!rhs) {
            return unmet("rE(X|C) does not make sense");
        }
        return expect_equal("E(rX|C)", ex(p, a.r * a.x, a.c), rhs);
    }
    case RuleId::Monotonicity: {
        if (!a.b.leq(a.c)) {
            return unmet("B <= C fails");
        }
        const MaybeExt pb = pr(p, a.b, a.d);
        const MaybeExt pc = pr(p, a.c, a.d);
        if (!pb || !pc) {
            return unmet("P(B|D) or P(C|D) does not exist");
        }
        if (*pb <= *pc) {
            return holds();
        }
        return violation("P(B|D) = " + pb->str() + " > P(C|D) = " + pc->str());
    }
    case RuleId::MinMax: {
        const MaybeExt pc = pr(p, a.c, a.d);
        if (!pc) {
            return unmet("P(C|D) does not exist");
        }
        const MaybeExt p0 = pr(p, Event::zero(n), a.d);
        const MaybeExt pdd = pr(p, a.d, a.d);
        const MaybeExt p1 = pr(p, Event::one(n), a.d);
        if (!is_zero(p0) || !is_one(pdd) || !is_one(p1) || *pc < ExtReal(0) || *pc > ExtReal(1)) {
            return violation("P(0|D) = " + show(p0) + ", P(C|D) = " + pc->str() + ", P(D|D) = " + show(pdd) +
                             ", P(1|D) = " + show(p1));
        }
        return holds();
    }
    case RuleId::CompletenessZero: {
        if (!a.c.leq(a.b)) {
            return unmet("C <= B fails");
        }
        if (!is_zero(pr(p, a.b, a.d))) {
            return unmet("P(B|D) is not 0");
        }
        return expect_equal("P(C|D)", pr(p, a.c, a.d), ExtReal(0));
    }
    case RuleId::CompletenessOne: {
        if (!a.b.leq(a.c)) {
            return unmet("B <= C fails");
        }
        if (!is_one(pr(p, a.b, a.d))) {
            return unmet("P(B|D) is not 1");
        }
        return expect_equal("P(C|D)", pr(p, a.c, a.d), ExtReal(1));
    }
    case RuleId::Subadditivity:
        return check_subadditivity_rule(p, a);
    case RuleId::BayesChain: {
        const MaybeExt rhs = ext_mul(ex(p, a.x, cd), pr(p, a.c, a.d));
        if (!rhs) {
            return unmet("E(X|C.D).P(C|D) does not make sense");
        }
        return expect_equal("E(X.C|D)", ex(p, xc, a.d), rhs);
    }
    case RuleId::BayesChainZeroE: {
        if (!is_zero(ex(p, a.x, cd))) {
            return unmet("E(X|C.D) is not 0");
        }
        return expect_equal("E(X.C|D)", ex(p, xc, a.d), ExtReal(0));
    }
    case RuleId::BayesChainZeroP: {
        if (!is_zero(pr(p, a.c, a.d))) {
            return unmet("P(C|D) is not 0");
        }
        if (!find_bound(p, cd, a.x, a)) {
            return unmet("no p with -p <~_{C.D} X <~_{C.D} p found");
        }
        return expect_equal("E(X.C|D)", ex(p, xc, a.d), ExtReal(0));
    }
    case RuleId::BayesChainInfE: {
        const MaybeExt e = ex(p, a.x, cd);
        if (!is_infinite(e)) {
            return unmet("E(X|C.D) is not infinite");
        }
        if (!find_lower_event_bound(p, a)) {
            return unmet("no positive p with p <~_D C found");
        }
        return expect_equal("E(X.C|D)", ex(p, xc, a.d), e);
    }
    case RuleId::BayesCond: {
        const MaybeExt rhs = ext_div(ex(p, xc, a.d), pr(p, a.c, a.d));
        if (!rhs) {
            return unmet("E(X.C|D)/P(C|D) does not make sense");
        }
        return expect_equal("E(X|C.D)", ex(p, a.x, cd), rhs);
    }
    case RuleId::BayesCondZeroE: {
        if (!is_zero(ex(p, xc, a.d))) {
            return unmet("E(X.C|D) is not 0");
        }
        if (!find_lower_event_bound(p, a)) {
            return unmet("no positive p with p <~_D C found");
        }
        return expect_equal("E(X|C.D)", ex(p, a.x, cd), ExtReal(0));
    }
    case RuleId::BayesCondInfE: {
        const MaybeExt e = ex(p, xc, a.d);
        if (!is_infinite(e)) {
            return unmet("E(X.C|D) is not infinite");
        }
        return expect_equal("E(X|C.D)", ex(p, a.x, cd), e);
    }
    case RuleId::BayesCondZeroP: {
        if (!is_zero(pr(p, a.c, a.d))) {
            return unmet("P(C|D) is not 0");
        }
        const Preorder pd = p.conditional(a.d);
        const RandomQuantity one = embed_scalar(Rational(1), n);
        bool any = false;
        for (const auto& cand : p_candidates(a, false)) {
            if (!pd.nonstrict(one, cand * xc)) {
                continue;
            }
            any = true;
            auto out = expect_equal("E(X|C.D)", ex(p, a.x, cd), ext_div(ExtReal::plus_inf(), ExtReal(cand)));
            if (!out.holds()) {
                out.detail += " (p = " + cand.str() + ")";
                return out;
            }
        }
        return any ? holds() : unmet("no p with 1 <~_D pX.C found");
    }
    case RuleId::BayesPForm: {
        const MaybeExt rhs = ext_div(ex(p, xc, a.d), ex(p, a.x, cd));
        if (!rhs) {
            return unmet("E(X.C|D)/E(X|C.D) does not make sense");
        }
        return expect_equal("P(C|D)", pr(p, a.c, a.d), rhs);
    }
    case RuleId::BayesPZeroE: {
        if (!is_zero(ex(p, xc, a.d))) {
            return unmet("E(X.C|D) is not 0");
        }
        const Preorder pcd = p.conditional(cd);
        const RandomQuantity one = embed_scalar(Rational(1), n);
        bool found = false;
        for (const auto& cand : p_candidates(a, false)) {
            if (pcd.nonstrict(one, cand * a.x)) {
                found = true;
                break;
            }
        }
        if (!found) {
            return unmet("no p with 1 <~_{C.D} pX found");
        }
        return expect_equal("P(C|D)", pr(p, a.c, a.d), ExtReal(0));
    }
    case RuleId::BayesPInfE: {
        if (!is_infinite(ex(p, a.x, cd))) {
            return unmet("E(X|C.D) is not infinite");
        }
        if (!find_bound(p, a.d, xc, a)) {
            return unmet("no p with -p <~_D X.C <~_D p found");
        }
        return expect_equal("P(C|D)", pr(p, a.c, a.d), ExtReal(0));
    }
    }
    throw InputError("unknown rule id");
}

namespace {

// rng() % k keeps sampled values identical across standard libraries.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    std::uint64_t below(std::uint64_t k) { return rng_() % k; }

    long integer(long lo, long hi) {
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    Rational rational(long bound) {
        const long num = integer(-bound, bound);
        const long den = below(4) == 0 ? integer(2, 3) : 1;
        return Rational(num, den);
    }

    RandomQuantity quantity(std::size_t n) {
        std::vector<Rational> v;
        v.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            v.push_back(rational(5));
        }
        return RandomQuantity(std::move(v));
    }

    Event event(std::size_t n) {
        std::vector<bool> m(n);
        for (std::size_t i = 0; i < n; ++i) {
            m[i] = below(2) == 1;
        }
        return Event(std::move(m));
    }

    Event nonzero_event(std::size_t n) {
        for (;;) {
            Event e = event(n);
            if (!e.is_zero()) {
                return e;
            }
        }
    }

private:
    std::mt19937_64 rng_;
};

RuleArgs sample_args(Sampler& s, std::size_t n) {
    RuleArgs a(n);
    a.x = s.quantity(n);
    a.y = s.quantity(n);
    // Occasionally make X an event or constant to reach probability-shaped hypotheses.
    switch (s.below(5)) {
    case 0: a.x = s.event(n).quantity(); break;
    case 1: a.x = embed_scalar(s.rational(3), n); break;
    default: break;
    }
    a.b = s.event(n);
    a.c = s.event(n);
    a.d = s.nonzero_event(n);
    a.r = s.below(4) == 0 ? Rational(0) : s.rational(3);
    const std::size_t k = 1 + s.below(4);
    for (std::size_t i = 0; i < k; ++i) {
        a.events.push_back(s.event(n));
    }
    return a;
}

} // namespace

FuzzReport fuzz_rules(const Preorder& p, std::size_t trials, std::uint64_t seed) {
    if (trials == 0) {
        throw InputError("trials must be at least 1");
    }
    FuzzReport report;
    report.trials = trials;
    report.seed = seed;
    Sampler sampler(seed);
    for (std::size_t t = 0; t < trials; ++t) {
        const RuleArgs base = sample_args(sampler, p.dim());
        for (std::size_t i = 0; i < kRuleCount; ++i) {
            RuleArgs a = base;
            switch (kAll[i]) {
            case RuleId::Monotonicity:
            case RuleId::CompletenessOne: a.c = a.b | a.c; break;
            case RuleId::CompletenessZero: a.c = a.b & a.c; break;
            default: break;
            }
            const RuleOutcome out = verify_rule(p, kAll[i], a);
            auto& tally = report.per_rule[i];
            switch (out.status) {
            case Status::Holds: ++tally.holds; break;
            case Status::PreconditionUnmet: ++tally.unmet; break;
            case Status::Violation:
                ++tally.violations;
                report.violations.push_back(std::string(kNames[i]) + ": " + out.detail);
                break;
            }
        }
    }
    return report;
}

} // namespace pk
