// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.

#include "pk/axioms.hpp"
#include "pk/coherence.hpp"
#include "pk/expectation.hpp"
#include "pk/ext_real.hpp"
#include "pk/margin_lp.hpp"
#include "pk/oracle.hpp"
#include "pk/rules.hpp"
#include "support/gen.hpp"
#include "support/tables.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace pk;

namespace {

struct Outcome {
    bool pass = true;
    std::string note;
};

class Check {
public:
    void expect(bool ok, const std::string& what) {
        if (!ok) {
            ++failures_;
            if (first_.empty()) {
                first_ = what;
            }
        }
    }
    void within(double seconds, double limit) {
        expect(seconds < limit, "runtime " + std::to_string(seconds) + " s exceeds " + std::to_string(limit) + " s");
    }
    [[nodiscard]] Outcome done(const std::string& summary) const {
        if (failures_ == 0) {
            return {true, summary};
        }
        return {false, std::to_string(failures_) + " failure(s), first: " + first_};
    }

private:
    int failures_ = 0;
    std::string first_;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

ExpectationResult defined(const Rational& v) { return ExpectationResult::make_defined(ExtReal(v)); }

RandomQuantity q2(long a, long b) { return RandomQuantity{Rational(a), Rational(b)}; }

// 1. Coin example.
Outcome coin_reproduction() {
    Check ck;
    const auto t0 = std::chrono::steady_clock::now();
    const std::vector<QuantityPair> pairs = {{q2(-1, 1), q2(1, -1)}, {q2(1, -1), q2(-1, 1)}};
    const Preorder p = cone_from_relation(pairs, 2);
    const Event h{1, 0};
    const Event t{0, 1};
    ck.expect(probability(p, h, Event::one(2)) == defined(Rational(1, 2)), "E(H) != 1/2");
    ck.expect(probability(p, t, Event::one(2)) == defined(Rational(1, 2)), "E(T) != 1/2");
    test::Gen g(1001);
    for (int i = 0; i < 100; ++i) {
        const RandomQuantity x = g.quantity(2, 50, 17);
        const std::string s = x.str();
        ck.expect(expectation(p, x) == defined((x[0] + x[1]) / Rational(2)), "E(X) at " + s);
        ck.expect(conditional_expectation(p, x, h) == defined(x[0]), "E(X|H) at " + s);
        ck.expect(conditional_expectation(p, x, t) == defined(x[1]), "E(X|T) at " + s);
    }
    const double secs = seconds_since(t0);
    ck.within(secs, 1.0);
    return ck.done("100 random X exact, " + std::to_string(secs) + " s");
}

// Reference extended arithmetic written from the defining list: each case is
// one listed rule, everything else is undefined.
struct Ref {
    int kind; // -1 = -inf, 0 = finite, +1 = +inf
    Rational v;
};

std::optional<Ref> ref_add(const Ref& a, const Ref& b) {
    if (a.kind == 0 && b.kind == 0) {
        return Ref{0, a.v + b.v};
    }
    if (a.kind == 1 && b.kind != -1) return Ref{1, Rational(0)};
    if (b.kind == 1 && a.kind != -1) return Ref{1, Rational(0)};
    if (a.kind == -1 && b.kind != 1) return Ref{-1, Rational(0)};
    if (b.kind == -1 && a.kind != 1) return Ref{-1, Rational(0)};
    return std::nullopt;
}

int ref_sign(const Ref& a) { return a.kind != 0 ? a.kind : a.v.sign(); }

std::optional<Ref> ref_mul(const Ref& a, const Ref& b) {
    if (a.kind == 0 && b.kind == 0) {
        return Ref{0, a.v * b.v};
    }
    // x > 0 or x < 0 times an infinity (x itself may be infinite).
    const Ref& inf = a.kind != 0 ? a : b;
    const Ref& other = a.kind != 0 ? b : a;
    if (ref_sign(other) == 0) {
        return std::nullopt;
    }
    return Ref{inf.kind * ref_sign(other), Rational(0)};
}

std::optional<Ref> ref_div(const Ref& a, const Ref& b) {
    if (a.kind == 0 && b.kind == 0) {
        if (b.v.is_zero()) return std::nullopt;
        return Ref{0, a.v / b.v};
    }
    if (a.kind == 0 && b.kind != 0) return Ref{0, Rational(0)};
    if (a.kind != 0 && b.kind == 0 && !b.v.is_zero()) return Ref{a.kind * b.v.sign(), Rational(0)};
    return std::nullopt;
}

ExtReal to_ext(const Ref& r) {
    if (r.kind == 1) return ExtReal::plus_inf();
    if (r.kind == -1) return ExtReal::minus_inf();
    return ExtReal(r.v);
}

bool same(const MaybeExt& got, const std::optional<Ref>& want) {
    if (!want) return !got.has_value();
    return got.has_value() && *got == to_ext(*want);
}

// 2. Extended-real arithmetic.
Outcome extended_table() {
    Check ck;
    const std::vector<Ref> values = {{-1, Rational(0)},    {0, Rational(-7, 2)}, {0, Rational(-1)},
                                     {0, Rational(0)},     {0, Rational(1, 3)},  {0, Rational(5)},
                                     {1, Rational(0)}};
    int defined_cases = 0;
    for (const auto& a : values) {
        for (const auto& b : values) {
            const std::string tag = to_ext(a).str() + " , " + to_ext(b).str();
            const auto ra = ref_add(a, b);
            const auto rm = ref_mul(a, b);
            const auto rd = ref_div(a, b);
            defined_cases += static_cast<int>(ra.has_value()) + static_cast<int>(rm.has_value()) +
                             static_cast<int>(rd.has_value());
            ck.expect(same(ext_add(to_ext(a), to_ext(b)), ra), "add " + tag);
            ck.expect(same(ext_mul(to_ext(a), to_ext(b)), rm), "mul " + tag);
            ck.expect(same(ext_div(to_ext(a), to_ext(b)), rd), "div " + tag);
        }
    }
    const ExtReal pinf = ExtReal::plus_inf();
    const ExtReal minf = ExtReal::minus_inf();
    const std::vector<std::pair<std::string, MaybeExt>> undefined = {
        {"(+inf)+(-inf)", ext_add(pinf, minf)}, {"(-inf)+(+inf)", ext_add(minf, pinf)},
        {"0*(+inf)", ext_mul(ExtReal(0), pinf)}, {"0*(-inf)", ext_mul(ExtReal(0), minf)},
        {"(+inf)*0", ext_mul(pinf, ExtReal(0))}, {"(-inf)*0", ext_mul(minf, ExtReal(0))},
        {"x/0", ext_div(ExtReal(Rational(3, 4)), ExtReal(0))}, {"(+inf)/(+inf)", ext_div(pinf, pinf)},
        {"(+inf)/(-inf)", ext_div(pinf, minf)}, {"(-inf)/(+inf)", ext_div(minf, pinf)},
        {"(-inf)/(-inf)", ext_div(minf, minf)},
    };
    for (const auto& [name, v] : undefined) {
        ck.expect(!v.has_value(), name + " should be undefined");
    }
    // x/0 for every x in the sample set.
    for (const auto& a : values) {
        ck.expect(!ext_div(to_ext(a), ExtReal(0)).has_value(), to_ext(a).str() + "/0 should be undefined");
    }
    const std::vector<ExtReal> none;
    ck.expect(ext_sup(none) == minf, "sup of empty set");
    ck.expect(ext_inf(none) == pinf, "inf of empty set");
    return ck.done(std::to_string(defined_cases) + " defined entries, " + std::to_string(undefined.size()) +
                   " listed undefined expressions, empty sup/inf");
}

// 3. Rules battery.
Outcome rules_battery() {
    Check ck;
    const auto t0 = std::chrono::steady_clock::now();
    test::Gen g(1003);
    std::size_t holds = 0;
    std::size_t evaluations = 0;
    for (int i = 0; i < 200; ++i) {
        const std::size_t n = 1 + g.below(4);
        const Preorder p = g.cone(n, 6, 5);
        const auto report = fuzz_rules(p, 10, 1000 + static_cast<std::uint64_t>(i));
        for (const auto& t : report.per_rule) {
            holds += t.holds;
            evaluations += t.holds + t.unmet + t.violations;
        }
        for (const auto& v : report.violations) {
            ck.expect(false, "cone " + std::to_string(i) + ": " + v);
        }
    }
    ck.expect(evaluations == 200 * 10 * kRuleCount, "not every rule was evaluated");
    const double secs = seconds_since(t0);
    ck.within(secs, 60.0);
    return ck.done(std::to_string(evaluations) + " rule evaluations (" + std::to_string(holds) +
                   " with hypotheses met), 0 violations, " + std::to_string(secs) + " s");
}

// Shared by criteria 4 and 8.
std::vector<Assessment> coherent_corpus() {
    test::Gen g(1004);
    std::vector<Assessment> out;
    for (int i = 0; i < 100; ++i) {
        const std::size_t n = 1 + g.below(4);
        out.push_back(test::weighted_assessment(g, g.weights(n), 1 + g.below(4), g.coin()));
    }
    return out;
}

Assessment perturbed(test::Gen& g, int kind) {
    const std::size_t n = 1 + g.below(4);
    const auto w = g.weights(n);
    Assessment a = test::weighted_assessment(g, w, g.below(3), g.coin());
    const Event one = Event::one(n);
    const Event d = g.nonzero_event(n);
    const Rational delta = g.positive(3, 7);
    auto claim = [&](const Event& ev, const Event& given, const Rational& v) {
        for (const auto& e : a.entries()) {
            if (e.x == ev.quantity() && e.given == given) {
                Assessment fresh(n);
                for (const auto& f : a.entries()) {
                    if (!(f.x == e.x && f.given == e.given)) {
                        fresh.add(f.x, f.given, f.value);
                    }
                }
                a = fresh;
                break;
            }
        }
        a.add(ev.quantity(), given, ExtReal(v));
    };
    switch (kind) {
    case 0: // unitarity: P(D|D) != 1
        claim(d, d, g.coin() ? Rational(1) + delta : Rational(1) - delta / Rational(8));
        break;
    case 1: { // additivity: P(A) + P(not A) != 1
        const Event ev = g.event(n);
        const Rational p = test::weighted_expectation(w, ev.quantity(), one);
        claim(ev, one, p);
        claim(!ev, one, Rational(1) - p + delta / Rational(8));
        break;
    }
    case 2: { // monotonicity: A <= B but P(A|D) > P(B|D)
        const Event b = g.event(n);
        const Event ev = b & g.event(n);
        claim(ev, d, Rational(2, 3));
        if (ev == b) {
            claim(b | d, d, Rational(1, 3));
        } else {
            claim(b, d, Rational(1, 3));
        }
        break;
    }
    default: // outside [0, 1]
        claim(g.event(n), d, g.coin() ? Rational(1) + delta : -delta);
        break;
    }
    return a;
}

// 4. Characterization round trip.
Outcome characterization() {
    Check ck;
    const auto t0 = std::chrono::steady_clock::now();
    const auto corpus = coherent_corpus();
    std::size_t values = 0;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const Assessment& a = corpus[i];
        const auto res = check_coherence(a);
        ck.expect(res.coherent, "coherent instance " + std::to_string(i) + " reported incoherent");
        if (!res.coherent) {
            continue;
        }
        for (const auto& e : a.entries()) {
            ++values;
            ck.expect(extend(a, e.x, e.given) == ExpectationResult::make_defined(e.value),
                      "instance " + std::to_string(i) + " does not reproduce " + e.x.str());
        }
    }
    test::Gen g(1044);
    int incoherent = 0;
    for (int i = 0; i < 100; ++i) {
        const Assessment a = perturbed(g, i % 4);
        const auto res = check_coherence(a);
        ck.expect(!res.coherent, "perturbed instance " + std::to_string(i) + " reported coherent");
        if (!res.coherent) {
            ++incoherent;
            ck.expect(res.witness && validate_witness(a, *res.witness),
                      "witness for perturbed instance " + std::to_string(i) + " does not validate");
        }
    }
    const double secs = seconds_since(t0);
    ck.within(secs, 120.0);
    return ck.done("100 coherent (" + std::to_string(values) + " values reproduced), " + std::to_string(incoherent) +
                   " perturbed incoherent with valid witnesses, " + std::to_string(secs) + " s");
}

// 5. Axiom systems are coherent. Total tables over the disjunction closure of
// several conditions run past the default budget, so the maximum is used.
constexpr std::size_t kTableBudget = 30;

Outcome axiom_coherence() {
    Check ck;
    test::Gen g(1005);
    std::size_t largest = 0;
    for (int i = 0; i < 50; ++i) {
        const std::size_t n = 1 + g.below(3);
        const auto layers = test::random_layers(g, n, 3);
        const std::vector<PlausibleValueTable> tables = {test::kolmogorov_table(g, n), test::cox_table(layers, n),
                                                         test::dt_table(g, layers, n)};
        for (const auto& t : tables) {
            const std::string tag = std::string(to_string(t.system)) + " table " + std::to_string(i);
            const auto report = check_axioms(t);
            ck.expect(report.valid, tag + " invalid: " + report.axiom + " " + report.instance);
            const Assessment a = to_assessment(t);
            largest = std::max(largest, margin::reduce(a).bets.size());
            ck.expect(check_coherence(a, kTableBudget).coherent, tag + " incoherent");
        }
    }
    return ck.done("150 valid tables coherent (largest has " + std::to_string(largest) + " effective entries)");
}

bool same_witness(const Witness& a, const Witness& b) {
    if (a.bet_terms.size() != b.bet_terms.size() || a.event_terms.size() != b.event_terms.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.bet_terms.size(); ++i) {
        const auto& x = a.bet_terms[i];
        const auto& y = b.bet_terms[i];
        if (x.entry != y.entry || x.r != y.r || x.s != y.s) {
            return false;
        }
    }
    for (std::size_t i = 0; i < a.event_terms.size(); ++i) {
        if (a.event_terms[i].q != b.event_terms[i].q || a.event_terms[i].event != b.event_terms[i].event) {
            return false;
        }
    }
    return true;
}

// 6. Infinite values.
Outcome infinite_values() {
    Check ck;
    test::Gen g(1006);
    for (int i = 0; i < 100; ++i) {
        const std::size_t n = 1 + g.below(4);
        Assessment base = test::weighted_assessment(g, g.weights(n), g.below(3), g.coin());
        Assessment a(n);
        const std::size_t at = g.below(base.size() + 1);
        std::size_t inf_index = 0;
        for (std::size_t k = 0; k <= base.size(); ++k) {
            if (k == at) {
                RandomQuantity x = g.quantity(n, 5, 3);
                Event d = g.nonzero_event(n);
                // Keep the (X, D) pair fresh.
                while (std::any_of(base.entries().begin(), base.entries().end(),
                                   [&](const AssessmentEntry& e) { return e.x == x && e.given == d; })) {
                    x = g.quantity(n, 5, 3);
                }
                inf_index = a.size();
                a.add(x, d, g.coin() ? ExtReal::plus_inf() : ExtReal::minus_inf());
            }
            if (k < base.size()) {
                a.add(base[k].x, base[k].given, base[k].value);
            }
        }
        const auto res = check_coherence(a);
        const std::string tag = "instance " + std::to_string(i);
        ck.expect(!res.coherent, tag + " reported coherent");
        if (res.coherent) {
            continue;
        }
        ck.expect(validate_witness(a, *res.witness), tag + " witness invalid");
        ck.expect(same_witness(*res.witness, margin::infinite_value_witness(a, inf_index)),
                  tag + " witness differs from the bounded-quantity certificate");
    }
    return ck.done("100 assessments with an infinite value, all certificates match");
}

// 7. Oracle equivalence.
Outcome oracle_equivalence() {
    Check ck;
    test::Gen g(1007);
    int disagreements = 0;
    for (int i = 0; i < 500; ++i) {
        const std::size_t n = 1 + g.below(3);
        const Preorder p = g.cone(n, 4);
        const RandomQuantity x = g.quantity(n, 5, 3);
        const bool lp = p.nonstrict(RandomQuantity(n), x);
        const bool fm = oracle::fm_description(p).contains(x);
        if (lp != fm) {
            ++disagreements;
            ck.expect(false, "membership of " + x.str());
        }
    }
    for (int i = 0; i < 200; ++i) {
        const std::size_t n = 1 + g.below(3);
        const Preorder p = g.cone(n, 4);
        const RandomQuantity x = g.quantity(n, 5, 2);
        const Event c = g.nonzero_event(n);
        if (!(conditional_expectation(p, x, c) == oracle::oracle_expectation(p, x, c))) {
            ++disagreements;
            ck.expect(false, "expectation of " + x.str() + " given " + c.str());
        }
    }
    return ck.done("500 membership + 200 expectation queries, " + std::to_string(disagreements) + " disagreements");
}

// 8. Certain and impossible conditional events.
Outcome conclusion_claims() {
    Check ck;
    std::vector<Assessment> corpus;
    for (auto& a : coherent_corpus()) {
        if (a.dim() <= 3) {
            corpus.push_back(std::move(a));
        }
    }
    // Layered instances add conditions of probability zero.
    test::Gen g(1008);
    for (int i = 0; i < 20; ++i) {
        const std::size_t n = 2 + g.below(2);
        const auto layers = test::random_layers(g, n, 3);
        Assessment a(n);
        for (std::size_t k = 0, m = 1 + g.below(3); k < m; ++k) {
            const Event ev = g.event(n);
            const Event d = g.nonzero_event(n);
            if (std::none_of(a.entries().begin(), a.entries().end(),
                             [&](const AssessmentEntry& e) { return e.x == ev.quantity() && e.given == d; })) {
                a.add(ev.quantity(), d, ExtReal(test::layered_expectation(layers, ev.quantity(), d)));
            }
        }
        corpus.push_back(a);
    }
    std::size_t pairs = 0;
    std::size_t null_or_unknown = 0;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const Assessment& a = corpus[i];
        if (!check_coherence(a).coherent) {
            ck.expect(false, "corpus instance " + std::to_string(i) + " incoherent");
            continue;
        }
        const std::size_t n = a.dim();
        for (const auto& c : all_events(n)) {
            if (c.is_zero()) {
                continue;
            }
            const auto pc = extend(a, c.quantity(), Event::one(n));
            if (!pc.defined || pc.value == ExtReal(0)) {
                ++null_or_unknown;
            }
            for (const auto& ev : all_events(n)) {
                const Event meet = ev & c;
                if (!meet.is_zero() && meet != c) {
                    continue;
                }
                ++pairs;
                const Rational want = meet.is_zero() ? Rational(0) : Rational(1);
                ck.expect(extend(a, ev.quantity(), c) == defined(want),
                          "P(" + ev.str() + "|" + c.str() + ") in instance " + std::to_string(i));
            }
        }
    }
    return ck.done(std::to_string(pairs) + " event pairs over " + std::to_string(corpus.size()) + " assessments (" +
                   std::to_string(null_or_unknown) + " conditions with P(C) zero or undefined)");
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"coin example reproduction", coin_reproduction},
        {"extended-real arithmetic table", extended_table},
        {"rules battery on random cones", rules_battery},
        {"characterization round trip", characterization},
        {"axiom-system tables are coherent", axiom_coherence},
        {"infinite values are incoherent", infinite_values},
        {"oracle equivalence", oracle_equivalence},
        {"certain and impossible conditional events", conclusion_claims},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += o.pass ? 0 : 1;
        std::printf("%s %zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.note.c_str());
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
