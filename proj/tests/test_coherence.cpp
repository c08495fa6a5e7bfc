#include "doctest.h"

#include "pk/coherence.hpp"
#include "pk/errors.hpp"
#include "pk/margin_lp.hpp"
#include "support/gen.hpp"

#include <cstdlib>
#include <vector>

using namespace pk;

namespace {

RandomQuantity q2(long a, long b) { return RandomQuantity{Rational(a), Rational(b)}; }

const Event kH{1, 0};
const Event kT{0, 1};
const Event kOne{1, 1};

Assessment fair_coin() {
    Assessment a(2);
    a.add(kH.quantity(), kOne, ExtReal(Rational(1, 2)));
    a.add(kT.quantity(), kOne, ExtReal(Rational(1, 2)));
    return a;
}

Assessment heads_two() {
    Assessment a(2);
    a.add(kH.quantity(), kOne, ExtReal(2));
    return a;
}

// Reconstructs sum q C + sum r (X + s) D without the library's checker.
RandomQuantity witness_sum(const Assessment& a, const Witness& w) {
    RandomQuantity total(a.dim());
    for (const auto& t : w.event_terms) {
        total += t.q * t.event.quantity();
    }
    for (const auto& b : w.bet_terms) {
        total += b.r * ((a[b.entry].x + b.s) * a[b.entry].given);
    }
    return total;
}

struct EnvGuard {
    explicit EnvGuard(const char* value) {
        if (value != nullptr) {
            setenv("PK_SUBSET_BUDGET", value, 1);
        } else {
            unsetenv("PK_SUBSET_BUDGET");
        }
    }
    ~EnvGuard() { unsetenv("PK_SUBSET_BUDGET"); }
};

} // namespace

TEST_CASE("fair coin is coherent") {
    const auto res = check_coherence(fair_coin());
    CHECK(res.coherent);
    CHECK_FALSE(res.witness.has_value());
}

TEST_CASE("P(H) = 2 has the canonical certificate") {
    const Assessment a = heads_two();
    const auto res = check_coherence(a);
    REQUIRE_FALSE(res.coherent);
    REQUIRE(res.witness.has_value());
    const Witness& w = *res.witness;
    REQUIRE(w.bet_terms.size() == 1);
    CHECK(w.bet_terms[0].entry == 0);
    CHECK(w.bet_terms[0].r == Rational(1));
    CHECK(w.bet_terms[0].s == Rational(-1));
    REQUIRE(w.event_terms.size() == 1);
    CHECK(w.event_terms[0].q == Rational(1));
    CHECK(w.event_terms[0].event == kT);
    CHECK(witness_sum(a, w).is_zero());
    CHECK(validate_witness(a, w));
}

TEST_CASE("infinite values are incoherent") {
    Assessment a(2);
    a.add(q2(3, 5), kOne, ExtReal::plus_inf());
    const auto res = check_coherence(a);
    REQUIRE_FALSE(res.coherent);
    const Witness& w = *res.witness;
    const Witness expected = margin::infinite_value_witness(a, 0);
    REQUIRE(w.bet_terms.size() == 1);
    CHECK(w.bet_terms[0].r == Rational(1));
    CHECK(w.bet_terms[0].s == Rational(-6));
    CHECK(expected.bet_terms[0].s == w.bet_terms[0].s);
    REQUIRE(w.event_terms.size() == 2);
    CHECK(witness_sum(a, w).is_zero());
    CHECK(validate_witness(a, w));
    RandomQuantity events(2);
    for (const auto& t : w.event_terms) {
        events += t.q * t.event.quantity();
    }
    CHECK(events == q2(3, 1));

    Assessment b(3);
    b.add(RandomQuantity{Rational(1), Rational(-2), Rational(4)}, Event{0, 1, 1}, ExtReal::minus_inf());
    const auto rb = check_coherence(b);
    REQUIRE_FALSE(rb.coherent);
    CHECK(rb.witness->bet_terms[0].r == Rational(-1));
    CHECK(validate_witness(b, *rb.witness));
    CHECK_THROWS_AS(margin::infinite_value_witness(fair_coin(), 0), InputError);
}

TEST_CASE("witness validation rejects tampering") {
    const Assessment a = heads_two();
    const Witness good = *check_coherence(a).witness;
    CHECK(validate_witness(a, good));

    Witness flipped = good;
    flipped.event_terms[0].q = Rational(-1);
    CHECK_FALSE(validate_witness(a, flipped));

    Witness shifted = good;
    shifted.bet_terms[0].s = Rational(-1, 2);
    CHECK_FALSE(validate_witness(a, shifted));

    Witness no_bets = good;
    no_bets.bet_terms.clear();
    CHECK_FALSE(validate_witness(a, no_bets));

    Witness out_of_range = good;
    out_of_range.bet_terms[0].entry = 5;
    CHECK_FALSE(validate_witness(a, out_of_range));

    Witness zero_event = good;
    zero_event.event_terms[0].event = Event{0, 0};
    CHECK_FALSE(validate_witness(a, zero_event));

    // Sum is zero but the margin 1 * (2 - 2) is not positive.
    Witness flat;
    flat.bet_terms.push_back(BetTerm{0, Rational(1), Rational(-2)});
    flat.event_terms.push_back(EventTerm{Rational(2), kT});
    flat.event_terms.push_back(EventTerm{Rational(1), kH});
    CHECK(witness_sum(a, flat).is_zero());
    CHECK_FALSE(validate_witness(a, flat));
}

TEST_CASE("assessment construction rules") {
    Assessment a(2);
    CHECK_THROWS_AS(a.add(kH.quantity(), Event{0, 0}, ExtReal(0)), InputError);
    CHECK_THROWS_AS(a.add(RandomQuantity(3), kOne, ExtReal(0)), InputError);
    a.add(kH.quantity(), kOne, ExtReal(Rational(1, 2)));
    a.add(kH.quantity(), kOne, ExtReal(Rational(1, 2)));
    CHECK_THROWS_AS(a.add(kH.quantity(), kOne, ExtReal(Rational(1, 3))), InputError);
    CHECK(check_coherence(a).coherent);
    CHECK_THROWS_AS(Assessment(0), InputError);
}

TEST_CASE("constant claims") {
    Assessment ok(2);
    ok.add(q2(7, 7), kOne, ExtReal(7));
    ok.add(q2(3, 9), kH, ExtReal(3));
    CHECK(check_coherence(ok).coherent);
    Assessment bad(2);
    bad.add(q2(3, 9), kH, ExtReal(4));
    const auto res = check_coherence(bad);
    REQUIRE_FALSE(res.coherent);
    CHECK(validate_witness(bad, *res.witness));
}

TEST_CASE("subset budget") {
    Assessment big(2);
    for (long k = 1; k <= 17; ++k) {
        big.add(q2(k, 0), kOne, ExtReal(Rational(k, 2)));
    }
    CHECK_THROWS_AS(check_coherence(big), ResourceLimit);
    CHECK(check_coherence(big, 17).coherent);
    CHECK_THROWS_AS(check_coherence(fair_coin(), 1), ResourceLimit);
    // Constant claims are removed before the budget applies.
    Assessment consts(2);
    consts.add(q2(1, 1), kOne, ExtReal(1));
    consts.add(q2(2, 2), kOne, ExtReal(2));
    consts.add(kH.quantity(), kOne, ExtReal(Rational(1, 2)));
    CHECK(check_coherence(consts, 1).coherent);
}

TEST_CASE("budget from the environment") {
    {
        EnvGuard env(nullptr);
        CHECK(margin::subset_budget_from_env() == margin::kDefaultSubsetBudget);
    }
    {
        EnvGuard env("5");
        CHECK(margin::subset_budget_from_env() == 5);
    }
    for (const char* bad : {"0", "31", "abc", "-1", "4x"}) {
        EnvGuard env(bad);
        CAPTURE(bad);
        CHECK_THROWS_AS(margin::subset_budget_from_env(), InputError);
    }
}

TEST_CASE("canonical subset order") {
    const auto s = margin::canonical_subsets(3);
    const std::vector<std::vector<std::size_t>> expected = {{0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}, {0, 1, 2}};
    CHECK(s == expected);
}

TEST_CASE("extension of the fair coin") {
    const Assessment a = fair_coin();
    CHECK(extend(a, q2(3, 5), kOne) == ExpectationResult::make_defined(ExtReal(4)));
    CHECK(extend(a, q2(3, 5), kH) == ExpectationResult::make_defined(ExtReal(3)));
    CHECK_THROWS_AS(extend(heads_two(), q2(3, 5), kOne), InputError);
    CHECK_THROWS_AS(extend(a, q2(3, 5), Event{0, 0}), InputError);
}

TEST_CASE("certain and impossible conditional events") {
    test::Gen g(41);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 1 + g.below(3);
        const Assessment a = test::weighted_assessment(g, g.weights(n), 1 + g.below(3), g.coin());
        const Event c = g.nonzero_event(n);
        const Event inside = c & g.event(n);
        const Event disjoint = !c & g.event(n);
        CHECK(extend(a, disjoint.quantity(), c) == ExpectationResult::make_defined(ExtReal(0)));
        CHECK(extend(a, (inside | c).quantity(), c) == ExpectationResult::make_defined(ExtReal(1)));
    }
}

TEST_CASE("weighted assessments are coherent and bracket their source") {
    test::Gen g(42);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 1 + g.below(4);
        const auto w = g.weights(n);
        const Assessment a = test::weighted_assessment(g, w, 1 + g.below(4), g.coin());
        CAPTURE(trial);
        REQUIRE(check_coherence(a).coherent);
        for (const auto& e : a.entries()) {
            CHECK(extend(a, e.x, e.given) == ExpectationResult::make_defined(e.value));
        }
        const RandomQuantity x = g.quantity(n, 5);
        const Event c = g.nonzero_event(n);
        const ExtReal truth(test::weighted_expectation(w, x, c));
        const auto r = extend(a, x, c);
        if (r.defined) {
            CHECK(r.value == truth);
        } else {
            CHECK(r.lower <= truth);
            CHECK(truth <= r.upper);
        }
    }
}

TEST_CASE("random assessments: verdicts are sound") {
    test::Gen g(43);
    int incoherent = 0;
    int coherent = 0;
    for (int trial = 0; trial < 120; ++trial) {
        const std::size_t n = 1 + g.below(3);
        Assessment a(n);
        for (std::size_t k = 0, m = 1 + g.below(3); k < m; ++k) {
            const RandomQuantity x = g.coin() ? g.event(n).quantity() : g.quantity(n, 3);
            const Event d = g.nonzero_event(n);
            bool dup = false;
            for (const auto& e : a.entries()) {
                dup = dup || (e.x == x && e.given == d);
            }
            if (!dup) {
                a.add(x, d, ExtReal(g.rational(3, 4)));
            }
        }
        const auto res = check_coherence(a);
        CAPTURE(trial);
        if (res.coherent) {
            ++coherent;
            for (const auto& e : a.entries()) {
                CHECK(extend(a, e.x, e.given) == ExpectationResult::make_defined(e.value));
            }
        } else {
            ++incoherent;
            REQUIRE(res.witness.has_value());
            CHECK(witness_sum(a, *res.witness).is_zero());
            CHECK(validate_witness(a, *res.witness));
        }
    }
    CHECK(coherent > 5);
    CHECK(incoherent > 5);
}

TEST_CASE("violations of probability laws are incoherent") {
    test::Gen g(44);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 2 + g.below(2);
        const Event d = g.nonzero_event(n);
        Event a = g.event(n);
        Assessment bad(n);
        switch (trial % 4) {
        case 0: // above one
            bad.add(a.quantity(), d, ExtReal(Rational(1) + g.positive(3, 4)));
            break;
        case 1: // below zero
            bad.add(a.quantity(), d, ExtReal(-g.positive(3, 4)));
            break;
        case 2: { // additivity
            const Rational p = g.positive(3, 9) / Rational(4);
            bad.add(a.quantity(), Event::one(n), ExtReal(p));
            bad.add((!a).quantity(), Event::one(n), ExtReal(Rational(1) - p + g.positive(2, 9)));
            break;
        }
        default: { // monotonicity: A <= A | B but P(A) > P(A | B)
            const Event b = a | g.nonzero_event(n);
            if (a == b) {
                a = Event::zero(n);
            }
            bad.add(a.quantity(), Event::one(n), ExtReal(Rational(2, 3)));
            bad.add(b.quantity(), Event::one(n), ExtReal(Rational(1, 3)));
            break;
        }
        }
        const auto res = check_coherence(bad);
        CAPTURE(trial);
        REQUIRE_FALSE(res.coherent);
        CHECK(validate_witness(bad, *res.witness));
    }
}
