#include "pk/margin_lp.hpp"

#include "pk/errors.hpp"
#include "pk/lp.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace pk::margin {

namespace {

using lp::LinearProgram;
using lp::Relation;

enum class Mode {
    Normalized,   // margins >= 1, feasibility only
    MaxShift,     // margins >= 0, maximize y
    MaxSupport,   // margins >= mu_j, 0 <= mu_j <= 1, maximize sum mu_j
};

struct Layout {
    std::optional<std::size_t> y;
    std::size_t first_bet = 0;
    std::size_t first_mu = 0;
    std::size_t width = 0;
};

// Rows: sum_j (r_j X_j D_j + t_j D_j) + y w <= v (coordinatewise), plus one
// margin row per bet in the subset.
LinearProgram build(const std::vector<Bet>& bets, const std::vector<std::size_t>& subset, const RandomQuantity& v,
                    const Event* w, Mode mode, Layout& layout) {
    LinearProgram p;
    layout = Layout{};
    if (w != nullptr) {
        layout.y = p.add_variable("y", false);
    }
    layout.first_bet = p.num_variables();
    for (std::size_t k = 0; k < subset.size(); ++k) {
        p.add_variable("r" + std::to_string(subset[k]), false);
        p.add_variable("t" + std::to_string(subset[k]), false);
    }
    layout.first_mu = p.num_variables();
    if (mode == Mode::MaxSupport) {
        for (std::size_t k = 0; k < subset.size(); ++k) {
            p.add_variable("mu" + std::to_string(subset[k]), true);
        }
    }
    layout.width = p.num_variables();
    const std::size_t n = v.dim();

    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Rational> row(layout.width, Rational(0));
        if (layout.y && w->contains(i)) {
            row[*layout.y] = Rational(1);
        }
        for (std::size_t k = 0; k < subset.size(); ++k) {
            const Bet& b = bets[subset[k]];
            row[layout.first_bet + 2 * k] = b.xd[i];
            row[layout.first_bet + 2 * k + 1] = Rational(b.given.contains(i) ? 1 : 0);
        }
        p.add_constraint(std::move(row), Relation::LessEq, v[i]);
    }

    const Rational floor = mode == Mode::Normalized ? Rational(1) : Rational(0);
    for (std::size_t k = 0; k < subset.size(); ++k) {
        const Bet& b = bets[subset[k]];
        std::vector<Rational> row(layout.width, Rational(0));
        const std::size_t r = layout.first_bet + 2 * k;
        if (b.value.is_finite()) {
            row[r] = b.value.value();
            row[r + 1] = Rational(1);
        } else {
            row[r] = Rational(b.value.is_plus_inf() ? 1 : -1);
        }
        if (mode == Mode::MaxSupport) {
            row[layout.first_mu + k] = Rational(-1);
        }
        p.add_constraint(std::move(row), Relation::GreaterEq, floor);
    }

    std::vector<Rational> obj(layout.width, Rational(0));
    if (mode == Mode::MaxShift) {
        obj[*layout.y] = Rational(1);
        p.set_objective(std::move(obj), lp::Sense::Maximize);
    } else if (mode == Mode::MaxSupport) {
        for (std::size_t k = 0; k < subset.size(); ++k) {
            std::vector<Rational> cap(layout.width, Rational(0));
            cap[layout.first_mu + k] = Rational(1);
            p.add_constraint(std::move(cap), Relation::LessEq, Rational(1));
            obj[layout.first_mu + k] = Rational(1);
        }
        p.set_objective(std::move(obj), lp::Sense::Maximize);
    }
    return p;
}

// Largest S within `subset` such that some combination of the bets in S has
// every margin in S strictly positive, with sum <= v (- y w, y free).
//
// The feasible (r, t) region with margins >= 0 is a convex cone, so the set
// of entries that can be positive in some feasible point can all be positive
// in one point, and one LP maximizing sum min(margin_j, 1) finds that set.
// Entries outside it may still be needed at zero margin, which the strict
// condition forbids, so the LP is repeated on the survivors until the set is
// stable. Every subset admitting strictly positive margins stays inside the
// set at every step.
std::vector<std::size_t> positive_support(const std::vector<Bet>& bets, std::vector<std::size_t> subset,
                                          const RandomQuantity& v, const Event* w) {
    while (!subset.empty()) {
        Layout layout;
        const auto outcome = lp::solve(build(bets, subset, v, w, Mode::MaxSupport, layout));
        const auto* opt = std::get_if<lp::Optimal>(&outcome);
        if (opt == nullptr) {
            return {};
        }
        std::vector<std::size_t> next;
        for (std::size_t k = 0; k < subset.size(); ++k) {
            if (opt->point[layout.first_mu + k].sign() > 0) {
                next.push_back(subset[k]);
            }
        }
        if (next.size() == subset.size()) {
            return subset;
        }
        subset = std::move(next);
    }
    return {};
}

std::vector<std::size_t> all_indices(std::size_t m) {
    std::vector<std::size_t> out(m);
    for (std::size_t i = 0; i < m; ++i) {
        out[i] = i;
    }
    return out;
}

bool is_constant_on(const RandomQuantity& xd, const Event& d, Rational& c) {
    bool first = true;
    for (std::size_t i = 0; i < xd.dim(); ++i) {
        if (!d.contains(i)) {
            continue;
        }
        if (first) {
            c = xd[i];
            first = false;
        } else if (xd[i] != c) {
            return false;
        }
    }
    return !first;
}

} // namespace

std::size_t subset_budget_from_env() {
    const char* raw = std::getenv("PK_SUBSET_BUDGET");
    if (raw == nullptr || *raw == '\0') {
        return kDefaultSubsetBudget;
    }
    char* end = nullptr;
    const unsigned long v = std::strtoul(raw, &end, 10);
    if (end == raw || *end != '\0' || v == 0 || v > 30) {
        throw InputError("PK_SUBSET_BUDGET must be an integer in [1, 30]");
    }
    return static_cast<std::size_t>(v);
}

Witness infinite_value_witness(const Assessment& a, std::size_t entry) {
    const auto& e = a[entry];
    if (e.value.is_finite()) {
        throw InputError("entry has a finite value");
    }
    const bool up = e.value.is_plus_inf();
    const auto support = e.given.indices();
    Rational y = e.x[support.front()];
    for (std::size_t i : support) {
        y = up ? max(y, e.x[i]) : min(y, e.x[i]);
    }
    y += Rational(up ? 1 : -1);

    Witness w;
    w.bet_terms.push_back(BetTerm{entry, Rational(up ? 1 : -1), -y});
    for (std::size_t i : support) {
        w.event_terms.push_back(EventTerm{up ? y - e.x[i] : e.x[i] - y, Event::atom(a.dim(), i)});
    }
    return w;
}

Reduction reduce(const Assessment& a) {
    Reduction out;
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (a[j].value.is_infinite()) {
            out.witness = infinite_value_witness(a, j);
            return out;
        }
    }
    for (std::size_t j = 0; j < a.size(); ++j) {
        const auto& e = a[j];
        RandomQuantity xd = e.x * e.given;
        Rational c;
        if (is_constant_on(xd, e.given, c)) {
            const Rational& v = e.value.value();
            if (v == c) {
                continue;
            }
            // r (c + s) D with s = -(v + c)/2 is -|v - c|/2 D; one event term cancels it.
            const Rational half_gap = abs(v - c) / Rational(2);
            Witness w;
            w.bet_terms.push_back(BetTerm{j, Rational(v > c ? 1 : -1), -(v + c) / Rational(2)});
            w.event_terms.push_back(EventTerm{half_gap, e.given});
            out.witness = std::move(w);
            out.bets.clear();
            return out;
        }
        bool duplicate = false;
        for (const auto& b : out.bets) {
            if (b.xd == xd && b.given == e.given && b.value == e.value) {
                duplicate = true;
                break;
            }
        }
        if (!duplicate) {
            out.bets.push_back(Bet{std::move(xd), e.given, e.value, j});
        }
    }
    return out;
}

std::vector<std::vector<std::size_t>> canonical_subsets(std::size_t m) {
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t k = 1; k <= m; ++k) {
        std::vector<std::size_t> idx(k);
        for (std::size_t i = 0; i < k; ++i) {
            idx[i] = i;
        }
        for (;;) {
            out.push_back(idx);
            // Advance to the next k-combination in lexicographic order.
            std::size_t pos = k;
            while (pos > 0 && idx[pos - 1] == m - k + pos - 1) {
                --pos;
            }
            if (pos == 0) {
                break;
            }
            ++idx[pos - 1];
            for (std::size_t i = pos; i < k; ++i) {
                idx[i] = idx[i - 1] + 1;
            }
        }
    }
    return out;
}

std::optional<Witness> find_dutch_book(const Assessment& a, const std::vector<Bet>& bets, std::size_t budget) {
    if (bets.size() > budget) {
        throw ResourceLimit("assessment has " + std::to_string(bets.size()) +
                            " effective entries, subset budget is " + std::to_string(budget));
    }
    const RandomQuantity zero(a.dim());
    const auto support = positive_support(bets, all_indices(bets.size()), zero, nullptr);
    if (support.empty()) {
        return std::nullopt;
    }
    // Every feasible subset lies inside the support, so scanning the subsets
    // of the support in canonical order finds the canonical first one.
    for (const auto& local : canonical_subsets(support.size())) {
        std::vector<std::size_t> subset;
        subset.reserve(local.size());
        for (std::size_t k : local) {
            subset.push_back(support[k]);
        }
        Layout layout;
        const auto problem = build(bets, subset, zero, nullptr, Mode::Normalized, layout);
        const auto outcome = lp::solve(problem);
        const auto* opt = std::get_if<lp::Optimal>(&outcome);
        if (opt == nullptr) {
            continue;
        }
        Witness w;
        RandomQuantity total(a.dim());
        for (std::size_t k = 0; k < subset.size(); ++k) {
            const Bet& b = bets[subset[k]];
            const Rational& r = opt->point[layout.first_bet + 2 * k];
            const Rational& t = opt->point[layout.first_bet + 2 * k + 1];
            total += r * b.xd + t * b.given.quantity();
            if (!r.is_zero()) {
                w.bet_terms.push_back(BetTerm{b.source, r, t / r});
            } else {
                // t D with t >= 1 is not a single r (X + s) D term; split it
                // into two opposite bets with margins t/2 each.
                const Rational& v = b.value.value();
                const Rational half = t / Rational(2);
                w.bet_terms.push_back(BetTerm{b.source, Rational(1), -v + half});
                w.bet_terms.push_back(BetTerm{b.source, Rational(-1), -v - half});
            }
        }
        for (std::size_t i = 0; i < a.dim(); ++i) {
            if (total[i].sign() < 0) {
                w.event_terms.push_back(EventTerm{-total[i], Event::atom(a.dim(), i)});
            }
        }
        return w;
    }
    throw std::logic_error("positive support without a feasible subset");
}

StrictCone::StrictCone(std::size_t dim, std::vector<Bet> bets, std::size_t budget)
    : dim_(dim), bets_(std::move(bets)) {
    if (bets_.size() > budget) {
        throw ResourceLimit("assessment has " + std::to_string(bets_.size()) +
                            " effective entries, subset budget is " + std::to_string(budget));
    }
}

bool StrictCone::contains(const RandomQuantity& v) const {
    if (v.is_nonnegative() && !v.is_zero()) {
        return true;
    }
    return !positive_support(bets_, all_indices(bets_.size()), v, nullptr).empty();
}

ExtReal StrictCone::sup_shift(const RandomQuantity& v, const Event& w) const {
    ExtReal best = ExtReal::minus_inf();

    // Pure event-combination branch: v - y w >= 0 and nonzero.
    bool outside_ok = true;
    for (std::size_t i = 0; i < dim_; ++i) {
        if (!w.contains(i) && v[i].sign() < 0) {
            outside_ok = false;
        }
    }
    if (outside_ok) {
        if (w.is_zero()) {
            if (!v.is_zero()) {
                return ExtReal::plus_inf();
            }
        } else {
            const auto support = w.indices();
            Rational lowest = v[support.front()];
            for (std::size_t i : support) {
                lowest = min(lowest, v[i]);
            }
            best = ExtReal(lowest);
        }
    }

    // Any subset usable at some y lies in the support S, the closure value is
    // monotone in the subset, and S itself is usable at some y; mixing that
    // point with the closure optimum keeps margins positive, so the sup over
    // the open set equals the closure maximum on S.
    const auto support = positive_support(bets_, all_indices(bets_.size()), v, &w);
    if (support.empty()) {
        return best;
    }
    Layout layout;
    const auto shift = lp::solve(build(bets_, support, v, &w, Mode::MaxShift, layout));
    if (lp::is_unbounded(shift)) {
        return ExtReal::plus_inf();
    }
    if (const auto* s = std::get_if<lp::Optimal>(&shift)) {
        best = ext_max(best, ExtReal(s->value));
    }
    return best;
}

} // namespace pk::margin
