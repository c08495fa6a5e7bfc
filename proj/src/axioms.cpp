#include "pk/axioms.hpp"

#include "pk/errors.hpp"

#include <map>
#include <optional>
#include <set>
#include <utility>

namespace pk {

namespace {

using Key = std::pair<RandomQuantity, Event>;

AxiomReport fail(std::string axiom, std::string instance) {
    AxiomReport r;
    r.valid = false;
    r.axiom = std::move(axiom);
    r.instance = std::move(instance);
    return r;
}

void check_shape(const PlausibleValueTable& t) {
    if (t.dim == 0) {
        throw InputError("table dimension must be at least 1");
    }
    for (const auto& e : t.entries) {
        if (e.x.dim() != t.dim || e.given.dim() != t.dim) {
            throw InputError("table entry has wrong dimension");
        }
    }
}

std::map<Key, Rational> index_entries(const PlausibleValueTable& t) {
    std::map<Key, Rational> out;
    for (const auto& e : t.entries) {
        auto [it, inserted] = out.emplace(Key{e.x, e.given}, e.value);
        if (!inserted && it->second != e.value) {
            throw InputError("conflicting table values for " + e.x.str() + " | " + e.given.str());
        }
    }
    return out;
}

std::optional<Rational> lookup(const std::map<Key, Rational>& m, const RandomQuantity& x, const Event& c) {
    auto it = m.find(Key{x, c});
    if (it == m.end()) {
        return std::nullopt;
    }
    return it->second;
}

std::string pv(const Event& a, const Event& c) {
    return "PV(" + a.str() + "|" + c.str() + ")";
}

std::string pv(const RandomQuantity& x, const Event& c) {
    return "PV(" + x.str() + "|" + c.str() + ")";
}

// Events of a closed family; returns the first closure failure, if any.
std::optional<std::string> closure_failure(const std::set<Event>& f) {
    for (const auto& a : f) {
        if (f.count(!a) == 0) {
            return "negation of " + a.str() + " missing";
        }
        for (const auto& b : f) {
            if (f.count(a & b) == 0) {
                return "conjunction of " + a.str() + " and " + b.str() + " missing";
            }
        }
    }
    return std::nullopt;
}

std::set<Event> events_of(const PlausibleValueTable& t) {
    std::set<Event> f;
    for (const auto& e : t.entries) {
        if (!e.x.is_event()) {
            throw InputError("entry " + e.x.str() + " is not an event");
        }
        f.insert(Event::from_quantity(e.x));
    }
    return f;
}

} // namespace

std::string_view to_string(AxiomSystem s) {
    switch (s) {
    case AxiomSystem::Kolmogorov: return "kolmogorov";
    case AxiomSystem::Cox: return "cox";
    case AxiomSystem::DupreTipler: return "dupre-tipler";
    }
    return "?";
}

AxiomSystem axiom_system_from_name(std::string_view name) {
    if (name == "kolmogorov") {
        return AxiomSystem::Kolmogorov;
    }
    if (name == "cox") {
        return AxiomSystem::Cox;
    }
    if (name == "dupre-tipler") {
        return AxiomSystem::DupreTipler;
    }
    throw InputError("unknown axiom system: " + std::string(name));
}

AxiomReport kolmogorov_check(const PlausibleValueTable& t) {
    check_shape(t);
    const Event one = Event::one(t.dim);
    for (const auto& e : t.entries) {
        if (e.given != one) {
            throw InputError("Kolmogorovian entries must be unconditional");
        }
    }
    const auto m = index_entries(t);
    const auto f = events_of(t);
    if (f.empty()) {
        return fail("closure", "empty domain");
    }
    if (auto bad = closure_failure(f)) {
        return fail("closure", *bad);
    }
    auto value = [&](const Event& a) { return *lookup(m, a.quantity(), one); };
    for (const auto& a : f) {
        if (value(a).sign() < 0) {
            return fail("nonnegativity", pv(a, one) + " = " + value(a).str());
        }
    }
    if (value(one) != Rational(1)) {
        return fail("unitarity", "PV(1) = " + value(one).str());
    }
    for (const auto& a : f) {
        for (const auto& b : f) {
            if (!(a & b).is_zero()) {
                continue;
            }
            const Rational lhs = value(a | b);
            const Rational rhs = value(a) + value(b);
            if (lhs != rhs) {
                return fail("additivity", "PV(" + (a | b).str() + ") = " + lhs.str() + " but PV(" + a.str() +
                                              ") + PV(" + b.str() + ") = " + rhs.str());
            }
        }
    }
    return {};
}

AxiomReport cox_check(const PlausibleValueTable& t) {
    check_shape(t);
    const auto m = index_entries(t);
    const auto f = events_of(t);
    if (f.empty()) {
        throw InputError("Coxian domain is empty");
    }
    if (auto bad = closure_failure(f)) {
        throw InputError("Coxian domain is not closed: " + *bad);
    }
    std::vector<Event> f0;
    for (const auto& c : f) {
        if (!c.is_zero()) {
            f0.push_back(c);
        }
    }
    for (const auto& e : t.entries) {
        if (f.count(e.given) == 0) {
            throw InputError("condition " + e.given.str() + " is outside the domain");
        }
    }
    for (const auto& a : f) {
        for (const auto& c : f0) {
            if (!lookup(m, a.quantity(), c)) {
                throw InputError("Coxian table is not total: " + pv(a, c) + " missing");
            }
        }
    }
    auto value = [&](const Event& a, const Event& c) { return *lookup(m, a.quantity(), c); };

    for (const auto& a : f) {
        for (const auto& c : f0) {
            if (value(a, c).sign() < 0) {
                return fail("nonnegativity", pv(a, c) + " = " + value(a, c).str());
            }
        }
    }
    for (const auto& c : f0) {
        if (value(c, c).sign() <= 0) {
            return fail("positivity", pv(c, c) + " = " + value(c, c).str());
        }
    }
    for (const auto& a : f) {
        for (const auto& c : f0) {
            if (value(!a, c) != Rational(1) - value(a, c)) {
                return fail("negation", pv(!a, c) + " = " + value(!a, c).str() + " but " + pv(a, c) + " = " +
                                            value(a, c).str());
            }
        }
    }
    for (const auto& a : f) {
        for (const auto& c : f) {
            for (const auto& d : f0) {
                if ((c & d).is_zero()) {
                    continue;
                }
                const Rational lhs = value(a & c, d);
                const Rational rhs = value(a, c & d) * value(c, d);
                if (lhs != rhs) {
                    return fail("bayes", pv(a & c, d) + " = " + lhs.str() + " but " + pv(a, c & d) + " * " +
                                             pv(c, d) + " = " + rhs.str());
                }
            }
        }
    }

    AxiomReport report;
    const Event one = Event::one(t.dim);
    const Event zero = Event::zero(t.dim);
    for (const auto& c : f0) {
        if (value(c, c) != Rational(1) || value(one, c) != Rational(1) || value(zero, c) != Rational(0)) {
            report.diagnostics.push_back("basic properties fail under " + c.str());
        }
        for (const auto& a : f) {
            if (value(a & c, c) != value(a, c)) {
                report.diagnostics.push_back("basic property " + pv(a & c, c) + " = " + pv(a, c) + " fails");
            }
            for (const auto& b : f) {
                if ((a & b).is_zero() && value(a | b, c) != value(a, c) + value(b, c)) {
                    report.diagnostics.push_back("sum rule fails for " + a.str() + ", " + b.str() + " | " + c.str());
                }
                if (value(a | b, c) > value(a, c) + value(b, c)) {
                    report.diagnostics.push_back("subadditivity fails for " + a.str() + ", " + b.str() + " | " +
                                                 c.str());
                }
            }
        }
    }
    return report;
}

AxiomReport dt_check(const PlausibleValueTable& t) {
    check_shape(t);
    const auto m = index_entries(t);
    std::set<Event> conds(t.conditions.begin(), t.conditions.end());
    if (conds.empty()) {
        for (const auto& e : t.entries) {
            conds.insert(e.given);
        }
    }
    for (const auto& c : conds) {
        if (c.dim() != t.dim || c.is_zero()) {
            throw InputError("conditions must be nonzero events of the table dimension");
        }
        for (const auto& d : conds) {
            if (conds.count(c | d) == 0) {
                throw InputError("condition set is not closed under disjunction: " + (c | d).str() + " missing");
            }
        }
    }
    for (const auto& e : t.entries) {
        if (conds.count(e.given) == 0) {
            throw InputError("entry condition " + e.given.str() + " is not in the condition set");
        }
    }

    const auto events = all_events(t.dim);
    for (const auto& c : conds) {
        for (const auto& a : events) {
            const auto v = lookup(m, a.quantity(), c);
            if (!v) {
                return fail("nonnegativity", pv(a, c) + " is missing");
            }
            if (v->sign() < 0) {
                return fail("nonnegativity", pv(a, c) + " = " + v->str());
            }
        }
    }
    for (const auto& c : conds) {
        const Rational v = *lookup(m, c.quantity(), c);
        if (v.sign() <= 0) {
            return fail("positivity", pv(c, c) + " = " + v.str());
        }
    }

    // Homogeneity among listed entries: Y = r X under the same condition.
    for (const auto& [kx, vx] : m) {
        const auto& [x, c] = kx;
        if (x.is_zero()) {
            if (!vx.is_zero()) {
                return fail("homogeneity", pv(x, c) + " = " + vx.str() + " but 0 * PV(X|C) = 0");
            }
            continue;
        }
        std::size_t pivot = 0;
        while (x[pivot].is_zero()) {
            ++pivot;
        }
        for (const auto& [ky, vy] : m) {
            const auto& [y, cy] = ky;
            if (cy != c) {
                continue;
            }
            const Rational r = y[pivot] / x[pivot];
            if (r * x != y) {
                continue;
            }
            if (vy != r * vx) {
                return fail("homogeneity", pv(y, c) + " = " + vy.str() + " but " + r.str() + " * " + pv(x, c) +
                                               " = " + (r * vx).str());
            }
        }
    }
    // Additivity among listed entries.
    for (const auto& [kx, vx] : m) {
        for (const auto& [ky, vy] : m) {
            if (kx.second != ky.second) {
                continue;
            }
            const auto sum = lookup(m, kx.first + ky.first, kx.second);
            if (sum && *sum != vx + vy) {
                return fail("additivity", pv(kx.first + ky.first, kx.second) + " = " + sum->str() + " but " +
                                              pv(kx.first, kx.second) + " + " + pv(ky.first, ky.second) + " = " +
                                              (vx + vy).str());
            }
        }
    }
    // Bayes' rule: for listed (X, G) with G = C.D in the condition set, D in
    // the condition set, compare against PV(X.C|D) when it is listed.
    for (const auto& [kx, vx] : m) {
        const auto& [x, g] = kx;
        for (const auto& d : conds) {
            if (!g.leq(d)) {
                continue;
            }
            const Event outside = !d;
            for (const auto& s : all_events(t.dim)) {
                if (!s.leq(outside)) {
                    continue;
                }
                const Event c = g | s;
                const auto lhs = lookup(m, x * c, d);
                if (!lhs) {
                    continue;
                }
                const Rational rhs = vx * *lookup(m, c.quantity(), d);
                if (*lhs != rhs) {
                    return fail("bayes", pv(x * c, d) + " = " + lhs->str() + " but " + pv(x, g) + " * " + pv(c, d) +
                                             " = " + rhs.str());
                }
            }
        }
    }
    return {};
}

AxiomReport check_axioms(const PlausibleValueTable& t) {
    switch (t.system) {
    case AxiomSystem::Kolmogorov: return kolmogorov_check(t);
    case AxiomSystem::Cox: return cox_check(t);
    case AxiomSystem::DupreTipler: return dt_check(t);
    }
    throw InputError("unknown axiom system");
}

Assessment to_assessment(const PlausibleValueTable& t) {
    Assessment a(t.dim);
    for (const auto& e : t.entries) {
        a.add(e.x, e.given, ExtReal(e.value));
    }
    return a;
}

} // namespace pk
