#include "pk/oracle.hpp"

#include "pk/errors.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace pk::oracle {

namespace {

struct FmRow {
    std::vector<Rational> a;
    std::vector<bool> history;
};

std::size_t popcount(const std::vector<bool>& h) {
    return static_cast<std::size_t>(std::count(h.begin(), h.end(), true));
}

// Scales so the first nonzero coefficient is +-1. Returns false for a zero row.
bool normalize(std::vector<Rational>& a) {
    for (const auto& v : a) {
        if (!v.is_zero()) {
            const Rational s = abs(v);
            for (auto& w : a) {
                w = w / s;
            }
            return true;
        }
    }
    return false;
}

Rational dot(const std::vector<Rational>& a, const RandomQuantity& x) {
    Rational s(0);
    for (std::size_t i = 0; i < x.dim(); ++i) {
        s += a[i] * x[i];
    }
    return s;
}

// sup { y : v - y w in K } for an event w, over the inequality description.
ExtReal sup_shift(const InequalityDescription& d, const RandomQuantity& v, const RandomQuantity& w) {
    if (d.contains(-w)) {
        return ExtReal::plus_inf(); // the feasible set is downward closed and -w is a recession direction
    }
    auto feasible = [&](const Rational& y) { return d.contains(v - y * w); };
    Rational lo(-1);
    while (!feasible(lo)) {
        lo = lo * Rational(2);
    }
    Rational hi(1);
    while (feasible(hi)) {
        hi = hi * Rational(2);
    }
    // The sup is attained where some facet becomes tight.
    Rational best = lo;
    for (const auto& row : d.rows) {
        const Rational aw = dot(row, w);
        if (aw.sign() <= 0) {
            continue;
        }
        const Rational y = dot(row, v) / aw;
        if (y > best && y < hi && feasible(y)) {
            best = y;
        }
    }
    return ExtReal(best);
}

} // namespace

bool InequalityDescription::contains(const RandomQuantity& x) const {
    if (x.dim() != dim) {
        throw InputError("point has wrong dimension");
    }
    return std::all_of(rows.begin(), rows.end(), [&](const auto& row) { return dot(row, x).sign() >= 0; });
}

InequalityDescription fm_description(const Preorder& p) {
    if (p.kind() != PreorderKind::Cone) {
        throw InputError("Fourier-Motzkin description needs a cone preorder");
    }
    const std::size_t n = p.dim();
    const auto& gens = p.generators();
    if (n > kMaxDim || gens.size() > kMaxGenerators) {
        throw ResourceLimit("oracle scale exceeded (dim <= " + std::to_string(kMaxDim) + ", generators <= " +
                            std::to_string(kMaxGenerators) + ")");
    }
    const std::size_t k = gens.size();
    const std::size_t width = n + k;
    const std::size_t originals = n + k;

    // x_i - sum_k G_ik lambda_k >= 0 and lambda_k >= 0.
    std::vector<FmRow> rows;
    for (std::size_t i = 0; i < n; ++i) {
        FmRow r{std::vector<Rational>(width, Rational(0)), std::vector<bool>(originals, false)};
        r.a[i] = Rational(1);
        for (std::size_t j = 0; j < k; ++j) {
            r.a[n + j] = -gens[j][i];
        }
        r.history[i] = true;
        rows.push_back(std::move(r));
    }
    for (std::size_t j = 0; j < k; ++j) {
        FmRow r{std::vector<Rational>(width, Rational(0)), std::vector<bool>(originals, false)};
        r.a[n + j] = Rational(1);
        r.history[n + j] = true;
        rows.push_back(std::move(r));
    }

    for (std::size_t j = 0; j < k; ++j) {
        const std::size_t var = n + j;
        const std::size_t eliminated = j + 1;
        std::vector<FmRow> pos;
        std::vector<FmRow> neg;
        std::vector<FmRow> next;
        for (auto& r : rows) {
            const int s = r.a[var].sign();
            (s > 0 ? pos : s < 0 ? neg : next).push_back(std::move(r));
        }
        std::set<std::vector<Rational>> seen;
        for (const auto& r : next) {
            seen.insert(r.a);
        }
        for (const auto& rp : pos) {
            for (const auto& rn : neg) {
                std::vector<bool> h(originals);
                for (std::size_t t = 0; t < originals; ++t) {
                    h[t] = rp.history[t] || rn.history[t];
                }
                // Chernikov: a row combining more than (eliminated + 1) originals is redundant.
                if (popcount(h) > eliminated + 1) {
                    continue;
                }
                std::vector<Rational> a(width);
                const Rational cp = -rn.a[var];
                const Rational cn = rp.a[var];
                for (std::size_t t = 0; t < width; ++t) {
                    a[t] = cp * rp.a[t] + cn * rn.a[t];
                }
                if (!normalize(a) || !seen.insert(a).second) {
                    continue;
                }
                next.push_back(FmRow{std::move(a), std::move(h)});
            }
        }
        rows = std::move(next);
    }

    InequalityDescription d;
    d.dim = n;
    std::set<std::vector<Rational>> unique;
    for (auto& r : rows) {
        std::vector<Rational> a(r.a.begin(), r.a.begin() + static_cast<std::ptrdiff_t>(n));
        if (normalize(a)) {
            unique.insert(std::move(a));
        }
    }
    d.rows.assign(unique.begin(), unique.end());
    return d;
}

ExpectationResult oracle_expectation(const Preorder& p, const RandomQuantity& x, const Event& c) {
    if (p.dim() > kMaxExpectationDim) {
        throw ResourceLimit("oracle expectation is limited to dimension " + std::to_string(kMaxExpectationDim));
    }
    if (c.dim() != p.dim() || x.dim() != p.dim()) {
        throw InputError("dimension mismatch");
    }
    if (c.is_zero()) {
        throw InputError("cannot condition on the zero event");
    }
    const InequalityDescription d = fm_description(p);
    const Event w = c & p.condition();
    const RandomQuantity wq = w.quantity();
    const ExtReal a = sup_shift(d, x * w, wq);
    const ExtReal b = *ext_neg(sup_shift(d, -(x * w), wq));
    if (a == b) {
        return ExpectationResult::make_defined(a);
    }
    return ExpectationResult::make_undefined(ext_min(a, b), ext_max(a, b));
}

AtomDecomposition::AtomDecomposition(std::span<const Event> a_events, std::span<const Event> b_events,
                                     std::size_t dim)
    : dim_(dim), at_a_(atoms_of(a_events, dim)) {
    std::vector<Event> all(a_events.begin(), a_events.end());
    all.insert(all.end(), b_events.begin(), b_events.end());
    at_b_ = atoms_of(all, dim);
}

Rational AtomDecomposition::phi(const RandomQuantity& x, std::size_t g) const {
    const Event& atom = at_b_.at(g);
    const auto idx = atom.indices();
    const Rational& r = x[idx.front()];
    for (std::size_t i : idx) {
        if (x[i] != r) {
            throw InputError(x.str() + " is not in the span of the algebra");
        }
    }
    return r;
}

Rational AtomDecomposition::nu(const Event& b) const {
    Rational s(0);
    const RandomQuantity bq = b.quantity();
    for (std::size_t g = 0; g < at_b_.size(); ++g) {
        s += phi(bq, g);
    }
    return s;
}

bool AtomDecomposition::in_span(const RandomQuantity& x) const {
    for (const auto& atom : at_b_) {
        const auto idx = atom.indices();
        for (std::size_t i : idx) {
            if (x[i] != x[idx.front()]) {
                return false;
            }
        }
    }
    return true;
}

KolmogorovExtension::KolmogorovExtension(AtomDecomposition decomposition, std::vector<Rational> atom_a_values)
    : decomposition_(std::move(decomposition)), atom_a_values_(std::move(atom_a_values)) {}

Rational KolmogorovExtension::operator()(const RandomQuantity& x) const {
    const auto& d = decomposition_;
    Rational total(0);
    for (std::size_t g = 0; g < d.atoms_b().size(); ++g) {
        const Rational px = d.phi(x, g);
        if (px.is_zero()) {
            continue;
        }
        for (std::size_t h = 0; h < d.atoms_a().size(); ++h) {
            const Event& atom_h = d.atoms_a()[h];
            const Rational ph = d.phi(atom_h.quantity(), g);
            if (!ph.is_zero()) {
                total += px * ph * atom_a_values_[h] / d.nu(atom_h);
            }
        }
    }
    return total;
}

KolmogorovExtension kolmogorov_extension(const PlausibleValueTable& t, std::span<const Event> targets) {
    if (t.system != AxiomSystem::Kolmogorov) {
        throw InputError("table is not Kolmogorovian");
    }
    const AxiomReport report = kolmogorov_check(t);
    if (!report.valid) {
        throw InputError("invalid Kolmogorovian table: " + report.axiom + " (" + report.instance + ")");
    }
    std::vector<Event> domain;
    for (const auto& e : t.entries) {
        domain.push_back(Event::from_quantity(e.x));
    }
    AtomDecomposition d(domain, targets, t.dim);
    std::vector<Rational> values;
    for (const auto& h : d.atoms_a()) {
        auto it = std::find_if(t.entries.begin(), t.entries.end(), [&](const TableEntry& e) { return e.x == h.quantity(); });
        if (it == t.entries.end()) {
            throw InputError("table lacks the atom " + h.str());
        }
        values.push_back(it->value);
    }
    KolmogorovExtension f(std::move(d), std::move(values));

    const auto& atoms_b = f.decomposition().atoms_b();
    const auto events_b = generated_subalgebra(atoms_b, t.dim);
    for (const auto& b : events_b) {
        if (f(b.quantity()).sign() < 0) {
            throw std::logic_error("extension is negative on " + b.str());
        }
        for (const auto& c : events_b) {
            if (f(b.quantity() + c.quantity()) != f(b.quantity()) + f(c.quantity())) {
                throw std::logic_error("extension is not additive");
            }
        }
        for (const Rational& r : {Rational(-2), Rational(1, 3)}) {
            if (f(r * b.quantity()) != r * f(b.quantity())) {
                throw std::logic_error("extension is not homogeneous");
            }
        }
    }
    for (const auto& e : t.entries) {
        if (f(e.x) != e.value) {
            throw std::logic_error("extension disagrees with the table at " + e.x.str());
        }
    }
    return f;
}

} // namespace pk::oracle
