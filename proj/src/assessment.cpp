#include "pk/assessment.hpp"

#include "pk/errors.hpp"

namespace pk {

Assessment::Assessment(std::size_t dim) : dim_(dim) {
    if (dim == 0) {
        throw InputError("dimension must be at least 1");
    }
}

Assessment::Assessment(std::size_t dim, std::vector<AssessmentEntry> entries) : Assessment(dim) {
    for (auto& e : entries) {
        add(std::move(e.x), std::move(e.given), std::move(e.value));
    }
}

void Assessment::add(RandomQuantity x, Event given, ExtReal value) {
    if (x.dim() != dim_ || given.dim() != dim_) {
        throw InputError("assessment entry has wrong dimension");
    }
    if (given.is_zero()) {
        throw InputError("assessment entry conditions on the zero event");
    }
    for (const auto& e : entries_) {
        if (e.x == x && e.given == given && e.value != value) {
            throw InputError("conflicting values for the same (X, D) pair: " + x.str() + " | " + given.str());
        }
    }
    entries_.push_back(AssessmentEntry{std::move(x), std::move(given), std::move(value)});
}

MaybeExt bet_margin(const ExtReal& value, const Rational& r, const Rational& s) {
    return ext_mul(ExtReal(r), ext_add(value, ExtReal(s)));
}

bool validate_witness(const Assessment& a, const Witness& w) {
    if (w.bet_terms.empty()) {
        return false;
    }
    RandomQuantity total(a.dim());
    for (const auto& t : w.event_terms) {
        if (t.q.sign() <= 0 || t.event.dim() != a.dim() || t.event.is_zero()) {
            return false;
        }
        total += t.q * t.event.quantity();
    }
    for (const auto& b : w.bet_terms) {
        if (b.entry >= a.size()) {
            return false;
        }
        const auto& e = a[b.entry];
        const MaybeExt margin = bet_margin(e.value, b.r, b.s);
        if (!margin || margin->sign() <= 0) {
            return false;
        }
        total += b.r * ((e.x + b.s) * e.given);
    }
    return total.is_zero();
}

} // namespace pk
