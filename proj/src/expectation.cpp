#include "pk/expectation.hpp"

#include "pk/errors.hpp"

namespace pk {

ExpectationResult ExpectationResult::make_defined(ExtReal v) {
    ExpectationResult r;
    r.defined = true;
    r.value = v;
    r.lower = v;
    r.upper = std::move(v);
    return r;
}

ExpectationResult ExpectationResult::make_undefined(ExtReal lo, ExtReal hi) {
    ExpectationResult r;
    r.lower = std::move(lo);
    r.upper = std::move(hi);
    return r;
}

std::string ExpectationResult::str() const {
    if (defined) {
        return value.str();
    }
    return "undefined [" + lower.str() + ", " + upper.str() + "]";
}

ExtReal lower_value(const Preorder& p, const RandomQuantity& x, const Event& c) {
    return p.sup_below(x, c);
}

ExtReal upper_value(const Preorder& p, const RandomQuantity& x, const Event& c) {
    return p.inf_above(x, c);
}

ExpectationResult conditional_expectation(const Preorder& p, const RandomQuantity& x, const Event& c) {
    if (c.dim() != p.dim()) {
        throw InputError("conditioning event has wrong dimension");
    }
    if (c.is_zero()) {
        throw InputError("cannot condition on the zero event");
    }
    const ExtReal a = lower_value(p, x, c);
    const ExtReal b = upper_value(p, x, c);
    if (a == b) {
        return ExpectationResult::make_defined(a);
    }
    return ExpectationResult::make_undefined(ext_min(a, b), ext_max(a, b));
}

ExpectationResult expectation(const Preorder& p, const RandomQuantity& x) {
    return conditional_expectation(p, x, Event::one(p.dim()));
}

ExpectationResult probability(const Preorder& p, const Event& a, const Event& c) {
    return conditional_expectation(p, a.quantity(), c);
}

} // namespace pk
