#pragma once

/**
 * @file expectation.hpp
 * @brief Expectations read off a plausible preorder.
 *
 * For X and a nonzero event C the non-strict bounds are
 *   a = sup { y : y C <~ X C },   b = inf { y : X C <~ y C }.
 * E(X|C) is defined exactly when a == b, and is that common value (possibly
 * infinite). Otherwise the result is Undefined and carries min(a, b) and
 * max(a, b), an interval containing every value a coherent extension may use.
 */

#include "pk/algebra.hpp"
#include "pk/ext_real.hpp"
#include "pk/preorder.hpp"

#include <string>

namespace pk {

struct ExpectationResult {
    bool defined = false;
    /// The expectation when defined.
    ExtReal value;
    /// Bracket when undefined (lower <= upper).
    ExtReal lower;
    ExtReal upper;

    static ExpectationResult make_defined(ExtReal v);
    static ExpectationResult make_undefined(ExtReal lo, ExtReal hi);

    [[nodiscard]] std::string str() const;
    friend bool operator==(const ExpectationResult&, const ExpectationResult&) = default;
};

/// sup { y : y C <~ X C }
ExtReal lower_value(const Preorder& p, const RandomQuantity& x, const Event& c);
/// inf { y : X C <~ y C }
ExtReal upper_value(const Preorder& p, const RandomQuantity& x, const Event& c);

/// E(X) = E(X | 1).
ExpectationResult expectation(const Preorder& p, const RandomQuantity& x);
/// Throws InputError for C == 0.
ExpectationResult conditional_expectation(const Preorder& p, const RandomQuantity& x, const Event& c);
/// P(A|C) = E(A|C).
ExpectationResult probability(const Preorder& p, const Event& a, const Event& c);

} // namespace pk
