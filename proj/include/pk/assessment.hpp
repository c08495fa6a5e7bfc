#pragma once

/**
 * @file assessment.hpp
 * @brief Finite conditional-expectation claims and Dutch-book witnesses.
 */

#include "pk/algebra.hpp"
#include "pk/ext_real.hpp"

#include <cstddef>
#include <vector>

namespace pk {

struct AssessmentEntry {
    RandomQuantity x;
    Event given;
    ExtReal value;
};

/// A partial function (X, D) -> value on T x E0(T). Construction rejects a
/// zero conditioning event, mismatched dimensions, and duplicate (X, D) pairs
/// with different values.
class Assessment {
public:
    explicit Assessment(std::size_t dim);
    Assessment(std::size_t dim, std::vector<AssessmentEntry> entries);

    void add(RandomQuantity x, Event given, ExtReal value);

    [[nodiscard]] std::size_t dim() const { return dim_; }
    [[nodiscard]] std::size_t size() const { return entries_.size(); }
    [[nodiscard]] const std::vector<AssessmentEntry>& entries() const { return entries_; }
    [[nodiscard]] const AssessmentEntry& operator[](std::size_t j) const { return entries_[j]; }

private:
    std::size_t dim_;
    std::vector<AssessmentEntry> entries_;
};

struct EventTerm {
    Rational q;
    Event event;
};

/// One bet r * (X_j + s) * D_j on entry j.
struct BetTerm {
    std::size_t entry = 0;
    Rational r;
    Rational s;
};

/// Incoherence certificate: sum q C + sum r (X_j + s) D_j == 0 with q > 0,
/// C != 0 and every bet margin r (v_j + s) > 0.
struct Witness {
    std::vector<EventTerm> event_terms;
    std::vector<BetTerm> bet_terms;
};

/// Re-checks a witness by direct substitution; independent of the LP kernel.
bool validate_witness(const Assessment& a, const Witness& w);

/// Margin r * (v + s) under extended arithmetic (nullopt when undefined).
MaybeExt bet_margin(const ExtReal& value, const Rational& r, const Rational& s);

} // namespace pk
