#pragma once

/**
 * @file coherence.hpp
 * @brief Coherence decision with Dutch-book witnesses, and extension of a
 * coherent assessment to a conditional expectation.
 */

#include "pk/assessment.hpp"
#include "pk/expectation.hpp"
#include "pk/margin_lp.hpp"

#include <optional>

namespace pk {

struct CoherenceResult {
    bool coherent = true;
    /// Present iff incoherent; always passes validate_witness.
    std::optional<Witness> witness;
};

/// Decides coherence exactly. Throws ResourceLimit when the number of
/// effective entries (after exact preprocessing) exceeds `budget`.
CoherenceResult check_coherence(const Assessment& a, std::size_t budget = margin::kDefaultSubsetBudget);

/// E(X|C) under the preorder generated by a coherent assessment. Throws
/// InputError for an incoherent assessment or C == 0.
ExpectationResult extend(const Assessment& a, const RandomQuantity& x, const Event& c,
                         std::size_t budget = margin::kDefaultSubsetBudget);

} // namespace pk
