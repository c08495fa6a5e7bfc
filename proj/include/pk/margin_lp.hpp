#pragma once

/**
 * @file margin_lp.hpp
 * @brief Subset-enumerated margin LPs over the bets of an assessment.
 *
 * A bet on entry (X, D, v) contributes r X D + t D (t = r s) with margin
 * r v + t > 0 (r > 0 for v = +inf, r < 0 for v = -inf). The set of
 * quantities "positive event combination plus margin-positive bets" is
 * decided through the subsets of entries: within a fixed subset every used
 * entry carries a strictly positive margin, which is an open condition. The
 * largest usable subset is found by repeated support LPs; explicit canonical
 * enumeration is only used to pick a deterministic witness inside it.
 */

#include "pk/assessment.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace pk::margin {

inline constexpr std::size_t kDefaultSubsetBudget = 16;

/// Reads PK_SUBSET_BUDGET, falling back to kDefaultSubsetBudget.
std::size_t subset_budget_from_env();

/// A bet-relevant view of one assessment entry: only X*D and D matter.
struct Bet {
    RandomQuantity xd;
    Event given;
    ExtReal value;
    std::size_t source = 0;
};

/// Outcome of the exact preprocessing of an assessment.
struct Reduction {
    /// Entries whose X*D is not a constant multiple of D, deduplicated.
    std::vector<Bet> bets;
    /// Set when preprocessing alone already proves incoherence.
    std::optional<Witness> witness;
};

/// Preprocessing shared by coherence checks and assessment preorders:
///  1. the first entry with an infinite value yields the bounded-quantity
///     certificate;
///  2. an entry with X*D == c*D is dropped when v == c (its bets are
///     positive multiples of D) and yields a one-entry certificate otherwise;
///  3. entries with identical (X*D, D, v) are merged.
Reduction reduce(const Assessment& a);

/// Certificate for an entry with v = +-inf: bet r = +-1, s = -y with y just
/// beyond the range of X on D, and atom terms that cancel the remainder.
Witness infinite_value_witness(const Assessment& a, std::size_t entry);

/// Nonempty subsets of {0..m-1}: increasing size, then lexicographic.
std::vector<std::vector<std::size_t>> canonical_subsets(std::size_t m);

/// Finds the first subset in canonical order admitting normalized multipliers
/// with every margin >= 1 and sum (r X D + t D) <= 0, and turns it into a
/// witness. Throws ResourceLimit if bets exceed budget.
std::optional<Witness> find_dutch_book(const Assessment& a, const std::vector<Bet>& bets, std::size_t budget);

/// The strict cone {V : V = u + sum of margin-positive bets, u >= 0, and
/// u != 0 when no bet is used}.
class StrictCone {
public:
    StrictCone(std::size_t dim, std::vector<Bet> bets, std::size_t budget);

    [[nodiscard]] std::size_t dim() const { return dim_; }
    [[nodiscard]] const std::vector<Bet>& bets() const { return bets_; }

    /// Membership of v in the strict cone.
    [[nodiscard]] bool contains(const RandomQuantity& v) const;

    /// sup { y : v - y w is in the strict cone }, -inf when empty.
    [[nodiscard]] ExtReal sup_shift(const RandomQuantity& v, const Event& w) const;

private:
    std::size_t dim_;
    std::vector<Bet> bets_;
};

} // namespace pk::margin
