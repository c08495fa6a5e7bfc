#include "pk/coherence.hpp"

#include "pk/errors.hpp"

#include <stdexcept>

namespace pk {

CoherenceResult check_coherence(const Assessment& a, std::size_t budget) {
    auto reduction = margin::reduce(a);
    std::optional<Witness> w = std::move(reduction.witness);
    if (!w) {
        w = margin::find_dutch_book(a, reduction.bets, budget);
    }
    if (!w) {
        return {};
    }
    if (!validate_witness(a, *w)) {
        throw std::logic_error("constructed witness failed validation");
    }
    return CoherenceResult{false, std::move(w)};
}

ExpectationResult extend(const Assessment& a, const RandomQuantity& x, const Event& c, std::size_t budget) {
    const Preorder p = Preorder::from_assessment(a, budget);
    return conditional_expectation(p, x, c);
}

} // namespace pk
