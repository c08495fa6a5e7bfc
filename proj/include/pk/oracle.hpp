#pragma once

/**
 * @file oracle.hpp
 * @brief Independent verifiers that share no code with the LP kernel.
 *
 * fm_description eliminates the conic multipliers by Fourier-Motzkin to get
 * an inequality description of a cone preorder; oracle_expectation decides
 * membership by evaluating those inequalities and locates the expectation
 * bounds by bracketing and facet boundary solves. kolmogorov_extension is the
 * atom-decomposition functional F(X) = sum_G sum_H phi(X,G) phi(H,G) PV(H)/nu(H).
 */

#include "pk/algebra.hpp"
#include "pk/axioms.hpp"
#include "pk/expectation.hpp"
#include "pk/preorder.hpp"

#include <span>
#include <vector>

namespace pk::oracle {

inline constexpr std::size_t kMaxDim = 4;
inline constexpr std::size_t kMaxGenerators = 8;
inline constexpr std::size_t kMaxExpectationDim = 3;

/// x is in the cone iff row . x >= 0 for every row. An empty row list is
/// the whole space.
struct InequalityDescription {
    std::size_t dim = 0;
    std::vector<std::vector<Rational>> rows;

    [[nodiscard]] bool contains(const RandomQuantity& x) const;
};

/// Facets (possibly with redundant rows) of the nonnegative cone of a cone
/// preorder, ignoring its condition. Throws ResourceLimit past the caps and
/// InputError for assessment preorders.
InequalityDescription fm_description(const Preorder& p);

/// Same classification as conditional_expectation, computed from the
/// inequality description. Throws ResourceLimit for dim > 3.
ExpectationResult oracle_expectation(const Preorder& p, const RandomQuantity& x, const Event& c);

class AtomDecomposition {
public:
    /// at(A) from `a_events`; at(B) from `a_events` together with `b_events`.
    AtomDecomposition(std::span<const Event> a_events, std::span<const Event> b_events, std::size_t dim);

    [[nodiscard]] std::size_t dim() const { return dim_; }
    [[nodiscard]] const std::vector<Event>& atoms_a() const { return at_a_; }
    [[nodiscard]] const std::vector<Event>& atoms_b() const { return at_b_; }

    /// The r with X.G = r G for G = atoms_b()[g]. Throws InputError if X is
    /// not constant on G (X outside span(B)).
    [[nodiscard]] Rational phi(const RandomQuantity& x, std::size_t g) const;
    /// nu(B) = sum over atoms G of B of phi(B, G).
    [[nodiscard]] Rational nu(const Event& b) const;
    /// True iff X is constant on every atom of B.
    [[nodiscard]] bool in_span(const RandomQuantity& x) const;

private:
    std::size_t dim_;
    std::vector<Event> at_a_;
    std::vector<Event> at_b_;
};

class KolmogorovExtension {
public:
    KolmogorovExtension(AtomDecomposition decomposition, std::vector<Rational> atom_a_values);

    [[nodiscard]] const AtomDecomposition& decomposition() const { return decomposition_; }
    /// F(X) for X in span(B).
    [[nodiscard]] Rational operator()(const RandomQuantity& x) const;

private:
    AtomDecomposition decomposition_;
    std::vector<Rational> atom_a_values_;
};

/// Builds F for a valid Kolmogorovian table and asserts nonnegativity on
/// B, additivity, homogeneity and agreement with PV on the table's algebra.
/// Throws InputError for an invalid table.
KolmogorovExtension kolmogorov_extension(const PlausibleValueTable& t, std::span<const Event> targets);

} // namespace pk::oracle
