#pragma once

/**
 * @file preorder.hpp
 * @brief Plausible preorders in two computable presentations.
 *
 * Cone presentation: the nonnegative set {X : 0 <~ X} is the conic hull of
 * user generators together with the n coordinate atoms (whose hull already
 * contains every event). Strict comparisons are two membership tests.
 *
 * Assessment presentation: the strict relation generated by a coherent
 * assessment, 0 <! X iff X is a positive event combination plus bets with
 * positive margins; the non-strict relation is that strict relation plus
 * the diagonal.
 *
 * A Preorder value also carries a conditioning event C; queries multiply
 * both sides by C before consulting the presentation, which realizes the
 * conditional preorder X <~_C Y iff X C <~ Y C.
 */

#include "pk/algebra.hpp"
#include "pk/assessment.hpp"
#include "pk/ext_real.hpp"
#include "pk/margin_lp.hpp"

#include <memory>
#include <span>
#include <utility>
#include <vector>

namespace pk {

namespace detail {

class Presentation {
public:
    virtual ~Presentation() = default;
    [[nodiscard]] virtual std::size_t dim() const = 0;
    /// 0 <~ v
    [[nodiscard]] virtual bool member(const RandomQuantity& v) const = 0;
    /// 0 <! v
    [[nodiscard]] virtual bool strict_member(const RandomQuantity& v) const = 0;
    /// sup { y : 0 <~ v - y w } in the extended order.
    [[nodiscard]] virtual ExtReal sup_shift(const RandomQuantity& v, const Event& w) const = 0;
};

} // namespace detail

enum class PreorderKind { Cone, Assessment };
enum class Regularity { Regular, Degenerate, Neither };

using QuantityPair = std::pair<RandomQuantity, RandomQuantity>;

class Preorder {
public:
    /// Conic hull of `generators` plus the coordinate atoms.
    static Preorder cone(std::size_t dim, std::vector<RandomQuantity> generators);
    /// The smallest plausible preorder: the nonnegative orthant.
    static Preorder orthant(std::size_t dim);
    /// T x T, presented as the cone generated by -1.
    static Preorder greatest(std::size_t dim);
    /// Strict relation generated by a coherent assessment. Throws InputError
    /// if the assessment is incoherent, ResourceLimit past the budget.
    static Preorder from_assessment(const Assessment& a, std::size_t budget = margin::kDefaultSubsetBudget);

    [[nodiscard]] std::size_t dim() const { return impl_->dim(); }
    [[nodiscard]] PreorderKind kind() const { return kind_; }
    [[nodiscard]] const Event& condition() const { return condition_; }
    /// Cone generators (excluding the atoms). Empty for assessment preorders.
    [[nodiscard]] const std::vector<RandomQuantity>& generators() const { return generators_; }
    /// The generating assessment, if any.
    [[nodiscard]] const std::optional<Assessment>& assessment() const { return assessment_; }

    /// X <~ Y
    [[nodiscard]] bool nonstrict(const RandomQuantity& x, const RandomQuantity& y) const;
    /// X <~ Y and not Y <~ X
    [[nodiscard]] bool strict(const RandomQuantity& x, const RandomQuantity& y) const;
    /// X <~ Y and Y <~ X
    [[nodiscard]] bool equivalent(const RandomQuantity& x, const RandomQuantity& y) const;

    /// The conditional preorder <~_C (conditions compose by conjunction).
    [[nodiscard]] Preorder conditional(const Event& c) const;

    /// sup { y : y C <~ X C }
    [[nodiscard]] ExtReal sup_below(const RandomQuantity& x, const Event& c) const;
    /// inf { y : X C <~ y C }
    [[nodiscard]] ExtReal inf_above(const RandomQuantity& x, const Event& c) const;

private:
    Preorder(std::shared_ptr<const detail::Presentation> impl, PreorderKind kind, Event condition);

    void check_dim(const RandomQuantity& x) const;

    std::shared_ptr<const detail::Presentation> impl_;
    PreorderKind kind_;
    Event condition_;
    std::vector<RandomQuantity> generators_;
    std::optional<Assessment> assessment_;
};

/// Smallest plausible preorder containing every pair (X_i, Y_i): generators Y_i - X_i.
Preorder cone_from_relation(std::span<const QuantityPair> pairs, std::size_t dim);

/// Smallest plausible preorder whose equivalence part contains every pair:
/// generators +-(Y_i - X_i).
Preorder cone_from_equivalences(std::span<const QuantityPair> pairs, std::size_t dim);

/// Regular iff 0 <! e for every coordinate atom e (hence for every nonzero
/// event, by additivity of the strict part); degenerate iff 0 ~ 1.
Regularity classify(const Preorder& p);

/// Evaluates  OR_i A_i <~ sum_i A_i.
bool check_subadditivity(const Preorder& p, std::span<const Event> events);

const char* to_string(Regularity r);

} // namespace pk
