#include "pk/preorder.hpp"

#include "pk/errors.hpp"
#include "pk/lp.hpp"

namespace pk {

namespace {

using lp::LinearProgram;
using lp::Relation;

// 0 <~ v iff v = G lambda + mu with lambda, mu >= 0, i.e. G lambda <= v.
class ConePresentation final : public detail::Presentation {
public:
    ConePresentation(std::size_t dim, std::vector<RandomQuantity> generators)
        : dim_(dim), generators_(std::move(generators)) {
        for (const auto& g : generators_) {
            if (g.dim() != dim_) {
                throw InputError("generator " + g.str() + " has wrong dimension");
            }
        }
    }

    std::size_t dim() const override { return dim_; }

    bool member(const RandomQuantity& v) const override {
        if (v.is_nonnegative()) {
            return true;
        }
        return !lp::is_infeasible(lp::solve(build(v, nullptr)));
    }

    bool strict_member(const RandomQuantity& v) const override {
        return member(v) && !member(-v);
    }

    ExtReal sup_shift(const RandomQuantity& v, const Event& w) const override {
        const auto outcome = lp::solve(build(v, &w));
        if (const auto* opt = std::get_if<lp::Optimal>(&outcome)) {
            return ExtReal(opt->value);
        }
        return lp::is_unbounded(outcome) ? ExtReal::plus_inf() : ExtReal::minus_inf();
    }

private:
    LinearProgram build(const RandomQuantity& v, const Event* w) const {
        LinearProgram p;
        for (std::size_t k = 0; k < generators_.size(); ++k) {
            p.add_variable("lambda" + std::to_string(k), true);
        }
        const std::size_t y = w != nullptr ? p.add_variable("y", false) : 0;
        for (std::size_t i = 0; i < dim_; ++i) {
            std::vector<Rational> row(p.num_variables(), Rational(0));
            for (std::size_t k = 0; k < generators_.size(); ++k) {
                row[k] = generators_[k][i];
            }
            if (w != nullptr && w->contains(i)) {
                row[y] = Rational(1);
            }
            p.add_constraint(std::move(row), Relation::LessEq, v[i]);
        }
        if (w != nullptr) {
            std::vector<Rational> obj(p.num_variables(), Rational(0));
            obj[y] = Rational(1);
            p.set_objective(std::move(obj), lp::Sense::Maximize);
        }
        return p;
    }

    std::size_t dim_;
    std::vector<RandomQuantity> generators_;
};

class AssessmentPresentation final : public detail::Presentation {
public:
    explicit AssessmentPresentation(margin::StrictCone cone) : cone_(std::move(cone)) {}

    std::size_t dim() const override { return cone_.dim(); }

    bool member(const RandomQuantity& v) const override {
        return v.is_zero() || cone_.contains(v);
    }

    bool strict_member(const RandomQuantity& v) const override {
        return cone_.contains(v);
    }

    ExtReal sup_shift(const RandomQuantity& v, const Event& w) const override {
        ExtReal best = cone_.sup_shift(v, w);
        // Diagonal: v - y w == 0.
        if (w.is_zero()) {
            if (v.is_zero()) {
                return ExtReal::plus_inf();
            }
            return best;
        }
        const auto support = w.indices();
        const Rational& y0 = v[support.front()];
        bool diagonal = true;
        for (std::size_t i = 0; i < v.dim() && diagonal; ++i) {
            diagonal = w.contains(i) ? v[i] == y0 : v[i].is_zero();
        }
        if (diagonal) {
            best = ext_max(best, ExtReal(y0));
        }
        return best;
    }

private:
    margin::StrictCone cone_;
};

} // namespace

Preorder::Preorder(std::shared_ptr<const detail::Presentation> impl, PreorderKind kind, Event condition)
    : impl_(std::move(impl)), kind_(kind), condition_(std::move(condition)) {}

Preorder Preorder::cone(std::size_t dim, std::vector<RandomQuantity> generators) {
    auto impl = std::make_shared<ConePresentation>(dim, generators);
    Preorder p(std::move(impl), PreorderKind::Cone, Event::one(dim));
    p.generators_ = std::move(generators);
    return p;
}

Preorder Preorder::orthant(std::size_t dim) {
    return cone(dim, {});
}

Preorder Preorder::greatest(std::size_t dim) {
    return cone(dim, {embed_scalar(Rational(-1), dim)});
}

Preorder Preorder::from_assessment(const Assessment& a, std::size_t budget) {
    auto reduction = margin::reduce(a);
    if (reduction.witness) {
        throw InputError("assessment is incoherent");
    }
    if (margin::find_dutch_book(a, reduction.bets, budget)) {
        throw InputError("assessment is incoherent");
    }
    auto impl = std::make_shared<AssessmentPresentation>(margin::StrictCone(a.dim(), std::move(reduction.bets), budget));
    Preorder p(std::move(impl), PreorderKind::Assessment, Event::one(a.dim()));
    p.assessment_ = a;
    return p;
}

void Preorder::check_dim(const RandomQuantity& x) const {
    if (x.dim() != dim()) {
        throw InputError("quantity " + x.str() + " does not match preorder dimension " + std::to_string(dim()));
    }
}

bool Preorder::nonstrict(const RandomQuantity& x, const RandomQuantity& y) const {
    check_dim(x);
    check_dim(y);
    return impl_->member((y - x) * condition_);
}

bool Preorder::strict(const RandomQuantity& x, const RandomQuantity& y) const {
    check_dim(x);
    check_dim(y);
    return impl_->strict_member((y - x) * condition_);
}

bool Preorder::equivalent(const RandomQuantity& x, const RandomQuantity& y) const {
    return nonstrict(x, y) && nonstrict(y, x);
}

Preorder Preorder::conditional(const Event& c) const {
    if (c.dim() != dim()) {
        throw InputError("conditioning event has wrong dimension");
    }
    Preorder out(*this);
    out.condition_ = condition_ & c;
    return out;
}

ExtReal Preorder::sup_below(const RandomQuantity& x, const Event& c) const {
    check_dim(x);
    const Event w = c & condition_;
    return impl_->sup_shift(x * w, w);
}

ExtReal Preorder::inf_above(const RandomQuantity& x, const Event& c) const {
    check_dim(x);
    const Event w = c & condition_;
    return *ext_neg(impl_->sup_shift(-(x * w), w));
}

Preorder cone_from_relation(std::span<const QuantityPair> pairs, std::size_t dim) {
    std::vector<RandomQuantity> gens;
    gens.reserve(pairs.size());
    for (const auto& [x, y] : pairs) {
        gens.push_back(y - x);
    }
    return Preorder::cone(dim, std::move(gens));
}

Preorder cone_from_equivalences(std::span<const QuantityPair> pairs, std::size_t dim) {
    std::vector<RandomQuantity> gens;
    gens.reserve(2 * pairs.size());
    for (const auto& [x, y] : pairs) {
        gens.push_back(y - x);
        gens.push_back(x - y);
    }
    return Preorder::cone(dim, std::move(gens));
}

Regularity classify(const Preorder& p) {
    const std::size_t n = p.dim();
    const RandomQuantity zero(n);
    const RandomQuantity one = embed_scalar(Rational(1), n);
    bool regular = p.strict(zero, one);
    for (std::size_t i = 0; i < n && regular; ++i) {
        regular = p.strict(zero, Event::atom(n, i).quantity());
    }
    if (regular) {
        return Regularity::Regular;
    }
    return p.equivalent(zero, one) ? Regularity::Degenerate : Regularity::Neither;
}

bool check_subadditivity(const Preorder& p, std::span<const Event> events) {
    const std::size_t n = p.dim();
    RandomQuantity sum(n);
    for (const auto& e : events) {
        sum += e.quantity();
    }
    return p.nonstrict(disjunction(events, n).quantity(), sum);
}

const char* to_string(Regularity r) {
    switch (r) {
    case Regularity::Regular: return "regular";
    case Regularity::Degenerate: return "degenerate";
    case Regularity::Neither: return "neither";
    }
    return "?";
}

} // namespace pk
