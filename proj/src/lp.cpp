#include "pk/lp.hpp"

#include "pk/errors.hpp"

#include <cstddef>
#include <limits>

namespace pk::lp {

std::size_t LinearProgram::add_variable(std::string name, bool nonnegative) {
    vars_.push_back(Variable{std::move(name), nonnegative});
    return vars_.size() - 1;
}

void LinearProgram::add_constraint(std::vector<Rational> coeffs, Relation rel, Rational rhs) {
    rows_.push_back(Constraint{std::move(coeffs), rel, std::move(rhs)});
}

void LinearProgram::set_objective(std::vector<Rational> coeffs, Sense sense) {
    obj_ = Objective{std::move(coeffs), sense};
}

void LinearProgram::check_well_formed() const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i].coeffs.size() != vars_.size()) {
            throw InputError("constraint " + std::to_string(i) + " has " + std::to_string(rows_[i].coeffs.size()) +
                             " coefficients, expected " + std::to_string(vars_.size()));
        }
    }
    if (obj_ && obj_->coeffs.size() != vars_.size()) {
        throw InputError("objective has wrong length");
    }
}

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Dense tableau in standard form A z = b, z >= 0, b >= 0.
class Tableau {
public:
    explicit Tableau(const LinearProgram& lp) : lp_(lp) {
        const auto& vars = lp.variables();
        const auto& rows = lp.constraints();
        m_ = rows.size();

        // Structural columns: one per nonnegative variable, a (+,-) pair per free one.
        pos_col_.resize(vars.size());
        neg_col_.assign(vars.size(), kNone);
        for (std::size_t k = 0; k < vars.size(); ++k) {
            pos_col_[k] = ncols_++;
            if (!vars[k].nonnegative) {
                neg_col_[k] = ncols_++;
            }
        }
        structural_end_ = ncols_;

        slack_col_.assign(m_, kNone);
        for (std::size_t i = 0; i < m_; ++i) {
            if (rows[i].rel != Relation::Equal) {
                slack_col_[i] = ncols_++;
            }
        }

        row_sign_.assign(m_, 1);
        init_col_.assign(m_, kNone);
        basis_.assign(m_, kNone);
        t_.assign(m_, std::vector<mpq_class>());
        b_.resize(m_);
        artificial_begin_ = ncols_;

        for (std::size_t i = 0; i < m_; ++i) {
            const auto& row = rows[i];
            row_sign_[i] = row.rhs.sign() < 0 ? -1 : 1;
            const bool slack_is_basic = row.rel != Relation::Equal &&
                                        ((row.rel == Relation::LessEq) == (row_sign_[i] > 0));
            if (slack_is_basic) {
                init_col_[i] = slack_col_[i];
            } else {
                init_col_[i] = ncols_++;
            }
        }

        for (std::size_t i = 0; i < m_; ++i) {
            const auto& row = rows[i];
            auto& tr = t_[i];
            tr.assign(ncols_, mpq_class(0));
            const int s = row_sign_[i];
            for (std::size_t k = 0; k < vars.size(); ++k) {
                const mpq_class& a = row.coeffs[k].raw();
                if (sgn(a) == 0) {
                    continue;
                }
                tr[pos_col_[k]] = s > 0 ? a : mpq_class(-a);
                if (neg_col_[k] != kNone) {
                    tr[neg_col_[k]] = s > 0 ? mpq_class(-a) : a;
                }
            }
            if (slack_col_[i] != kNone) {
                const int slack = row.rel == Relation::LessEq ? 1 : -1;
                tr[slack_col_[i]] = slack * s;
            }
            if (init_col_[i] >= artificial_begin_) {
                tr[init_col_[i]] = 1;
            }
            b_[i] = s > 0 ? row.rhs.raw() : mpq_class(-row.rhs.raw());
            basis_[i] = init_col_[i];
        }
    }

    LpOutcome run() {
        // Phase I: minimize the sum of artificials.
        std::vector<mpq_class> phase1(ncols_, mpq_class(0));
        for (std::size_t j = artificial_begin_; j < ncols_; ++j) {
            phase1[j] = 1;
        }
        load_costs(phase1);
        const std::size_t stuck = iterate(ncols_);
        (void)stuck; // phase I is bounded below by zero

        mpq_class infeasibility = 0;
        for (std::size_t i = 0; i < m_; ++i) {
            infeasibility += phase1[basis_[i]] * b_[i];
        }
        if (sgn(infeasibility) > 0) {
            return farkas(phase1);
        }

        drive_out_artificials();

        const auto& obj = lp_.objective();
        if (!obj) {
            return Optimal{Rational(0), primal_point()};
        }

        std::vector<mpq_class> phase2(ncols_, mpq_class(0));
        const bool maximize = obj->sense == Sense::Maximize;
        for (std::size_t k = 0; k < obj->coeffs.size(); ++k) {
            const mpq_class c = maximize ? mpq_class(-obj->coeffs[k].raw()) : obj->coeffs[k].raw();
            phase2[pos_col_[k]] = c;
            if (neg_col_[k] != kNone) {
                phase2[neg_col_[k]] = -c;
            }
        }
        load_costs(phase2);
        const std::size_t unbounded_col = iterate(artificial_begin_);
        if (unbounded_col != kNone) {
            return Unbounded{primal_point(), ray(unbounded_col)};
        }

        auto point = primal_point();
        Rational value(0);
        for (std::size_t k = 0; k < point.size(); ++k) {
            value += obj->coeffs[k] * point[k];
        }
        return Optimal{std::move(value), std::move(point)};
    }

private:
    void load_costs(const std::vector<mpq_class>& c) {
        d_ = c;
        for (std::size_t i = 0; i < m_; ++i) {
            const mpq_class& cb = c[basis_[i]];
            if (sgn(cb) == 0) {
                continue;
            }
            const auto& tr = t_[i];
            for (std::size_t j = 0; j < ncols_; ++j) {
                if (sgn(tr[j]) != 0) {
                    d_[j] -= cb * tr[j];
                }
            }
        }
    }

    // Runs Bland pivots among columns [0, limit). Returns kNone at optimality,
    // otherwise the entering column that proves unboundedness.
    std::size_t iterate(std::size_t limit) {
        for (;;) {
            std::size_t enter = kNone;
            for (std::size_t j = 0; j < limit; ++j) {
                if (sgn(d_[j]) < 0) {
                    enter = j;
                    break;
                }
            }
            if (enter == kNone) {
                return kNone;
            }
            std::size_t leave = kNone;
            mpq_class best;
            for (std::size_t i = 0; i < m_; ++i) {
                if (sgn(t_[i][enter]) <= 0) {
                    continue;
                }
                mpq_class ratio = b_[i] / t_[i][enter];
                if (leave == kNone || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
                    leave = i;
                    best = std::move(ratio);
                }
            }
            if (leave == kNone) {
                return enter;
            }
            pivot(leave, enter);
        }
    }

    void pivot(std::size_t r, std::size_t c) {
        auto& pr = t_[r];
        const mpq_class inv = 1 / pr[c];
        for (std::size_t j = 0; j < ncols_; ++j) {
            if (sgn(pr[j]) != 0) {
                pr[j] *= inv;
            }
        }
        b_[r] *= inv;
        for (std::size_t i = 0; i < m_; ++i) {
            if (i == r || sgn(t_[i][c]) == 0) {
                continue;
            }
            const mpq_class f = t_[i][c];
            auto& ti = t_[i];
            for (std::size_t j = 0; j < ncols_; ++j) {
                if (sgn(pr[j]) != 0) {
                    ti[j] -= f * pr[j];
                }
            }
            b_[i] -= f * b_[r];
        }
        if (sgn(d_[c]) != 0) {
            const mpq_class f = d_[c];
            for (std::size_t j = 0; j < ncols_; ++j) {
                if (sgn(pr[j]) != 0) {
                    d_[j] -= f * pr[j];
                }
            }
        }
        basis_[r] = c;
    }

    void drive_out_artificials() {
        for (std::size_t i = 0; i < m_; ++i) {
            if (basis_[i] < artificial_begin_) {
                continue;
            }
            for (std::size_t j = 0; j < artificial_begin_; ++j) {
                if (sgn(t_[i][j]) != 0) {
                    pivot(i, j);
                    break;
                }
            }
            // A row with no structural entries is redundant; its artificial
            // stays basic at level zero and no later pivot can touch it.
        }
    }

    LpOutcome farkas(const std::vector<mpq_class>& phase1) const {
        // At phase-I optimality the duals are y'_i = c_k - d_k on the initial
        // identity column k of row i; undo the rhs sign normalization.
        std::vector<Rational> y(m_);
        for (std::size_t i = 0; i < m_; ++i) {
            const std::size_t k = init_col_[i];
            mpq_class yi = phase1[k] - d_[k];
            if (row_sign_[i] < 0) {
                yi = -yi;
            }
            y[i] = Rational(std::move(yi));
        }
        return Infeasible{std::move(y)};
    }

    std::vector<Rational> primal_point() const {
        std::vector<mpq_class> z(ncols_, mpq_class(0));
        for (std::size_t i = 0; i < m_; ++i) {
            z[basis_[i]] = b_[i];
        }
        return to_original(z);
    }

    std::vector<Rational> ray(std::size_t enter) const {
        std::vector<mpq_class> z(ncols_, mpq_class(0));
        z[enter] = 1;
        for (std::size_t i = 0; i < m_; ++i) {
            z[basis_[i]] = -t_[i][enter];
        }
        return to_original(z);
    }

    std::vector<Rational> to_original(const std::vector<mpq_class>& z) const {
        std::vector<Rational> x(pos_col_.size());
        for (std::size_t k = 0; k < pos_col_.size(); ++k) {
            mpq_class v = z[pos_col_[k]];
            if (neg_col_[k] != kNone) {
                v -= z[neg_col_[k]];
            }
            x[k] = Rational(std::move(v));
        }
        return x;
    }

    const LinearProgram& lp_;
    std::size_t m_ = 0;
    std::size_t ncols_ = 0;
    std::size_t structural_end_ = 0;
    std::size_t artificial_begin_ = 0;
    std::vector<std::size_t> pos_col_;
    std::vector<std::size_t> neg_col_;
    std::vector<std::size_t> slack_col_;
    std::vector<std::size_t> init_col_;
    std::vector<std::size_t> basis_;
    std::vector<int> row_sign_;
    std::vector<std::vector<mpq_class>> t_;
    std::vector<mpq_class> b_;
    std::vector<mpq_class> d_;
};

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    Rational s(0);
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (!a[k].is_zero() && !b[k].is_zero()) {
            s += a[k] * b[k];
        }
    }
    return s;
}

bool satisfies(Relation rel, const Rational& lhs, const Rational& rhs) {
    switch (rel) {
    case Relation::LessEq: return lhs <= rhs;
    case Relation::Equal: return lhs == rhs;
    case Relation::GreaterEq: return lhs >= rhs;
    }
    return false;
}

bool feasible(const LinearProgram& lp, const std::vector<Rational>& x) {
    if (x.size() != lp.num_variables()) {
        return false;
    }
    for (std::size_t k = 0; k < x.size(); ++k) {
        if (lp.variables()[k].nonnegative && x[k].sign() < 0) {
            return false;
        }
    }
    for (const auto& row : lp.constraints()) {
        if (!satisfies(row.rel, dot(row.coeffs, x), row.rhs)) {
            return false;
        }
    }
    return true;
}

} // namespace

LpOutcome solve(const LinearProgram& problem) {
    problem.check_well_formed();
    Tableau tableau(problem);
    return tableau.run();
}

bool validate(const LinearProgram& problem, const LpOutcome& outcome) {
    const auto& vars = problem.variables();
    const auto& rows = problem.constraints();
    const auto& obj = problem.objective();

    if (const auto* opt = std::get_if<Optimal>(&outcome)) {
        if (!feasible(problem, opt->point)) {
            return false;
        }
        const Rational value = obj ? dot(obj->coeffs, opt->point) : Rational(0);
        return value == opt->value;
    }
    if (const auto* unb = std::get_if<Unbounded>(&outcome)) {
        if (!obj || !feasible(problem, unb->point) || unb->ray.size() != vars.size()) {
            return false;
        }
        for (std::size_t k = 0; k < vars.size(); ++k) {
            if (vars[k].nonnegative && unb->ray[k].sign() < 0) {
                return false;
            }
        }
        for (const auto& row : rows) {
            if (!satisfies(row.rel, dot(row.coeffs, unb->ray), Rational(0))) {
                return false;
            }
        }
        const int gain = dot(obj->coeffs, unb->ray).sign();
        return obj->sense == Sense::Maximize ? gain > 0 : gain < 0;
    }
    const auto& inf = std::get<Infeasible>(outcome);
    if (inf.farkas.size() != rows.size()) {
        return false;
    }
    std::vector<Rational> combined(vars.size(), Rational(0));
    Rational rhs(0);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const Rational& y = inf.farkas[i];
        if ((rows[i].rel == Relation::GreaterEq && y.sign() < 0) || (rows[i].rel == Relation::LessEq && y.sign() > 0)) {
            return false;
        }
        if (y.is_zero()) {
            continue;
        }
        for (std::size_t k = 0; k < vars.size(); ++k) {
            combined[k] += y * rows[i].coeffs[k];
        }
        rhs += y * rows[i].rhs;
    }
    for (std::size_t k = 0; k < vars.size(); ++k) {
        const int s = combined[k].sign();
        if (vars[k].nonnegative ? s > 0 : s != 0) {
            return false;
        }
    }
    return rhs.sign() > 0;
}

bool is_optimal(const LpOutcome& o) { return std::holds_alternative<Optimal>(o); }
bool is_unbounded(const LpOutcome& o) { return std::holds_alternative<Unbounded>(o); }
bool is_infeasible(const LpOutcome& o) { return std::holds_alternative<Infeasible>(o); }

} // namespace pk::lp
