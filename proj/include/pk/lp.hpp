#pragma once

/**
 * @file lp.hpp
 * @brief Exact two-phase simplex over rationals.
 *
 * Bland's rule is used for both entering and leaving choices, so the method
 * terminates on degenerate problems. Every outcome carries a certificate
 * that can be re-checked by substitution with validate().
 *
 * Farkas convention: the certificate y has one multiplier per constraint,
 * y_i >= 0 on ">=" rows, y_i <= 0 on "<=" rows, free on "=" rows. Then
 * sum_i y_i (a_i . x) >= sum_i y_i b_i holds for every feasible x, and the
 * certificate proves infeasibility because the combined row is zero on free
 * variables, nonpositive on nonnegative variables, and y . b > 0.
 */

#include "pk/rational.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace pk::lp {

enum class Relation { LessEq, Equal, GreaterEq };
enum class Sense { Maximize, Minimize };

struct Variable {
    std::string name;
    bool nonnegative = false;
};

struct Constraint {
    std::vector<Rational> coeffs;
    Relation rel = Relation::LessEq;
    Rational rhs;
};

struct Objective {
    std::vector<Rational> coeffs;
    Sense sense = Sense::Maximize;
};

class LinearProgram {
public:
    LinearProgram() = default;

    std::size_t add_variable(std::string name, bool nonnegative);
    void add_constraint(std::vector<Rational> coeffs, Relation rel, Rational rhs);
    void set_objective(std::vector<Rational> coeffs, Sense sense);

    [[nodiscard]] const std::vector<Variable>& variables() const { return vars_; }
    [[nodiscard]] const std::vector<Constraint>& constraints() const { return rows_; }
    [[nodiscard]] const std::optional<Objective>& objective() const { return obj_; }
    [[nodiscard]] std::size_t num_variables() const { return vars_.size(); }

    /// Throws InputError if any row or the objective has the wrong length.
    void check_well_formed() const;

private:
    std::vector<Variable> vars_;
    std::vector<Constraint> rows_;
    std::optional<Objective> obj_;
};

struct Optimal {
    Rational value;
    std::vector<Rational> point;
};

/// The objective improves without bound along point + t * ray, t >= 0.
struct Unbounded {
    std::vector<Rational> point;
    std::vector<Rational> ray;
};

struct Infeasible {
    std::vector<Rational> farkas;
};

using LpOutcome = std::variant<Optimal, Unbounded, Infeasible>;

/// Solves exactly. Pure feasibility problems (no objective) report
/// Optimal with value 0 and a feasible point.
LpOutcome solve(const LinearProgram& problem);

/// Re-checks an outcome against the problem by direct substitution.
bool validate(const LinearProgram& problem, const LpOutcome& outcome);

bool is_optimal(const LpOutcome& o);
bool is_unbounded(const LpOutcome& o);
bool is_infeasible(const LpOutcome& o);

} // namespace pk::lp
