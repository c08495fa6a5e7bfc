#pragma once

/**
 * @file axioms.hpp
 * @brief Plausible-value tables under three classical axiom systems.
 *
 * Kolmogorovian: PV on a set F of events closed under negation and
 * conjunction, nonnegative, PV(1) = 1, additive on disjoint pairs.
 * Coxian: PV on F x F0, nonnegative, PV(C|C) > 0, PV(1-A|C) = 1 - PV(A|C),
 * PV(A.C|D) = PV(A|C.D) PV(C|D) whenever C.D != 0.
 * Dupre-Tiplerian: partial PV on T x Cond with Cond closed under
 * disjunction; every event has a nonnegative value under every condition,
 * PV(C|C) > 0, homogeneity, additivity and Bayes' rule among listed entries.
 */

#include "pk/algebra.hpp"
#include "pk/assessment.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace pk {

enum class AxiomSystem { Kolmogorov, Cox, DupreTipler };

std::string_view to_string(AxiomSystem s);
/// "kolmogorov", "cox", "dupre-tipler"; throws InputError otherwise.
AxiomSystem axiom_system_from_name(std::string_view name);

struct TableEntry {
    RandomQuantity x;
    Event given;
    Rational value;
};

struct PlausibleValueTable {
    AxiomSystem system = AxiomSystem::Kolmogorov;
    std::size_t dim = 0;
    std::vector<TableEntry> entries;
    /// Dupre-Tiplerian condition set; when empty the listed conditions are used.
    std::vector<Event> conditions;
};

struct AxiomReport {
    bool valid = true;
    /// Name of the first failing axiom, empty when valid.
    std::string axiom;
    std::string instance;
    /// Derived facts that failed; nonempty only if the checker is inconsistent.
    std::vector<std::string> diagnostics;
};

AxiomReport kolmogorov_check(const PlausibleValueTable& t);
/// Throws InputError when F is not closed or the table is not total on F x F0.
AxiomReport cox_check(const PlausibleValueTable& t);
/// Throws InputError when the condition set is not closed under disjunction.
AxiomReport dt_check(const PlausibleValueTable& t);
/// Dispatches on t.system.
AxiomReport check_axioms(const PlausibleValueTable& t);

/// Each entry (X, C, v) becomes the assessment claim E(X|C) = v.
Assessment to_assessment(const PlausibleValueTable& t);

} // namespace pk
