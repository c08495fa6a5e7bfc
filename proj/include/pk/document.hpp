#pragma once

/**
 * @file document.hpp
 * @brief JSON problem documents and the JSON rendering of results.
 *
 * Numbers are exact: rationals are written as strings ("1/2", "-3", "inf")
 * and plain JSON integers are accepted on input; JSON floats are rejected.
 * Events are arrays of 0/1 integers.
 *
 *   {
 *     "dim": 2,
 *     "preorder": {"type": "cone", "dim": 2, "generators": [["1", "-1"]]},
 *     "entries": [{"x": ["1", "0"], "given": [1, 1], "value": "1/2"}],
 *     "table": {"system": "kolmogorov", "entries": [...], "conditions": [...]},
 *     "events": [[1, 1, 0], [0, 1, 1]]
 *   }
 *
 * "entries" may also appear as "assessment": {"entries": [...]}; "given"
 * defaults to the sure event.
 */

#include "pk/algebra.hpp"
#include "pk/assessment.hpp"
#include "pk/axioms.hpp"
#include "pk/coherence.hpp"
#include "pk/expectation.hpp"
#include "pk/oracle.hpp"
#include "pk/preorder.hpp"
#include "pk/rules.hpp"

#include "json.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace pk {

using json = nlohmann::json;

struct ProblemDocument {
    std::size_t dim = 0;
    std::optional<Preorder> preorder;
    std::optional<Assessment> assessment;
    std::optional<PlausibleValueTable> table;
    std::vector<Event> events;
};

/// Throws InputError on malformed input, ResourceLimit when an assessment
/// preorder exceeds the budget.
ProblemDocument parse_document(std::string_view text, std::size_t budget = margin::kDefaultSubsetBudget);
ProblemDocument document_from_json(const json& doc, std::size_t budget = margin::kDefaultSubsetBudget);

Rational rational_from_json(const json& j);
ExtReal ext_real_from_json(const json& j);
RandomQuantity quantity_from_json(const json& j, std::size_t dim);
Event event_from_json(const json& j, std::size_t dim);
/// "3,5" or "1/2,-1" style lists from the command line.
RandomQuantity quantity_from_list(std::string_view text, std::size_t dim);
Event event_from_list(std::string_view text, std::size_t dim);

json to_json(const RandomQuantity& x);
json to_json(const Event& e);
json to_json(const Assessment& a);
json to_json(const Preorder& p);
json to_json(const Witness& w);
json to_json(const CoherenceResult& r);
/// With `decimal`, adds an approximate rendering under "decimal".
json to_json(const ExpectationResult& r, bool decimal = false);
json to_json(const AxiomReport& r);
json to_json(const FuzzReport& r);
json to_json(const oracle::InequalityDescription& d);

} // namespace pk
