#include "pk/document.hpp"

#include "pk/errors.hpp"

#include <string>

namespace pk {

namespace {

const json& require(const json& obj, const char* key, const char* where) {
    if (!obj.is_object() || !obj.contains(key)) {
        throw InputError(std::string(where) + ": missing \"" + key + "\"");
    }
    return obj.at(key);
}

std::size_t dim_from_json(const json& j) {
    if (!j.is_number_unsigned() && !j.is_number_integer()) {
        throw InputError("\"dim\" must be a positive integer");
    }
    const auto v = j.get<long long>();
    if (v < 1) {
        throw InputError("\"dim\" must be a positive integer");
    }
    return static_cast<std::size_t>(v);
}

std::size_t section_dim(const json& section, std::size_t outer, const char* where) {
    if (section.contains("dim")) {
        const std::size_t d = dim_from_json(section.at("dim"));
        if (outer != 0 && d != outer) {
            throw InputError(std::string(where) + ": dimension " + std::to_string(d) + " differs from document dimension " +
                             std::to_string(outer));
        }
        return d;
    }
    if (outer == 0) {
        throw InputError(std::string(where) + ": no dimension given");
    }
    return outer;
}

Assessment assessment_from_json(const json& entries, std::size_t dim) {
    if (!entries.is_array()) {
        throw InputError("\"entries\" must be an array");
    }
    Assessment a(dim);
    for (const auto& e : entries) {
        const RandomQuantity x = quantity_from_json(require(e, "x", "entry"), dim);
        const Event given = e.contains("given") ? event_from_json(e.at("given"), dim) : Event::one(dim);
        a.add(x, given, ext_real_from_json(require(e, "value", "entry")));
    }
    return a;
}

Preorder preorder_base_from_json(const json& j, std::size_t dim, std::size_t budget);

Preorder preorder_from_json(const json& j, std::size_t outer, std::size_t budget) {
    const std::size_t dim = section_dim(j, outer, "preorder");
    Preorder p = preorder_base_from_json(j, dim, budget);
    if (j.contains("condition")) {
        p = p.conditional(event_from_json(j.at("condition"), dim));
    }
    return p;
}

Preorder preorder_base_from_json(const json& j, std::size_t dim, std::size_t budget) {
    const json& type = require(j, "type", "preorder");
    if (!type.is_string()) {
        throw InputError("preorder type must be a string");
    }
    const auto t = type.get<std::string>();
    if (t == "cone") {
        std::vector<RandomQuantity> gens;
        if (j.contains("generators")) {
            const json& g = j.at("generators");
            if (!g.is_array()) {
                throw InputError("\"generators\" must be an array");
            }
            for (const auto& v : g) {
                gens.push_back(quantity_from_json(v, dim));
            }
        }
        return Preorder::cone(dim, std::move(gens));
    }
    if (t == "assessment") {
        return Preorder::from_assessment(assessment_from_json(require(j, "entries", "preorder"), dim), budget);
    }
    throw InputError("unknown preorder type: " + t);
}

PlausibleValueTable table_from_json(const json& j, std::size_t outer) {
    PlausibleValueTable t;
    t.dim = section_dim(j, outer, "table");
    const json& sys = require(j, "system", "table");
    if (!sys.is_string()) {
        throw InputError("table system must be a string");
    }
    t.system = axiom_system_from_name(sys.get<std::string>());
    const json& entries = require(j, "entries", "table");
    if (!entries.is_array()) {
        throw InputError("table entries must be an array");
    }
    for (const auto& e : entries) {
        TableEntry entry{quantity_from_json(require(e, "x", "table entry"), t.dim),
                         e.contains("given") ? event_from_json(e.at("given"), t.dim) : Event::one(t.dim),
                         rational_from_json(require(e, "value", "table entry"))};
        t.entries.push_back(std::move(entry));
    }
    if (j.contains("conditions")) {
        for (const auto& c : j.at("conditions")) {
            t.conditions.push_back(event_from_json(c, t.dim));
        }
    }
    return t;
}

std::vector<std::string_view> split(std::string_view text) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        const auto pos = text.find(',', start);
        out.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) {
            return out;
        }
        start = pos + 1;
    }
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && s.front() == ' ') {
        s.remove_prefix(1);
    }
    while (!s.empty() && s.back() == ' ') {
        s.remove_suffix(1);
    }
    return s;
}

json ext_json(const ExtReal& v) { return v.str(); }

json ext_decimal(const ExtReal& v) {
    if (v.is_finite()) {
        return v.value().to_double();
    }
    return v.str();
}

} // namespace

Rational rational_from_json(const json& j) {
    if (j.is_string()) {
        return Rational::parse(j.get<std::string>());
    }
    if (j.is_number_integer() || j.is_number_unsigned()) {
        return Rational(static_cast<long>(j.get<long long>()));
    }
    throw InputError("expected an exact number (string or integer), got " + j.dump());
}

ExtReal ext_real_from_json(const json& j) {
    if (j.is_string()) {
        return ExtReal::parse(j.get<std::string>());
    }
    return ExtReal(rational_from_json(j));
}

RandomQuantity quantity_from_json(const json& j, std::size_t dim) {
    if (!j.is_array() || j.size() != dim) {
        throw InputError("expected an array of " + std::to_string(dim) + " numbers, got " + j.dump());
    }
    std::vector<Rational> v;
    v.reserve(dim);
    for (const auto& c : j) {
        v.push_back(rational_from_json(c));
    }
    return RandomQuantity(std::move(v));
}

Event event_from_json(const json& j, std::size_t dim) {
    if (!j.is_array() || j.size() != dim) {
        throw InputError("expected an array of " + std::to_string(dim) + " 0/1 flags, got " + j.dump());
    }
    std::vector<bool> m;
    m.reserve(dim);
    for (const auto& c : j) {
        if (!c.is_number_integer() && !c.is_number_unsigned()) {
            throw InputError("event flags must be 0 or 1, got " + c.dump());
        }
        const auto v = c.get<long long>();
        if (v != 0 && v != 1) {
            throw InputError("event flags must be 0 or 1, got " + c.dump());
        }
        m.push_back(v == 1);
    }
    return Event(std::move(m));
}

RandomQuantity quantity_from_list(std::string_view text, std::size_t dim) {
    const auto parts = split(text);
    if (parts.size() != dim) {
        throw InputError("expected " + std::to_string(dim) + " comma-separated values, got \"" + std::string(text) + "\"");
    }
    std::vector<Rational> v;
    for (auto p : parts) {
        v.push_back(Rational::parse(trim(p)));
    }
    return RandomQuantity(std::move(v));
}

Event event_from_list(std::string_view text, std::size_t dim) {
    const RandomQuantity q = quantity_from_list(text, dim);
    return Event::from_quantity(q);
}

ProblemDocument parse_document(std::string_view text, std::size_t budget) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
    return document_from_json(doc, budget);
}

ProblemDocument document_from_json(const json& doc, std::size_t budget) {
    if (!doc.is_object()) {
        throw InputError("document must be a JSON object");
    }
    ProblemDocument out;
    if (doc.contains("dim")) {
        out.dim = dim_from_json(doc.at("dim"));
    }
    if (doc.contains("preorder")) {
        out.preorder = preorder_from_json(doc.at("preorder"), out.dim, budget);
        out.dim = out.preorder->dim();
    }
    if (doc.contains("entries") && doc.contains("assessment")) {
        throw InputError("give either \"entries\" or \"assessment\", not both");
    }
    if (doc.contains("entries")) {
        if (out.dim == 0) {
            throw InputError("assessment: no dimension given");
        }
        out.assessment = assessment_from_json(doc.at("entries"), out.dim);
    } else if (doc.contains("assessment")) {
        const json& a = doc.at("assessment");
        out.dim = section_dim(a, out.dim, "assessment");
        out.assessment = assessment_from_json(require(a, "entries", "assessment"), out.dim);
    }
    if (doc.contains("table")) {
        out.table = table_from_json(doc.at("table"), out.dim);
        out.dim = out.table->dim;
    }
    if (doc.contains("events")) {
        if (out.dim == 0) {
            throw InputError("events: no dimension given");
        }
        for (const auto& e : doc.at("events")) {
            out.events.push_back(event_from_json(e, out.dim));
        }
    }
    if (out.dim == 0) {
        throw InputError("document has no dimension");
    }
    return out;
}

json to_json(const RandomQuantity& x) {
    json out = json::array();
    for (const auto& c : x.components()) {
        out.push_back(c.str());
    }
    return out;
}

json to_json(const Event& e) {
    json out = json::array();
    for (std::size_t i = 0; i < e.dim(); ++i) {
        out.push_back(e.contains(i) ? 1 : 0);
    }
    return out;
}

json to_json(const Assessment& a) {
    json entries = json::array();
    for (const auto& e : a.entries()) {
        entries.push_back({{"x", to_json(e.x)}, {"given", to_json(e.given)}, {"value", e.value.str()}});
    }
    return {{"dim", a.dim()}, {"entries", std::move(entries)}};
}

json to_json(const Preorder& p) {
    json out;
    if (p.kind() == PreorderKind::Cone) {
        json gens = json::array();
        for (const auto& g : p.generators()) {
            gens.push_back(to_json(g));
        }
        out = {{"type", "cone"}, {"dim", p.dim()}, {"generators", std::move(gens)}};
    } else {
        out = to_json(*p.assessment());
        out["type"] = "assessment";
    }
    if (!p.condition().is_one()) {
        out["condition"] = to_json(p.condition());
    }
    return out;
}

json to_json(const Witness& w) {
    json events = json::array();
    for (const auto& t : w.event_terms) {
        events.push_back({{"q", t.q.str()}, {"event", to_json(t.event)}});
    }
    json bets = json::array();
    for (const auto& b : w.bet_terms) {
        bets.push_back({{"entry", b.entry}, {"r", b.r.str()}, {"s", b.s.str()}});
    }
    return {{"event_terms", std::move(events)}, {"bet_terms", std::move(bets)}};
}

json to_json(const CoherenceResult& r) {
    json out = {{"verdict", r.coherent ? "coherent" : "incoherent"}};
    if (r.witness) {
        out["witness"] = to_json(*r.witness);
    }
    return out;
}

json to_json(const ExpectationResult& r, bool decimal) {
    json out = {{"defined", r.defined},
                {"value", r.defined ? ext_json(r.value) : json(nullptr)},
                {"lower", ext_json(r.lower)},
                {"upper", ext_json(r.upper)}};
    if (decimal) {
        out["decimal"] = {{"inexact", true},
                          {"value", r.defined ? ext_decimal(r.value) : json(nullptr)},
                          {"lower", ext_decimal(r.lower)},
                          {"upper", ext_decimal(r.upper)}};
    }
    return out;
}

json to_json(const AxiomReport& r) {
    json out = {{"valid", r.valid}, {"diagnostics", r.diagnostics}};
    if (!r.valid) {
        out["axiom"] = r.axiom;
        out["instance"] = r.instance;
    }
    return out;
}

json to_json(const FuzzReport& r) {
    json rules = json::object();
    for (std::size_t i = 0; i < kRuleCount; ++i) {
        const auto& t = r.per_rule[i];
        rules[std::string(rule_name(all_rules()[i]))] = {
            {"holds", t.holds}, {"precondition_unmet", t.unmet}, {"violations", t.violations}};
    }
    return {{"trials", r.trials}, {"seed", r.seed}, {"rules", std::move(rules)}, {"violations", r.violations}};
}

json to_json(const oracle::InequalityDescription& d) {
    json rows = json::array();
    for (const auto& row : d.rows) {
        json r = json::array();
        for (const auto& c : row) {
            r.push_back(c.str());
        }
        rows.push_back(std::move(r));
    }
    return {{"dim", d.dim}, {"rows", std::move(rows)}};
}

} // namespace pk
