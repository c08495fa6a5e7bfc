#include "pk/cli.hpp"

#include "pk/document.hpp"
#include "pk/errors.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace pk {

namespace {

std::string read_input(const std::string& path) {
    if (path == "-") {
        return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot open " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Options {
    std::string file;
    std::string x;
    std::string given;
    std::string system;
    bool decimal = false;
    bool oracle = false;
    std::size_t trials = 100;
    std::uint64_t seed = 0;
};

void emit(std::ostream& out, const json& j) {
    out << j.dump(2) << "\n";
}

Event given_event(const Options& o, std::size_t dim) {
    return o.given.empty() ? Event::one(dim) : event_from_list(o.given, dim);
}

int cmd_check(const Options& o, std::ostream& out) {
    const std::size_t budget = margin::subset_budget_from_env();
    const ProblemDocument doc = parse_document(read_input(o.file), budget);
    if (!doc.assessment) {
        throw InputError("document has no assessment entries");
    }
    const CoherenceResult r = check_coherence(*doc.assessment, budget);
    emit(out, to_json(r));
    return r.coherent ? kExitOk : kExitNegative;
}

int cmd_expect(const Options& o, std::ostream& out, bool extension_only) {
    const std::size_t budget = margin::subset_budget_from_env();
    const ProblemDocument doc = parse_document(read_input(o.file), budget);
    const RandomQuantity x = quantity_from_list(o.x, doc.dim);
    const Event c = given_event(o, doc.dim);
    json result;
    if (!extension_only && doc.preorder) {
        const ExpectationResult r = conditional_expectation(*doc.preorder, x, c);
        result = to_json(r, o.decimal);
        if (o.oracle) {
            if (doc.preorder->kind() != PreorderKind::Cone || doc.dim > oracle::kMaxExpectationDim ||
                doc.preorder->generators().size() > oracle::kMaxGenerators) {
                result["oracle"] = {{"skipped", "outside oracle scale"}};
            } else {
                const ExpectationResult check = oracle::oracle_expectation(*doc.preorder, x, c);
                result["oracle"] = to_json(check);
                result["oracle"]["agrees"] = check == r;
            }
        }
    } else if (doc.assessment) {
        result = to_json(extend(*doc.assessment, x, c, budget), o.decimal);
        if (o.oracle) {
            result["oracle"] = {{"skipped", "assessment preorder"}};
        }
    } else {
        throw InputError(extension_only ? "document has no assessment entries"
                                        : "document has neither a preorder nor assessment entries");
    }
    emit(out, result);
    return kExitOk;
}

int cmd_rules(const Options& o, std::ostream& out) {
    const std::size_t budget = margin::subset_budget_from_env();
    const ProblemDocument doc = parse_document(read_input(o.file), budget);
    std::optional<Preorder> p = doc.preorder;
    if (!p && doc.assessment) {
        p = Preorder::from_assessment(*doc.assessment, budget);
    }
    if (!p) {
        throw InputError("document has neither a preorder nor assessment entries");
    }
    const FuzzReport report = fuzz_rules(*p, o.trials, o.seed);
    emit(out, to_json(report));
    return report.total_violations() == 0 ? kExitOk : kExitNegative;
}

int cmd_axioms(const Options& o, std::ostream& out) {
    const ProblemDocument doc = parse_document(read_input(o.file), margin::subset_budget_from_env());
    if (!doc.table) {
        throw InputError("document has no table");
    }
    PlausibleValueTable t = *doc.table;
    if (!o.system.empty()) {
        t.system = axiom_system_from_name(o.system);
    }
    const AxiomReport r = check_axioms(t);
    json j = to_json(r);
    j["system"] = std::string(to_string(t.system));
    emit(out, j);
    return r.valid ? kExitOk : kExitNegative;
}

int cmd_atoms(const Options& o, std::ostream& out) {
    const ProblemDocument doc = parse_document(read_input(o.file), margin::subset_budget_from_env());
    json atoms = json::array();
    for (const auto& a : atoms_of(doc.events, doc.dim)) {
        atoms.push_back(to_json(a));
    }
    emit(out, {{"atoms", std::move(atoms)}});
    return kExitOk;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact plausible-preorder and coherence toolkit", "pk"};
    app.require_subcommand(1);
    Options o;

    auto* check = app.add_subcommand("check", "Decide coherence of the document's assessment");
    check->add_option("file", o.file, "Problem document (- for stdin)")->required();

    auto add_expect = [&](const char* name, const char* help) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("file", o.file, "Problem document (- for stdin)")->required();
        sub->add_option("--x", o.x, "Random quantity, comma-separated rationals")->required();
        sub->add_option("--given", o.given, "Conditioning event, comma-separated 0/1 (default: sure event)");
        sub->add_flag("--decimal", o.decimal, "Also print inexact decimal approximations");
        return sub;
    };
    auto* expect = add_expect("expect", "Conditional expectation under the document's preorder");
    expect->add_flag("--oracle", o.oracle, "Cross-check with the elimination oracle");
    auto* ext = add_expect("extend", "Conditional expectation extending the document's assessment");

    auto* rules = app.add_subcommand("rules", "Sweep the expectation rules over sampled arguments");
    rules->add_option("file", o.file, "Problem document (- for stdin)")->required();
    rules->add_option("--trials", o.trials, "Number of sampled argument sets")->check(CLI::PositiveNumber);
    rules->add_option("--seed", o.seed, "Sampler seed");

    auto* axioms = app.add_subcommand("axioms", "Check the document's plausible-value table");
    axioms->add_option("file", o.file, "Problem document (- for stdin)")->required();
    axioms->add_option("--system", o.system, "kolmogorov, cox or dupre-tipler (default: the table's tag)");

    auto* atoms = app.add_subcommand("atoms", "Atoms of the algebra generated by the document's events");
    atoms->add_option("file", o.file, "Problem document (- for stdin)")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (check->parsed()) {
            return cmd_check(o, out);
        }
        if (expect->parsed()) {
            return cmd_expect(o, out, false);
        }
        if (ext->parsed()) {
            return cmd_expect(o, out, true);
        }
        if (rules->parsed()) {
            return cmd_rules(o, out);
        }
        if (axioms->parsed()) {
            return cmd_axioms(o, out);
        }
        if (atoms->parsed()) {
            return cmd_atoms(o, out);
        }
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const ResourceLimit& e) {
        err << "resource limit: " << e.what() << "\n";
        return kExitResource;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitInput;
}

} // namespace pk
