#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "mvspec/dsl.hpp"
#include "mvspec/errors.hpp"
#include "mvspec/filters.hpp"
#include "mvspec/harness.hpp"
#include "mvspec/render.hpp"
#include "mvspec/report.hpp"
#include "mvspec/spectrum.hpp"

namespace mvspec::cli {

namespace {

/// Bad invocation detected after option parsing; maps to exit 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string readFile(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void writeOutput(const std::string& path, const std::string& text, std::ostream& out) {
    if (path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot write " + path);
    f << text;
}

/// Parses and evaluates a file. Parse errors become "path:line:col: msg".
dsl::Environment load(const std::string& path, dsl::EvalOptions options = {}) {
    const std::string text = readFile(path);
    try {
        return dsl::evaluate(dsl::parse(text), options);
    } catch (const ParseError& e) {
        throw UsageError(path + ":" + e.what());
    }
}

AlgebraPtr lookupAlgebra(const dsl::Environment& env, const std::string& name) {
    auto it = env.algebras.find(name);
    if (it == env.algebras.end()) throw UsageError("no algebra named '" + name + "'");
    return it->second;
}

const char* yesNo(bool b) { return b ? "yes" : "no"; }

std::string kindList(const FilterClassification& c) {
    std::vector<std::string> kinds;
    if (c.orderFilter()) kinds.push_back("order filter");
    if (c.latticeFilter()) kinds.push_back("lattice filter");
    if (c.implicationFilter()) kinds.push_back("implication filter");
    if (c.prime) kinds.push_back("prime");
    if (kinds.empty()) return "none";
    std::string s;
    for (std::size_t i = 0; i < kinds.size(); ++i) s += (i ? ", " : "") + kinds[i];
    return s;
}

void printFlags(const FilterClassification& c, std::ostream& out) {
    out << "flags: nonempty=" << yesNo(c.nonempty) << " up_closed=" << yesNo(c.up_closed)
        << " contains_top=" << yesNo(c.contains_top) << " meet_closed=" << yesNo(c.meet_closed)
        << " otimes_closed=" << yesNo(c.otimes_closed) << " prime=" << yesNo(c.prime) << " proper=" << yesNo(c.proper)
        << "\n";
}

int cmdCheck(const std::string& file, const std::string& only, std::ostream& out) {
    const auto env = load(file, dsl::EvalOptions{false});
    std::vector<std::string> names = env.algebra_order;
    if (!only.empty()) {
        lookupAlgebra(env, only);
        names = {only};
    }
    int code = kExitOk;
    for (const auto& name : names) {
        const auto& a = *env.algebras.at(name);
        const auto violations = checkAxioms(a);
        if (violations.empty()) {
            out << name << ": ok (" << a.size() << " elements)\n";
            continue;
        }
        code = kExitViolation;
        out << name << ": " << violations.size() << " axiom violation(s)\n";
        for (const auto& v : violations) out << "  " << describe(v) << "\n";
    }
    return code;
}

/// Why a set fails to be an order filter, with a witness where one exists.
std::string notOrderFilterReason(const Algebra& a, const ElementSet& f) {
    if (f.empty()) return "the set is empty";
    for (Element x : f.members())
        for (Element y : a.upSet(x).members())
            if (!f.contains(y)) return a.name(x) + " is in F and " + a.name(x) + " <= " + a.name(y) + ", but " + a.name(y) + " is not";
    return "not up-closed";
}

int cmdSpectrum(const std::string& file, const std::string& algebra_name, const std::string& filter_name,
                const std::string& dot_path, std::ostream& out) {
    const auto env = load(file);
    auto it = env.filters.find(filter_name);
    if (it == env.filters.end()) throw UsageError("no filter named '" + filter_name + "'");
    const AlgebraPtr alg = it->second.algebra;
    if (!algebra_name.empty() && lookupAlgebra(env, algebra_name) != alg)
        throw UsageError("filter '" + filter_name + "' is not defined on algebra '" + algebra_name + "'");
    const Algebra& a = *alg;
    const ElementSet& f = it->second.set;

    out << "algebra " << a.label() << " (" << a.size() << " elements)\n";
    out << "filter " << filter_name << " = " << formatSet(a, f) << "\n";
    const auto c = classify(a, f);
    out << "classification: " << kindList(c) << "\n";
    printFlags(c, out);
    if (!c.orderFilter()) {
        out << "not an order filter: " << notOrderFilterReason(a, f) << "\n";
        return kExitViolation;
    }

    const ElementSet k = kernel(a, f);
    out << "K(F) = " << formatSet(a, k) << "\n";
    out << "F+ = " << formatSet(a, plus(a, f)) << "\n";
    out << "L/K(F): " << quotientByImplicationFilter(alg, k).quotient.size() << " elements\n";
    const auto fam = subordinateFamily(a, f);
    out << "subordinate family: " << fam.members.size() << " member(s), "
        << (fam.isTotal() ? "totally ordered" : "not totally ordered") << "\n";
    for (const auto& [least, set] : fam.members) out << "  F_" << a.name(least) << " = " << formatSet(a, set) << "\n";
    out << "inclusions:\n";
    for (std::size_t i = 0; i < fam.members.size(); ++i)
        for (std::size_t j = 0; j < fam.members.size(); ++j)
            if (i != j && fam.included[i][j])
                out << "  " << formatSet(a, fam.members[i].second) << " < " << formatSet(a, fam.members[j].second) << "\n";
    if (!dot_path.empty()) writeOutput(dot_path, renderFamilyDot(a, fam), out);
    return kExitOk;
}

struct TheoremOptions {
    std::string file;
    std::string suite;
    std::vector<std::string> only;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    std::string json;
    bool timing = false;
    int threads = 0;
    bool serial = false;
};

void printReport(const StatementReport& r, std::ostream& out) {
    out << r.id << "  " << toString(r.variant) << "  " << r.mode << "  " << toString(r.status)
        << "  instances=" << r.instances << "  hits=" << r.hypothesis_hits;
    if (r.partial) out << "  (partial)";
    if (r.status == Status::Counterexample && r.expected_counterexample) out << "  [expected]";
    out << "\n";
    for (const auto& s : r.subcases) out << "    subcase " << s.name << ": " << s.count << "\n";
    for (const auto& s : r.vacuous_subcases) out << "    vacuous subcase: " << s << "\n";
    if (r.witness) {
        const auto& w = *r.witness;
        out << "    witness in " << w.algebra << ":";
        for (const auto& f : w.filters) out << " " << f;
        for (const auto& e : w.elements) out << " " << e;
        out << "\n";
        for (const auto& o : w.observed) out << "      " << o.name << " = " << o.value << "\n";
    }
}

int cmdTheorems(const TheoremOptions& opt, std::ostream& out) {
    SuiteConfig config;
    SuiteEcho echo;
    const bool builtin = opt.file.empty() || opt.suite == "builtin";
    if (!opt.suite.empty() && opt.suite != "builtin") throw UsageError("unknown suite '" + opt.suite + "'");
    if (builtin) config.algebras = defaultSuite();
    if (!opt.file.empty()) {
        const auto env = load(opt.file);
        for (const auto& name : env.algebra_order) {
            const auto& a = env.algebras.at(name);
            if (a->size() >= 2) config.algebras.push_back(a);
        }
        echo.source = builtin ? "builtin+" + opt.file : opt.file;
    }
    for (const auto& id : opt.only) {
        const auto& reg = registry();
        bool known = std::any_of(reg.begin(), reg.end(), [&](const Statement& s) {
            return s.id == id || s.id.rfind(id + "(", 0) == 0;
        });
        if (!known) throw UsageError("unknown statement '" + id + "'");
    }
    config.only = opt.only;
    config.samples = opt.samples;
    config.seed = opt.seed;
    config.threads = opt.threads;
    for (const auto& a : config.algebras) echo.algebras.push_back(a->label());
    echo.samples = opt.samples;
    echo.seed = opt.seed;
    echo.only = opt.only;

    const auto reports = runAll(config, opt.serial ? Execution::Serial : Execution::Parallel);
    std::size_t verified = 0, vacuous = 0, expected = 0, unexpected = 0;
    for (const auto& r : reports) {
        printReport(r, out);
        if (r.status == Status::Verified) ++verified;
        if (r.status == Status::Vacuous) ++vacuous;
        if (r.status == Status::Counterexample) ++(r.expected_counterexample ? expected : unexpected);
    }
    out << "summary: " << verified << " verified, " << expected + unexpected << " counterexample(s) (" << expected
        << " expected), " << vacuous << " vacuous\n";
    if (!opt.json.empty()) writeOutput(opt.json, reportJson(reports, echo, JsonOptions{opt.timing}), out);
    return unexpected ? kExitViolation : kExitOk;
}

int cmdListFilters(const std::string& file, const std::string& algebra_name, const std::string& kind, bool prime_only,
                   std::ostream& out) {
    const auto env = load(file);
    const AlgebraPtr alg = lookupAlgebra(env, algebra_name);
    const Algebra& a = *alg;
    std::vector<ElementSet> candidates =
        kind == "implication" ? implicationFiltersFromIdempotents(a) : enumerateOrderFilters(a);
    std::size_t count = 0;
    for (const auto& f : candidates) {
        const auto c = classify(a, f);
        if (kind == "lattice" && !c.latticeFilter()) continue;
        if (prime_only && !c.prime) continue;
        ++count;
        out << formatSet(a, f) << "  " << kindList(c) << "\n";
    }
    out << count << " filter(s)\n";
    return kExitOk;
}

int cmdRender(const std::string& file, const std::string& algebra_name, const std::string& filter_name,
              const std::string& dot_path, std::ostream& out) {
    const auto env = load(file);
    const AlgebraPtr alg = lookupAlgebra(env, algebra_name);
    std::optional<ElementSet> highlight;
    if (!filter_name.empty()) {
        auto it = env.filters.find(filter_name);
        if (it == env.filters.end()) throw UsageError("no filter named '" + filter_name + "'");
        if (it->second.algebra != alg)
            throw UsageError("filter '" + filter_name + "' is not defined on algebra '" + algebra_name + "'");
        highlight = it->second.set;
    }
    writeOutput(dot_path, renderDot(*alg, highlight), out);
    return kExitOk;
}

int cmdSerialize(const std::string& file, const std::string& only, std::ostream& out) {
    const auto env = load(file);
    std::vector<std::string> names = env.algebra_order;
    if (!only.empty()) {
        lookupAlgebra(env, only);
        names = {only};
    }
    for (const auto& name : names) out << "algebra " << name << " = " << dsl::serializeAlgebra(*env.algebras.at(name)) << "\n";
    return kExitOk;
}

int cmdSuite(std::ostream& out) {
    const auto suite = defaultSuite();
    for (std::size_t i = 0; i < suite.size(); ++i) {
        std::string name = std::to_string(i + 1);
        name.insert(0, 2 - std::min<std::size_t>(2, name.size()), '0');
        out << "algebra S" << name << " = " << suite[i]->label() << "\n";
    }
    return kExitOk;
}

int cmdReplay(const std::string& report_path, const std::string& defs, std::ostream& out) {
    dsl::Environment env;
    if (!defs.empty()) env = load(defs);
    int code = kExitOk;
    const auto witnesses = witnessesFromJson(readFile(report_path));
    for (const auto& w : witnesses) {
        const Statement* s = findStatement(w.id, w.variant);
        if (!s) throw UsageError("unknown statement " + w.id + " (" + std::string(toString(w.variant)) + ")");
        const AlgebraPtr alg = dsl::evaluateExpression(*dsl::parseExpression(w.algebra), env);
        Instance inst;
        for (const auto& f : w.filters) inst.filters.push_back(dsl::resolveSet(*alg, dsl::parseElementSet(f)));
        for (const auto& e : w.elements) inst.elements.push_back(dsl::resolveElement(*alg, dsl::parseElement(e)));
        Observations obs;
        const Verdict v = replay(*s, prepareSamplingCase(alg), inst, &obs);
        out << w.id << " " << toString(w.variant) << ": " << (v.failed() ? "reproduced" : "NOT reproduced") << "\n";
        for (const auto& o : obs) out << "  " << o.name << " = " << o.value << "\n";
        if (!v.failed()) code = kExitViolation;
    }
    out << witnesses.size() << " witness(es) replayed\n";
    return code;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Finite MV-algebra filters, spectra and statement checking", "mvspec"};
    app.require_subcommand(1);

    std::string file, algebra, filter, dot, kind = "order", report, defs;
    bool prime = false;

    auto* check = app.add_subcommand("check", "Validate the MV axioms of every algebra in a file");
    check->add_option("file", file, "Definition file")->required();
    check->add_option("--algebra", algebra, "Check only this algebra");

    auto* spectrum = app.add_subcommand("spectrum", "Kernel, F+ and subordinate family of a filter");
    spectrum->add_option("file", file, "Definition file")->required();
    spectrum->add_option("--algebra", algebra, "Algebra the filter is defined on");
    spectrum->add_option("--filter", filter, "Filter name")->required();
    spectrum->add_option("--dot", dot, "Write the family inclusion diagram ('-' for stdout)");

    TheoremOptions topt;
    auto* theorems = app.add_subcommand("theorems", "Check the statement registry");
    theorems->add_option("file", topt.file, "Definition file supplying extra algebras");
    theorems->add_option("--suite", topt.suite, "Built-in suite")->check(CLI::IsMember({"builtin"}));
    theorems->add_option("--only", topt.only, "Statement ids to run")->delimiter(',');
    theorems->add_option("--samples", topt.samples, "Random samples per statement");
    theorems->add_option("--seed", topt.seed, "Random seed");
    theorems->add_option("--json", topt.json, "Write the JSON report ('-' for stdout)");
    theorems->add_flag("--timing", topt.timing, "Record elapsed_ms in the JSON report");
    theorems->add_option("--threads", topt.threads, "Thread cap (overrides MVSPEC_THREADS)")->check(CLI::NonNegativeNumber);
    theorems->add_flag("--serial", topt.serial, "Use the serial reference runner");

    auto* list = app.add_subcommand("list-filters", "Enumerate filters of an algebra");
    list->add_option("file", file, "Definition file")->required();
    list->add_option("--algebra", algebra, "Algebra name")->required();
    list->add_option("--kind", kind, "order, lattice or implication")
        ->check(CLI::IsMember({"order", "lattice", "implication"}));
    list->add_flag("--prime", prime, "Only prime filters");

    auto* render = app.add_subcommand("render", "Hasse diagram as DOT");
    render->add_option("file", file, "Definition file")->required();
    render->add_option("--algebra", algebra, "Algebra name")->required();
    render->add_option("--filter", filter, "Highlight this filter");
    render->add_option("--dot", dot, "Output path ('-' for stdout)")->required();

    auto* rep = app.add_subcommand("replay", "Re-evaluate the witnesses of a JSON report");
    rep->add_option("report", report, "JSON report")->required();
    rep->add_option("--defs", defs, "Definition file resolving algebra names");

    auto* ser = app.add_subcommand("serialize", "Print algebras in canonical table form");
    ser->add_option("file", file, "Definition file")->required();
    ser->add_option("--algebra", algebra, "Serialize only this algebra");

    auto* suite = app.add_subcommand("suite", "Print the built-in suite as definitions");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*check) return cmdCheck(file, algebra, out);
        if (*spectrum) return cmdSpectrum(file, algebra, filter, dot, out);
        if (*theorems) return cmdTheorems(topt, out);
        if (*list) return cmdListFilters(file, algebra, kind, prime, out);
        if (*render) return cmdRender(file, algebra, filter, dot, out);
        if (*rep) return cmdReplay(report, defs, out);
        if (*ser) return cmdSerialize(file, algebra, out);
        if (*suite) return cmdSuite(out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitViolation;
    }
    return kExitUsage;
}

}  // namespace mvspec::cli
