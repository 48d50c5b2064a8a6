#include <doctest.h>

#include <filesystem>

#include "mvspec/dsl.hpp"
#include "mvspec/errors.hpp"
#include "mvspec/harness.hpp"
#include "mvspec/render.hpp"
#include "mvspec/report.hpp"
#include "mvspec/spectrum.hpp"
#include "support.hpp"

using namespace mvspec;
using mvspec::testing::chains;
using mvspec::testing::fixture;
using mvspec::testing::readText;
using mvspec::testing::set;

namespace {

std::pair<std::size_t, std::size_t> parseErrorAt(const std::string& text) {
    try {
        dsl::evaluate(dsl::parse(text));
    } catch (const ParseError& e) {
        return {e.line(), e.column()};
    }
    return {0, 0};
}

std::size_t countOf(const std::string& text, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
    return n;
}

}  // namespace

TEST_CASE("parse produces the expected bindings") {
    const auto file = dsl::parse("algebra L3 = chain 3");
    REQUIRE(file.bindings.size() == 1);
    const auto& b = std::get<dsl::AlgebraBinding>(file.bindings[0]);
    CHECK(b.name == "L3");
    REQUIRE(std::holds_alternative<dsl::ChainExpr>(b.expr->node));
    CHECK(std::get<dsl::ChainExpr>(b.expr->node).length == 3);

    const auto two = dsl::parse("algebra B = product(chain 2, chain 2)\nfilter F on B = {(1,0),(1,1)}");
    REQUIRE(two.bindings.size() == 2);
    const auto& prod = std::get<dsl::AlgebraBinding>(two.bindings[0]);
    CHECK(std::get<dsl::ProductExpr>(prod.expr->node).factors.size() == 2);
    const auto& f = std::get<dsl::FilterBinding>(two.bindings[1]);
    CHECK(f.algebra == "B");
    REQUIRE(f.elements.size() == 2);
    CHECK(f.elements[0].tuple);
    CHECK(f.elements[0].parts == std::vector<std::size_t>{1, 0});
    CHECK(f.pos.line == 2);

    const auto env = dsl::evaluate(two);
    const auto& nf = env.filters.at("F");
    CHECK(nf.set == set(*nf.algebra, {"(1,0)", "(1,1)"}));
    CHECK(classify(*nf.algebra, nf.set).implicationFilter());
}

TEST_CASE("every production parses") {
    const auto env = dsl::evaluate(dsl::parse(readText(fixture("example.mv"))));
    CHECK(env.algebra_order == std::vector<std::string>{"L3", "L4", "B", "P", "I", "Q", "T"});
    CHECK(*env.algebras.at("L3") == chain(3));
    CHECK(*env.algebras.at("B") == chains({2, 2}));
    CHECK(env.algebras.at("B")->label() == "B");
    CHECK(findIsomorphism(*env.algebras.at("I"), chain(3)).has_value());
    CHECK(findIsomorphism(*env.algebras.at("Q"), chain(3)).has_value());
    CHECK(*env.algebras.at("T") == chain(2));
    CHECK(env.filters.size() == 8);
    CHECK(env.filters.at("Tail").set.count() == 4);
}

TEST_CASE("evaluation examples") {
    auto eval = [](const std::string& expr) { return dsl::evaluateExpression(*dsl::parseExpression(expr)); };
    CHECK(*eval("chain 3") == chain(3));
    CHECK(findIsomorphism(*eval("interval(chain 4, 1)"), chain(3)).has_value());
    const auto q = eval("quotient(product(chain 3, chain 2), {(2,0),(2,1)})");
    CHECK(q->size() == 3);
    CHECK(findIsomorphism(*q, chain(3)).has_value());
    CHECK(eval("product(chain 2, chain 3)")->factorSizes() == std::vector<std::size_t>{2, 3});
    // Nested products are flat in their own factors.
    CHECK(eval("product(product(chain 2, chain 2), chain 2)")->factorSizes() == std::vector<std::size_t>{4, 2});

    const auto [line, col] = parseErrorAt("algebra X = chain 1");
    CHECK(line == 1);
    CHECK(col == 13);
}

TEST_CASE("tuple literals resolve row-major") {
    const Algebra p = chains({3, 2, 4});
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 4; ++k) {
                dsl::ElemLiteral lit{{i, j, k}, true, {}};
                const Element x = dsl::resolveElement(p, lit);
                CHECK(x == i * 8 + j * 4 + k);
                CHECK(p.name(x) == "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")");
            }
    CHECK(dsl::resolveElement(p, dsl::parseElement("17")) == 17);
    CHECK_THROWS_AS(dsl::resolveElement(p, dsl::parseElement("24")), ParseError);
    CHECK_THROWS_AS(dsl::resolveElement(p, dsl::parseElement("(3,0,0)")), ParseError);
}

TEST_CASE("serialization") {
    CHECK(dsl::serializeAlgebra(chain(2)) == "table { size 2; neg 1 0; oplus 0 1 1 1 }");
    const Algebra b = chains({2, 2});
    const auto again = dsl::evaluateExpression(*dsl::parseExpression(dsl::serializeAlgebra(b)));
    CHECK(*again == b);
    CHECK(checkAxioms(*again).empty());
}

TEST_CASE("suite algebras round-trip through the golden files") {
    const auto suite = defaultSuite();
    const auto labels = dsl::evaluate(dsl::parse(readText(fixture("golden/suite.mv"))));
    const auto tables_text = readText(fixture("golden/suite_tables.mv"));
    const auto tables = dsl::evaluate(dsl::parse(tables_text));
    REQUIRE(labels.algebra_order.size() == suite.size());
    REQUIRE(tables.algebra_order.size() == suite.size());
    std::string regenerated;
    for (std::size_t i = 0; i < suite.size(); ++i) {
        const Algebra& a = *suite[i];
        CAPTURE(a.label());
        const auto& name = labels.algebra_order[i];
        CHECK(*labels.algebras.at(name) == a);
        CHECK(*tables.algebras.at(name) == a);
        // Labels are themselves definitions.
        CHECK(*dsl::evaluateExpression(*dsl::parseExpression(a.label())) == a);
        const auto text = dsl::serializeAlgebra(a);
        const auto reparsed = dsl::evaluateExpression(*dsl::parseExpression(text));
        CHECK(dsl::serializeAlgebra(*reparsed) == text);
        regenerated += "algebra " + name + " = " + text + "\n";
    }
    CHECK(regenerated == tables_text);
}

TEST_CASE("malformed fixtures report their location") {
    std::size_t seen = 0;
    for (const auto& entry : std::filesystem::directory_iterator(fixture("malformed"))) {
        const std::string text = readText(entry.path().string());
        CAPTURE(entry.path().filename().string());
        REQUIRE(text.rfind("# expect ", 0) == 0);
        const auto colon = text.find(':');
        const std::size_t line = std::stoul(text.substr(9, colon - 9));
        const std::size_t col = std::stoul(text.substr(colon + 1));
        const auto [got_line, got_col] = parseErrorAt(text);
        CHECK(got_line == line);
        CHECK(got_col == col);
        ++seen;
    }
    CHECK(seen >= 10);
}

TEST_CASE("parse errors") {
    CHECK(parseErrorAt("algebra L = chain 3\nfilter F on M = {1}") == std::pair<std::size_t, std::size_t>{2, 13});
    CHECK(parseErrorAt("algebra chain = chain 3") == std::pair<std::size_t, std::size_t>{1, 9});
    CHECK(parseErrorAt("algebra L = L") == std::pair<std::size_t, std::size_t>{1, 13});
    CHECK(parseErrorAt("algebra L = chain 3\nfilter L on L = {2}") == std::pair<std::size_t, std::size_t>{2, 8});
    CHECK(parseErrorAt("algebra L = chain 99999999") == std::pair<std::size_t, std::size_t>{1, 19});
    CHECK(parseErrorAt("algebra T = table { size 2; neg 0 0; oplus 0 1 1 1 }") == std::pair<std::size_t, std::size_t>{1, 13});
    CHECK(parseErrorAt("algebra L = chain 3 # trailing comment\n# only a comment\n") == std::pair<std::size_t, std::size_t>{0, 0});
    CHECK(parseErrorAt("") == std::pair<std::size_t, std::size_t>{0, 0});
    CHECK_THROWS_AS(dsl::parseExpression("chain 3 chain 4"), ParseError);
    CHECK(dsl::parseElementSet("{}").empty());
    CHECK_THROWS_AS(dsl::parse("algebra L = chain 3\nfilter F on L = {}"), ParseError);
}

TEST_CASE("unvalidated tables are kept for checking") {
    const auto text = readText(fixture("broken_neg.mv"));
    CHECK_THROWS_AS(dsl::evaluate(dsl::parse(text)), ParseError);
    const auto env = dsl::evaluate(dsl::parse(text), dsl::EvalOptions{false});
    CHECK_FALSE(checkAxioms(*env.algebras.at("Bad")).empty());
}

TEST_CASE("Hasse diagrams") {
    const auto c3 = renderDot(chain(3));
    CHECK(countOf(c3, "[label=") == 3);
    CHECK(countOf(c3, " -> ") == 2);
    CHECK(renderDot(chain(3).withLabel("L3")) == readText(fixture("golden/chain3.dot")));

    const Algebra b = chains({2, 2});
    const auto d = renderDot(b);
    CHECK(countOf(d, "[label=") == 4);
    CHECK(countOf(d, " -> ") == 4);
    CHECK(renderDot(b) == d);

    const auto h = renderDot(b, set(b, {"(1,0)", "(1,1)"}));
    CHECK(countOf(h, "fillcolor") == 2);
}

TEST_CASE("family diagram") {
    const Algebra c3 = chain(3);
    const auto dot = renderFamilyDot(c3, subordinateFamily(c3, ElementSet(3, {2})));
    CHECK(dot == readText(fixture("golden/family_top.dot")));
    CHECK(countOf(dot, " -> ") == 2);
    CHECK(dot.find("\"{}\"") != std::string::npos);
}

TEST_CASE("JSON report") {
    const auto empty = reportJson({}, SuiteEcho{});
    CHECK(empty.find("\"statements\": []") != std::string::npos);
    CHECK(empty.find("\"verified\": 0") != std::string::npos);
    CHECK(empty.find("\"counterexamples\": 0") != std::string::npos);
    CHECK(empty.find("\"vacuous\": 0") != std::string::npos);
    CHECK(empty.find("\"suite\"") < empty.find("\"statements\""));
    CHECK(empty.find("\"statements\"") < empty.find("\"summary\""));

    SuiteConfig config;
    config.algebras = defaultSuite();
    config.only = {"T-06"};
    const auto reports = runAll(config);
    SuiteEcho echo;
    for (const auto& a : config.algebras) echo.algebras.push_back(a->label());
    echo.only = config.only;
    const auto json = reportJson(reports, echo);
    CHECK(json == readText(fixture("golden/theorems_t06.json")));

    const auto witnesses = witnessesFromJson(json);
    REQUIRE(witnesses.size() == 1);
    CHECK(witnesses[0].id == "T-06");
    CHECK(witnesses[0].algebra == "product(chain 2, chain 2)");
    CHECK(witnesses[0].elements == std::vector<std::string>{"(1,0)"});

    const auto timed = reportJson(reports, echo, JsonOptions{true});
    CHECK(timed.find("\"elapsed_ms\": null") == std::string::npos);
    CHECK_THROWS_AS(witnessesFromJson("{"), InvalidArgument);
}
