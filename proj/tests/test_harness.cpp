#include <doctest.h>

#include <algorithm>

#include "mvspec/harness.hpp"
#include "mvspec/report.hpp"
#include "support.hpp"

using namespace mvspec;
using mvspec::testing::chains;
using mvspec::testing::share;
using mvspec::testing::suiteCases;

namespace {

const Statement& stmt(std::string_view id, Variant v = Variant::PaperStated) {
    const Statement* s = findStatement(id, v);
    REQUIRE(s != nullptr);
    return *s;
}

std::string asJson(const std::vector<StatementReport>& reports) { return reportJson(reports, SuiteEcho{}); }

}  // namespace

TEST_CASE("registry covers every statement id") {
    const auto& reg = registry();
    for (int i = 0; i <= 33; ++i) {
        char id[8];
        std::snprintf(id, sizeof id, "T-%02d", i);
        const bool present = std::any_of(reg.begin(), reg.end(), [&](const Statement& s) {
            return s.id == id || s.id.rfind(std::string(id) + "(", 0) == 0;
        });
        CHECK_MESSAGE(present, id);
    }
    CHECK(findStatement("T-06", Variant::Repaired));
    CHECK(findStatement("T-07(1)", Variant::Repaired));
    CHECK_FALSE(findStatement("T-99", Variant::PaperStated));
    for (const auto& s : reg)
        if (s.expected_counterexample) CHECK((s.variant == Variant::PaperStated));
}

TEST_CASE("runStatement examples") {
    const auto t10 = runStatement(stmt("T-10"), suiteCases());
    CHECK((t10.status == Status::Verified));
    CHECK(t10.hypothesis_hits > 0);

    std::vector<AlgebraCase> boolean{prepareCase(share(chains({2, 2})))};
    const auto t06 = runStatement(stmt("T-06"), boolean);
    REQUIRE((t06.status == Status::Counterexample));
    REQUIRE(t06.witness.has_value());
    CHECK(t06.witness->algebra == "product(chain 2, chain 2)");
    CHECK(t06.witness->filters == std::vector<std::string>{"{(1,1)}"});
    CHECK(t06.witness->elements == std::vector<std::string>{"(1,0)"});
    const auto& obs = t06.witness->observed;
    auto it = std::find_if(obs.begin(), obs.end(), [](const Observation& o) { return o.name == "(F_a)_a"; });
    REQUIRE(it != obs.end());
    CHECK(it->value == "{(0,1),(1,1)}");
    CHECK(replay(stmt("T-06"), boolean[0], t06.witness->instance).failed());

    std::vector<AlgebraCase> chainCases;
    for (std::size_t k = 2; k <= 6; ++k) chainCases.push_back(prepareCase(share(chain(k))));
    const auto t13 = runStatement(stmt("T-13"), chainCases);
    CHECK((t13.status == Status::Verified));
    CHECK(t13.hypothesis_hits > 0);
}

TEST_CASE("default suite outcome") {
    SuiteConfig config;
    config.algebras = defaultSuite();
    const auto reports = runAll(config);
    CHECK(reports.size() == registry().size());
    std::vector<std::string> red;
    for (const auto& r : reports) {
        CAPTURE(r.id);
        CHECK((r.status == Status::Vacuous) == (r.hypothesis_hits == 0));
        if (r.status == Status::Counterexample) {
            CHECK(r.witness.has_value());
            CHECK(r.expected_counterexample);
            red.push_back(r.id);
        }
        if (r.variant == Variant::Repaired) CHECK((r.status == Status::Verified));
    }
    CHECK(red == std::vector<std::string>{"T-06", "T-07(1)"});
}

TEST_CASE("T-29 reports its empty second case") {
    SuiteConfig config;
    config.algebras = defaultSuite();
    config.only = {"T-29"};
    const auto reports = runAll(config);
    REQUIRE(reports.size() == 1);
    const auto& r = reports[0];
    CHECK((r.status == Status::Verified));
    REQUIRE(r.subcases.size() == 2);
    CHECK(r.subcases[0].count + r.subcases[1].count == r.hypothesis_hits);
    CHECK(r.subcases[0].count == r.hypothesis_hits);
    CHECK(r.subcases[1].count == 0);
    CHECK(r.vacuous_subcases == std::vector<std::string>{r.subcases[1].name});
}

TEST_CASE("chain-only suite flags the second case of T-29 as vacuous") {
    SuiteConfig config;
    for (std::size_t k = 2; k <= 6; ++k) config.algebras.push_back(share(chain(k)));
    config.only = {"T-29"};
    const auto r = runAll(config).at(0);
    CHECK(r.vacuous_subcases.size() == 1);
}

TEST_CASE("empty suite is vacuous everywhere") {
    const auto reports = runAll(SuiteConfig{});
    CHECK(reports.size() == registry().size());
    for (const auto& r : reports) {
        CHECK((r.status == Status::Vacuous));
        CHECK(r.instances == 0);
    }
}

TEST_CASE("only selects statement clauses by bare id") {
    SuiteConfig config;
    config.algebras = {share(chain(3))};
    config.only = {"T-07"};
    const auto reports = runAll(config);
    CHECK(reports.size() == 4);
    for (const auto& r : reports) CHECK(r.id.rfind("T-07(", 0) == 0);
}

TEST_CASE("searchCounterexample examples") {
    const auto t06 = searchCounterexample(stmt("T-06"), 1000, 1);
    CHECK((t06.status == Status::Counterexample));
    CHECK(t06.instances <= 1000);
    REQUIRE(t06.witness.has_value());
    CHECK(t06.mode == "random");

    const auto t03 = searchCounterexample(stmt("T-03"), 500, 3);
    CHECK((t03.status == Status::Verified));
    CHECK_FALSE(t03.witness.has_value());
    CHECK(t03.instances == 500);

    const auto none = searchCounterexample(stmt("T-03"), 0, 3);
    CHECK((none.status == Status::Vacuous));
    CHECK(none.instances == 0);
}

TEST_CASE("random witnesses replay on their algebra") {
    const auto r = searchCounterexample(stmt("T-07(1)"), 1000, 5);
    REQUIRE(r.witness.has_value());
    // Random algebras are products of chains, so the label rebuilds them.
    CHECK(r.witness->algebra.rfind("product(", 0) == 0);
}

TEST_CASE("serial and parallel runs agree") {
    SuiteConfig config;
    config.algebras = defaultSuite();
    config.samples = 200;
    config.seed = 11;
    const auto serial = runAll(config, Execution::Serial);
    const auto parallel = runAll(config, Execution::Parallel);
    CHECK(asJson(serial) == asJson(parallel));
    config.threads = 3;
    CHECK(asJson(runAll(config, Execution::Parallel)) == asJson(serial));

    for (const char* id : {"T-06", "T-21", "T-29"}) {
        const auto& s = stmt(id);
        const auto a = searchCounterexample(s, 300, 9, 64, Execution::Serial);
        const auto b = searchCounterexample(s, 300, 9, 64, Execution::Parallel, 4);
        CHECK(asJson({a}) == asJson({b}));
    }
}

TEST_CASE("sampled cases are flagged partial") {
    const auto c = prepareCase(share(chains({2, 2, 2})), 5, 20, 1);
    CHECK(c.partial);
    // Draws are deduplicated; the cube has 19 order filters.
    CHECK(c.order_filters.size() <= 19);
    CHECK(std::is_sorted(c.order_filters.begin(), c.order_filters.end()));
    CHECK(std::adjacent_find(c.order_filters.begin(), c.order_filters.end()) == c.order_filters.end());
    const auto r = runStatement(stmt("T-03"), std::vector<AlgebraCase>{c});
    CHECK(r.partial);
}
