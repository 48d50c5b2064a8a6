#include <doctest.h>

#include <algorithm>

#include "mvspec/algebra.hpp"
#include "mvspec/errors.hpp"
#include "mvspec/harness.hpp"
#include "support.hpp"

using namespace mvspec;
using mvspec::testing::chains;
using mvspec::testing::el;
using mvspec::testing::share;

namespace {

bool hasAxiom(const std::vector<AxiomViolation>& vs, std::string_view axiom) {
    return std::any_of(vs.begin(), vs.end(), [&](const AxiomViolation& v) { return v.axiom == axiom; });
}

Algebra withTables(const Algebra& a, std::vector<Element> oplus, std::vector<Element> neg) {
    return Algebra::fromTrustedTables(a.size(), std::move(oplus), std::move(neg));
}

std::vector<Element> copy(std::span<const Element> s) { return {s.begin(), s.end()}; }

}  // namespace

TEST_CASE("chain tables follow truncated addition") {
    for (std::size_t k = 2; k <= 7; ++k) {
        const Algebra c = chain(k);
        REQUIRE(c.size() == k);
        CHECK(c.top() == k - 1);
        CHECK(c.isChain());
        for (std::size_t x = 0; x < k; ++x) {
            CHECK(c.neg(static_cast<Element>(x)) == k - 1 - x);
            for (std::size_t y = 0; y < k; ++y) {
                const auto ex = static_cast<Element>(x), ey = static_cast<Element>(y);
                CHECK(c.oplus(ex, ey) == std::min(k - 1, x + y));
                CHECK(c.otimes(ex, ey) == (x + y >= k - 1 ? x + y - (k - 1) : 0));
                CHECK(c.imp(ex, ey) == std::min(k - 1, k - 1 - x + y));
                CHECK(c.join(ex, ey) == std::max(x, y));
                CHECK(c.meet(ex, ey) == std::min(x, y));
                CHECK(c.leq(ex, ey) == (x <= y));
            }
        }
    }
}

TEST_CASE("chain examples") {
    const Algebra c2 = chain(2);
    CHECK(c2.oplus(1, 1) == 1);
    CHECK(c2.neg(0) == 1);

    const Algebra c3 = chain(3);
    CHECK(c3.oplus(1, 1) == 2);
    CHECK(c3.neg(1) == 1);
    CHECK(c3.otimes(1, 1) == 0);
    CHECK(c3.imp(1, 0) == 1);

    const Algebra c4 = chain(4);
    CHECK(c4.otimes(2, 1) == 0);
    CHECK(c4.otimes(2, 2) == 1);

    CHECK_THROWS_AS(chain(1), InvalidArgument);
    CHECK_THROWS_AS(chain(0), InvalidArgument);
}

TEST_CASE("product examples") {
    const Algebra b = chains({2, 2});
    CHECK(b.size() == 4);
    CHECK(b.neg(el(b, "(1,0)")) == el(b, "(0,1)"));
    CHECK(b.factorSizes() == std::vector<std::size_t>{2, 2});
    CHECK(b.label() == "product(chain 2, chain 2)");
    CHECK_FALSE(b.isChain());

    const Algebra p32 = chains({3, 2});
    CHECK(p32.size() == 6);
    CHECK(p32.otimes(el(p32, "(1,1)"), el(p32, "(1,1)")) == el(p32, "(0,1)"));

    const Algebra p33 = chains({3, 3});
    CHECK(p33.size() == 9);
    CHECK(p33.join(el(p33, "(1,0)"), el(p33, "(0,1)")) == el(p33, "(1,1)"));

    CHECK_THROWS_AS(product(std::span<const Algebra>{}), InvalidArgument);
}

TEST_CASE("product projects onto its factors") {
    const std::vector<Algebra> factors = {chain(3), chain(2), chain(4)};
    const Algebra p = product(factors);
    REQUIRE(p.size() == 24);
    auto digits = [&](std::size_t x) {
        return std::vector<std::size_t>{x / 8, (x / 4) % 2, x % 4};
    };
    for (std::size_t x = 0; x < p.size(); ++x) {
        const auto dx = digits(x);
        const auto dn = digits(p.neg(static_cast<Element>(x)));
        for (std::size_t i = 0; i < 3; ++i) CHECK(dn[i] == factors[i].neg(static_cast<Element>(dx[i])));
        for (std::size_t y = 0; y < p.size(); ++y) {
            const auto dy = digits(y);
            const auto ds = digits(p.oplus(static_cast<Element>(x), static_cast<Element>(y)));
            for (std::size_t i = 0; i < 3; ++i)
                CHECK(ds[i] == factors[i].oplus(static_cast<Element>(dx[i]), static_cast<Element>(dy[i])));
        }
    }
}

TEST_CASE("derived identities hold on every suite algebra") {
    for (const auto& ap : defaultSuite()) {
        const Algebra& a = *ap;
        CAPTURE(a.label());
        CHECK(checkAxioms(a).empty());
        const auto n = static_cast<Element>(a.size());
        for (Element x = 0; x < n; ++x)
            for (Element y = 0; y < n; ++y) {
                CHECK(a.meet(x, y) == a.neg(a.join(a.neg(x), a.neg(y))));
                CHECK(a.imp(a.imp(x, y), y) == a.join(x, y));
                for (Element z = 0; z < n; ++z) CHECK(a.leq(a.otimes(x, z), y) == a.leq(z, a.imp(x, y)));
            }
    }
}

TEST_CASE("fromTables accepts valid tables and rejects broken ones") {
    const Algebra c3 = chain(3);
    const Algebra round = Algebra::fromTables(3, copy(c3.oplusTable()), copy(c3.negTable()));
    CHECK(round == c3);

    auto neg = copy(c3.negTable());
    neg[1] = 2;
    try {
        Algebra::fromTables(3, copy(c3.oplusTable()), neg);
        FAIL("expected AxiomError");
    } catch (const AxiomError& e) {
        const auto& vs = e.violations();
        auto it = std::find_if(vs.begin(), vs.end(), [](const auto& v) { return v.axiom == "~~x = x"; });
        REQUIRE(it != vs.end());
        // ~~1 = ~2 = 0
        CHECK(it->witness == std::vector<Element>{1});
    }

    const Algebra b = chains({2, 2});
    CHECK(Algebra::fromTables(4, copy(b.oplusTable()), copy(b.negTable())) == b);

    CHECK_THROWS_AS(Algebra::fromTables(3, std::vector<Element>(8, 0), copy(c3.negTable())), InvalidArgument);
    CHECK_THROWS_AS(Algebra::fromTables(3, copy(c3.oplusTable()), {2, 1}), InvalidArgument);
    CHECK_THROWS_AS(Algebra::fromTables(3, std::vector<Element>(9, 3), copy(c3.negTable())), InvalidArgument);
}

TEST_CASE("checkAxioms examples") {
    CHECK(checkAxioms(chain(5)).empty());
    CHECK(checkAxioms(trivialAlgebra()).empty());

    const Algebra c3 = chain(3);
    auto oplus = copy(c3.oplusTable());
    oplus[1 * 3 + 1] = 1;
    const auto vs = checkAxioms(withTables(c3, oplus, copy(c3.negTable())));
    CHECK_FALSE(vs.empty());
    CHECK((hasAxiom(vs, "~(~x+y)+y = ~(~y+x)+x") || hasAxiom(vs, "x+~0 = ~0")));
}

TEST_CASE("every single-entry mutation of chain 3 is detected") {
    const Algebra c3 = chain(3);
    std::size_t mutations = 0, detected = 0;
    for (std::size_t i = 0; i < 9; ++i)
        for (Element v = 0; v < 3; ++v) {
            auto oplus = copy(c3.oplusTable());
            if (oplus[i] == v) continue;
            oplus[i] = v;
            ++mutations;
            if (!checkAxioms(withTables(c3, oplus, copy(c3.negTable()))).empty()) ++detected;
        }
    for (std::size_t i = 0; i < 3; ++i)
        for (Element v = 0; v < 3; ++v) {
            auto neg = copy(c3.negTable());
            if (neg[i] == v) continue;
            neg[i] = v;
            ++mutations;
            if (!checkAxioms(withTables(c3, copy(c3.oplusTable()), neg)).empty()) ++detected;
        }
    CHECK(mutations == 24);
    CHECK(detected == mutations);
}

TEST_CASE("interval examples") {
    const auto c4 = share(chain(4));
    const auto iv = interval(c4, 1);
    CHECK(iv.algebra.size() == 3);
    CHECK(checkAxioms(iv.algebra).empty());
    CHECK(findIsomorphism(iv.algebra, chain(3)).has_value());
    // The induced negation fixes 2/3.
    const Element two_thirds = *iv.fromParent(2);
    CHECK(iv.algebra.neg(two_thirds) == two_thirds);
    CHECK(iv.algebra.label() == "interval(chain 4, 1)");

    const auto c3 = share(chain(3));
    const auto iv3 = interval(c3, 1);
    CHECK(iv3.algebra.size() == 2);
    CHECK(findIsomorphism(iv3.algebra, chain(2)).has_value());

    const auto b = share(chains({2, 3}));
    const auto whole = interval(b, 0);
    CHECK(whole.algebra == *b);
    CHECK(whole.to_parent == std::vector<Element>{0, 1, 2, 3, 4, 5});

    CHECK_THROWS_AS(interval(c3, 3), InvalidArgument);
}

TEST_CASE("interval implication is the parent's restricted") {
    for (const auto& ap : defaultSuite()) {
        const auto n = static_cast<Element>(ap->size());
        for (Element base = 0; base < n; ++base) {
            const auto iv = interval(ap, base);
            CAPTURE(iv.algebra.label());
            CHECK(checkAxioms(iv.algebra).empty());
            CHECK(iv.to_parent.front() == base);
            CHECK(iv.to_parent.size() == ap->upSet(base).count());
            for (std::size_t i = 0; i < iv.to_parent.size(); ++i) {
                CHECK(ap->leq(base, iv.to_parent[i]));
                for (std::size_t j = 0; j < iv.to_parent.size(); ++j)
                    CHECK(iv.to_parent[iv.algebra.imp(static_cast<Element>(i), static_cast<Element>(j))] ==
                          ap->imp(iv.to_parent[i], iv.to_parent[j]));
            }
        }
    }
}

TEST_CASE("quotient examples") {
    const auto p = share(chains({3, 2}));
    const auto qm = quotientByImplicationFilter(p, mvspec::testing::set(*p, {"(2,0)", "(2,1)"}));
    CHECK(qm.quotient.size() == 3);
    CHECK(findIsomorphism(qm.quotient, chain(3)).has_value());
    // Classes identify equal first coordinates.
    for (Element x = 0; x < 6; ++x)
        for (Element y = 0; y < 6; ++y) CHECK((qm(x) == qm(y)) == (x / 2 == y / 2));

    const auto b = share(chains({2, 2}));
    const auto by_top = quotientByImplicationFilter(b, ElementSet(4, {3}));
    CHECK(findIsomorphism(by_top.quotient, *b).has_value());
    const auto by_all = quotientByImplicationFilter(b, ElementSet::full(4));
    CHECK(by_all.quotient.size() == 1);
}

TEST_CASE("quotient map is a homomorphism with kernel Q") {
    for (const auto& ap : defaultSuite()) {
        const Algebra& a = *ap;
        for (Element e = 0; e < a.size(); ++e) {
            if (a.oplus(e, e) != e) continue;
            ElementSet q(a.size());
            for (Element y : a.upSet(e).members()) q.insert(y);
            const auto qm = quotientByImplicationFilter(ap, q);
            CAPTURE(qm.quotient.label());
            CHECK(checkAxioms(qm.quotient).empty());
            CHECK(qm.class_of[0] == 0);
            for (std::size_t c = 0; c < qm.quotient.size(); ++c) CHECK(qm(qm.representative[c]) == c);
            for (Element x = 0; x < a.size(); ++x) {
                CHECK(qm(a.neg(x)) == qm.quotient.neg(qm(x)));
                CHECK((qm(x) == qm.quotient.top()) == q.contains(x));
                for (Element y = 0; y < a.size(); ++y) {
                    CHECK(qm(a.oplus(x, y)) == qm.quotient.oplus(qm(x), qm(y)));
                    CHECK((qm(x) == qm(y)) == (q.contains(a.imp(x, y)) && q.contains(a.imp(y, x))));
                }
            }
        }
    }
}

TEST_CASE("quotient rejects sets that are not implication filters") {
    const auto c3 = share(chain(3));
    auto message = [&](const ElementSet& s) {
        try {
            quotientByImplicationFilter(c3, s);
        } catch (const PreconditionViolation& e) {
            return std::string(e.what());
        }
        return std::string();
    };
    CHECK(message(ElementSet(3, {0})).find("top") != std::string::npos);
    CHECK(message(ElementSet(3, {0, 2})).find("up") != std::string::npos);
    CHECK(message(ElementSet(3, {1, 2})).find("otimes") != std::string::npos);
}

TEST_CASE("findIsomorphism examples") {
    CHECK(findIsomorphism(chain(3), interval(share(chain(4)), 1).algebra).has_value());
    CHECK_FALSE(findIsomorphism(chain(4), chains({2, 2})).has_value());
    CHECK_FALSE(findIsomorphism(chain(4), chain(3)).has_value());
    for (const auto& ap : defaultSuite()) {
        const auto iso = findIsomorphism(*ap, *ap);
        REQUIRE(iso.has_value());
        for (Element x = 0; x < ap->size(); ++x) CHECK((*iso)[x] == x);
    }
    // chain 2 x chain 3 and chain 3 x chain 2 differ only by the coordinate swap.
    const Algebra p23 = chains({2, 3}), p32 = chains({3, 2});
    const auto swap = findIsomorphism(p23, p32);
    REQUIRE(swap.has_value());
    for (Element x = 0; x < 6; ++x) CHECK((*swap)[x] == (x % 3) * 2 + x / 3);
}
