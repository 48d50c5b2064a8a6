// Executable forms of the subordinate / kernel / spectrum results.
//
// Each check receives one instance (filters and elements drawn according to
// the statement's shape) and reports whether the hypothesis applied and, if
// so, whether the conclusion held. When `obs` is non-null the check also
// records the intermediate sets that explain the verdict.

#include <algorithm>

#include "mvspec/harness.hpp"
#include "mvspec/spectrum.hpp"

namespace mvspec {

namespace {

using Case = const AlgebraCase&;
using Inst = const Instance&;

void note(Observations* obs, std::string name, const Algebra& a, const ElementSet& s) {
    if (obs) obs->push_back({std::move(name), formatSet(a, s)});
}

void note(Observations* obs, std::string name, std::string value) {
    if (obs) obs->push_back({std::move(name), std::move(value)});
}

bool primeFilter(const Algebra& a, const ElementSet& f) {
    const auto k = classify(a, f);
    return k.orderFilter() && k.prime;
}

bool primeLatticeFilter(const Algebra& a, const ElementSet& f) {
    const auto k = classify(a, f);
    return k.latticeFilter() && k.prime;
}

ElementSet intersectAll(std::size_t n, const std::vector<ElementSet>& sets) {
    ElementSet out = ElementSet::full(n);
    for (const auto& s : sets) out &= s;
    return out;
}

// Shared setting of the kernel-of-saturation statements: F prime lattice
// filter, P prime implication filter, J(F,P) proper.
struct SaturationSetting {
    bool applies = false;
    ElementSet j;
    ElementSet kernel_f;
};

SaturationSetting saturationSetting(Case c, const ElementSet& f, const ElementSet& p) {
    const Algebra& a = *c.algebra;
    SaturationSetting s;
    if (!primeLatticeFilter(a, f) || !isPrimeImplicationFilter(a, p)) return s;
    s.j = saturate(c.algebra, f, p);
    if (s.j.isFull()) return s;
    s.applies = true;
    s.kernel_f = kernel(a, f);
    return s;
}

std::vector<Statement> buildRegistry() {
    std::vector<Statement> r;
    auto add = [&](std::string id, Variant v, Shape shape, std::string description, Check check) -> Statement& {
        r.push_back(Statement{std::move(id), v, shape, std::move(description), std::move(check), {}, false, false});
        return r.back();
    };
    const auto stated = Variant::PaperStated;
    const auto repaired = Variant::Repaired;

    add("T-00", stated, Shape::F, "F prime lattice filter: {F_a | a in L} is linearly ordered by inclusion",
        [](Case c, Inst in, Observations* obs) {
            const Algebra& a = *c.algebra;
            const auto& f = in.filters[0];
            const auto k = classify(a, f);
            const bool total = subordinateFamily(a, f).isTotal();
            Verdict v{k.latticeFilter() && k.prime, total};
            // Lattice filters that are not prime are tracked but not assumed.
            if (k.latticeFilter() && !k.prime)
                v.subcase = total ? "non-prime lattice filter, total" : "non-prime lattice filter, not total";
            if (obs) {
                const auto fam = subordinateFamily(a, f);
                for (const auto& [e, s] : fam.members) note(obs, "F_" + a.name(e), a, s);
            }
            return v;
        })
        .declared_subcases = {"non-prime lattice filter, total", "non-prime lattice filter, not total"};

    add("T-01", stated, Shape::Fa, "a not in F: F_a is an order filter containing 1 and not a",
        [](Case c, Inst in, Observations* obs) {
            const Algebra& a = *c.algebra;
            const auto& f = in.filters[0];
            const Element x = in.elements[0];
            if (f.contains(x)) return Verdict{};
            const auto fa = subordinate(a, f, x);
            note(obs, "F_a", a, fa);
            return Verdict{true, isOrderFilter(a, fa) && !fa.contains(x) && fa.contains(a.top())};
        });

    add("T-02", stated, Shape::Fa,
        "a not in F: F meet-closed gives F_a join-splitting; F prime gives F_a meet-closed",
        [](Case c, Inst in, Observations* obs) {
            const Algebra& a = *c.algebra;
            const auto& f = in.filters[0];
            const Element x = in.elements[0];
            const auto k = classify(a, f);
            if (f.contains(x) || !(k.meet_closed || k.prime)) return Verdict{};
            const auto fa = subordinate(a, f, x);
            note(obs, "F_a", a, fa);
            bool ok = true;
            if (k.meet_closed) ok = ok && joinSplitting(a, fa);
            if (k.prime) ok = ok && classify(a, fa).meet_closed;
            return Verdict{true, ok};
        });

    add("T-03", stated, Shape::Fab, "a <= b implies F_b is a subset of F_a", [](Case c, Inst in, Observations* obs) {
        const Algebra& a = *c.algebra;
        const auto& f = in.filters[0];
        const Element x = in.elements[0], y = in.elements[1];
        if (!a.leq(x, y)) return Verdict{};
        const auto fx = subordinate(a, f, x), fy = subordinate(a, f, y);
        note(obs, "F_a", a, fx);
        note(obs, "F_b", a, fy);
        return Verdict{true, fy.isSubsetOf(fx)};
    });

    add("T-04", stated, Shape::Fab, "a, b not in F: F_(a v b) within F_a & F_b, and F_a | F_b within F_(a ^ b)",
        [](Case c, Inst in, Observations* obs) {
            const Algebra& a = *c.algebra;
            const auto& f = in.filters[0];
            const Element x = in.elements[0], y = in.elements[1];
            if (f.contains(x) || f.contains(y)) return Verdict{};
            const auto fx = subordinate(a, f, x), fy = subordinate(a, f, y);
            const auto fj = subordinate(a, f, a.join(x, y)), fm = subordinate(a, f, a.meet(x, y));
            note(obs, "F_(a v b)", a, fj);
            note(obs, "F_(a ^ b)", a, fm);
            return Verdict{true, fj.isSubsetOf(fx & fy) && (fx | fy).isSubsetOf(fm)};
        });

    add("T-05", stated, Shape::FGa, "F within G, a not in G: G_a within F_a", [](Case c, Inst in, Observations* obs) {
        const Algebra& a = *c.algebra;
        const auto& f = in.filters[0];
        const auto& g = in.filters[1];
        const Element x = in.elements[0];
        if (!f.isSubsetOf(g) || g.contains(x)) return Verdict{};
        const auto fx = subordinate(a, f, x), gx = subordinate(a, g, x);
        note(obs, "F_a", a, fx);
        note(obs, "G_a", a, gx);
        return Verdict{true, gx.isSubsetOf(fx)};
    });

    auto involution = [](bool need_prime) {
        return [need_prime](Case c, Inst in, Observations* obs) {
            const Algebra& a = *c.algebra;
            const auto& f = in.filters[0];
            const Element x = in.elements[0];
            if (f.contains(x) || (need_prime && !primeFilter(a, f))) return Verdict{};
            const auto fx = subordinate(a, f, x);
            const auto fxx = subordinate(a, fx, x);
            note(obs, "F_a", a, fx);
            note(obs, "(F_a)_a", a, fxx);
            return Verdict{true, fxx == f};
        };
    };
    add("T-06", stated, Shape::Fa, "F order filter, a not in F: (F_a)_a = F", involution(false))
        .expected_counterexample = true;
    add("T-06", repaired, Shape::Fa, "F prime, a not in F: (F_a)_a = F", involution(true));

    auto plusPrimeLattice = [](bool need_prime_lattice) {
        return [need_prime_lattice](Case c, Inst in, Observations* obs) {
            const Algebra& a = *c.algebra;
            const auto& f = in.filters[0];
            if (f.isFull() || (need_prime_lattice && !primeLatticeFilter(a, f))) return Verdict{};
            const auto fp = plus(a, f);
            note(obs, "F+", a, fp);
            if (obs) {
                const auto k = classify(a, fp);
                note(obs, "F+ meet-closed", k.meet_closed ? "yes" : "no");
                note(obs, "F+ prime", k.prime ? "yes" : "no");
            }
            return Verdict{true, primeLatticeFilter(a, fp)};
        };
    };
    add("T-07(1)", stated, Shape::F, "F proper order filter: F+ is a prime lattice filter", plusPrimeLattice(false))
        .expected_counterexample = true;
    add("T-07(1)", repaired, Shape::F, "F prime lattice filter: F+ is a prime lattice filter",
        plusPrimeLattice(true));

    add("T-07(2)", stated, Shape::FG, "F within G: G+ within F+", [](Case c, Inst in, Observations* obs) {
        const Algebra& a = *c.algebra;
        const auto& f = in.filters[0];
        const auto& g = in.filters[1];
        if (!f.isSubsetOf(g)) return Verdict{};
        const auto fp = plus(a, f), gp = plus(a, g);
        note(obs, "F+", a, fp);
        note(obs, "G+", a, gp);
        return Verdict{true, gp.isSubsetOf(fp)};
    });

    add("T-07(3)", stated, Shape::F, "F++ = F", [](Case c, Inst in, Observations* obs) {
        const Algebra& a = *c.algebra;
        const auto& f = in.filters[0];
        const auto fpp = plus(a, plus(a, f));
        note(obs, "F++", a, fpp);
        return Verdict{true, fpp == f};
    });

    add("T-08", stated, Shape::F,
        "F+ = {~x | x not in F}; F prime lattice filter: L \\ F is a prime ideal",
        [](Case c, Inst in, Observations* obs) {
            const Algebra& a = *c.algebra;
            const auto& f = in.filters[0];
            ElementSet star(a.size());
            for (Element x : f.complement().members()) star.insert(a.neg(x));
            const auto f0 = subordinate(a, f, 0);
            note(obs, "F_0", a, f0);
            note(obs, "(L \\ F)*", a, star);
            bool ok = f0 == star;
            if (primeLatticeFilter(a, f)) ok = ok && isPrimeIdealComplement(a, f);
            return Verdict{true, ok};
        });

    add("T-09", stated, Shape::F, "K(F) is an implication filter inside F; F prime lattice filter gives K(F) prime",
        [](Case c, Inst in, Observations* obs) {
            const Algebra& a = *c.algebra;
            const auto& f = in.filters[0];
            const auto k = kernel(a, f);
            note(obs, "K(F)", a, k);
            bool ok = classify(a, k).implicationFilter() && k.isSubsetOf(f);
            const auto kind = classify(a, f);
            if (kind.prime && kind.meet_closed) ok = ok && classify(a, k).prime;
            Verdict v{true, ok};
            if (kind.prime && !kind.meet_closed)
                v.subcase = classify(a, k).prime ? "prime, not lattice: K(F) prime" : "prime, not lattice: K(F) not prime";
            return v;
        });
    r.back().declared_subcases = {"prime, not lattice: K(F) prime", "prime, not lattice: K(F) not prime"};

    add("T-10", stated, Shape::F, "F implication filter: K(F) = F", [](Case c, Inst in, Observations* obs) {
        const Algebra& a = *c.algebra;
        const auto& f = in.filters[0];
        if (!classify(a, f).implicationFilter()) return Verdict{};
        const auto k = kernel(a, f);
        note(obs, "K(F)", a, k);
        return Verdict{true, k == f};
    });

    add("T-11", stated, Shape::F, "K(F) = {z | f * z in F for all f in F}", [](Case c, Inst in, Observations* obs) {
        const Algebra& a = *c.algebra;
        const auto& f = in.filters[0];
        const auto by_def = kernelByDefinition(a, f), by_prod = kernelByProducts(a, f);
        note(obs, "K(F) by definition", a, by_def);
        note(obs, "K(F) by products", a, by_prod);
        return Verdict{true, by_def == by_prod};
    });

    add("T-12", stated, Shape::p, "K([p,1]) = {q | q * p = p}", [](Case c, Inst in, Observations* obs) {
        const Algebra& a = *c.algebra;
        const Element p = in.elements[0];
        const auto k = kernel(a, principalFilter(a, p));
        ElementSet stab(a.size());
        for (std::size_t q = 0; q < a.size(); ++q)
            if (a.otimes(static_cast<Element>(q), p) == p) stab.insert(static_cast<Element>(q));
        note(obs, "K([p,1])", a, k);
        note(obs, "{q | q*p = p}", a, stab);
        return Verdict{true, k == stab};
    });

    add("T-13", stated, Shape::p, "L linearly ordered, p > 0: K([p,1]) = {1}", [](Case c, Inst in, Observations* obs) {
        const Algebra& a = *c.algebra;
        const Element p = in.elements[0];
        if (!a.isChain() || p == 0) return Verdict{};
        const auto k = kernel(a, principalFilter(a, p));
        note(obs, "K([p,1])", a, k);
        return Verdict{true, k == ElementSet(a.size(), {a.top()})};
    });

    add("T-14", stated, Shape::FP, "P implication filter: J(F,P) = F iff P within K(F)",
        [](Case c, Inst in, Observations* obs) {
            const Algebra& a = *c.algebra;
            const auto& f = in.filters[0];
            const auto& p = in.filters[1];
            const auto j = saturate(c.algebra, f, p);
            const auto k = kernel(a, f);
            note(obs, "J(F,P)", a, j);
            note(obs, "K(F)", a, k);
            return Verdict{true, (j == f) == p.isSubsetOf(k)};
        });

    add("T-15", stated, Shape::F, "F proper order filter: K(F) = K(F+)", [](Case c, Inst in, Observations* obs) {
        const Algebra& a = *c.algebra;
        const auto& f = in.filters[0];
        if (f.isFull()) return Verdict{};
        const auto k = kernel(a, f), kp = kernel(a, plus(a, f));
        note(obs, "K(F)", a, k);
        note(obs, "K(F+)", a, kp);
        return Verdict{true, k == kp};
    });

    add("T-16", stated, Shape::Fab, "a <= b: (F_b) localized to [a,1] = (F localized to [a,1])_b",
        [](Case c, Inst in, Observations* obs) {
            const Algebra& a = *c.algebra;
            const auto& f = in.filters[0];
            const Element x = in.elements[0], y = in.elements[1];
            if (!a.leq(x, y)) return Verdict{};
            const auto iv = interval(c.algebra, x);
            const auto lhs = localize(iv, subordinate(a, f, y));
            const auto rhs = subordinate(iv.algebra, localize(iv, f), *iv.fromParent(y));
            note(obs, "G", iv.algebra, lhs);
            note(obs, "H", iv.algebra, rhs);
            return Verdict{true, lhs == rhs};
        });

    add("T-17", stated, Shape::Fa, "F prime, a not in F: K on [a,1] of F localized = K(F) localized",
        [](Case c, Inst in, Observations* obs) {
            const Algebra& a = *c.algebra;
            const auto& f = in.filters[0];
            const Element x = in.elements[0];
            if (f.contains(x) || !primeFilter(a, f)) return Verdict{};
            const auto iv = interval(c.algebra, x);
            const auto lhs = kernel(iv.algebra, localize(iv, f));
            const auto rhs = localize(iv, kernel(a, f));
            note(obs, "K_[a,1](F>=a)", iv.algebra, lhs);
            note(obs, "K(F)>=a", iv.algebra, rhs);
            return Verdict{true, lhs == rhs};
        });

    add("T-18", stated, Shape::Fa, "F prime, a not in F: K on [a,1] of F localized = of F_a localized",
        [](Case c, Inst in, Observations* obs) {
            const Algebra& a = *c.algebra;
            const auto& f = in.filters[0];
            const Element x = in.elements[0];
            if (f.contains(x) || !primeFilter(a, f)) return Verdict{};
            const auto iv = interval(c.algebra, x);
            const auto lhs = kernel(iv.algebra, localize(iv, f));
            const auto rhs = kernel(iv.algebra, localize(iv, subordinate(a, f, x)));
            note(obs, "K_[a,1](F>=a)", iv.algebra, lhs);
            note(obs, "K_[a,1](F_a>=a)", iv.algebra, rhs);
            return Verdict{true, lhs == rhs};
        });

    add("T-19", stated, Shape::Fa, "F prime, a not in F: K(F) = K(F_a)", [](Case c, Inst in, Observations* obs) {
        const Algebra& a = *c.algebra;
        const auto& f = in.filters[0];
        const Element x = in.elements[0];
        if (f.contains(x) || !primeFilter(a, f)) return Verdict{};
        const auto k = kernel(a, f), ka = kernel(a, subordinate(a, f, x));
        note(obs, "K(F)", a, k);
        note(obs, "K(F_a)", a, ka);
        return Verdict{true, k == ka};
    });

    add("T-20", stated, Shape::Fa, "F prime, K = K(F): (F/K)_[a] = F_a/K", [](Case c, Inst in, Observations* obs) {
        const Algebra& a = *c.algebra;
        const auto& f = in.filters[0];
        const Element x = in.elements[0];
        if (!primeFilter(a, f)) return Verdict{};
        const auto eta = quotientByImplicationFilter(c.algebra, kernel(a, f));
        const auto lhs = subordinate(eta.quotient, quotientImage(eta, f), eta(x));
        const auto rhs = quotientImage(eta, subordinate(a, f, x));
        note(obs, "(F/K)_[a]", eta.quotient, lhs);
        note(obs, "F_a/K", eta.quotient, rhs);
        return Verdict{true, lhs == rhs};
    });

    add("T-21", stated, Shape::Fab,
        "F prime, K = K(F): F_a = preimage of (F/K)_[a]; [a] <= [b] gives F_b within F_a; [a] = [b] gives "
        "F_a = F_b",
        [](Case c, Inst in, Observations* obs) {
            const Algebra& a = *c.algebra;
            const auto& f = in.filters[0];
            const Element x = in.elements[0], y = in.elements[1];
            if (!primeFilter(a, f)) return Verdict{};
            const auto eta = quotientByImplicationFilter(c.algebra, kernel(a, f));
            const auto fx = subordinate(a, f, x), fy = subordinate(a, f, y);
            const auto pre = quotientPreimage(eta, subordinate(eta.quotient, quotientImage(eta, f), eta(x)));
            note(obs, "F_a", a, fx);
            note(obs, "preimage of (F/K)_[a]", a, pre);
            bool ok = fx == pre;
            if (eta.quotient.leq(eta(x), eta(y))) ok = ok && fy.isSubsetOf(fx);
            if (eta(x) == eta(y)) ok = ok && fx == fy;
            return Verdict{true, ok};
        });

    add("T-22", stated, Shape::Fa, "F prime, F_a = F_0: [a] = [0] modulo K(F)", [](Case c, Inst in, Observations* obs) {
        const Algebra& a = *c.algebra;
        const auto& f = in.filters[0];
        const Element x = in.elements[0];
        if (!primeFilter(a, f) || subordinate(a, f, x) != subordinate(a, f, 0)) return Verdict{};
        const auto eta = quotientByImplicationFilter(c.algebra, kernel(a, f));
        note(obs, "[a]", std::to_string(eta(x)));
        return Verdict{true, eta(x) == eta(0)};
    });

    add("T-23", stated, Shape::Fab, "F prime lattice filter, F_a within F_b: F_b = F_(a ^ b) and F_a = F_(a v b)",
        [](Case c, Inst in, Observations* obs) {
            const Algebra& a = *c.algebra;
            const auto& f = in.filters[0];
            const Element x = in.elements[0], y = in.elements[1];
            if (!primeFilter(a, f)) return Verdict{};
            const auto fx = subordinate(a, f, x), fy = subordinate(a, f, y);
            if (!fx.isSubsetOf(fy)) return Verdict{};
            const auto fm = subordinate(a, f, a.meet(x, y)), fj = subordinate(a, f, a.join(x, y));
            note(obs, "F_(a ^ b)", a, fm);
            note(obs, "F_(a v b)", a, fj);
            const bool holds = fy == fm && fx == fj;
            Verdict v{classify(a, f).meet_closed, holds};
            if (!v.hypothesis) v.subcase = holds ? "prime, not lattice: holds" : "prime, not lattice: fails";
            return v;
        });
    r.back().declared_subcases = {"prime, not lattice: holds", "prime, not lattice: fails"};

    add("T-24", stated, Shape::Fab,
        "F prime, a, b not in F: F_a = F_b gives [a] = [b]; F_a within F_b gives [a] >= [b] modulo K(F)",
        [](Case c, Inst in, Observations* obs) {
            const Algebra& a = *c.algebra;
            const auto& f = in.filters[0];
            const Element x = in.elements[0], y = in.elements[1];
            if (f.contains(x) || f.contains(y) || !primeFilter(a, f)) return Verdict{};
            const auto fx = subordinate(a, f, x), fy = subordinate(a, f, y);
            if (!fx.isSubsetOf(fy)) return Verdict{};
            const auto eta = quotientByImplicationFilter(c.algebra, kernel(a, f));
            note(obs, "[a]", std::to_string(eta(x)));
            note(obs, "[b]", std::to_string(eta(y)));
            bool ok = eta.quotient.leq(eta(y), eta(x));
            if (fx == fy) ok = ok && eta(x) == eta(y);
            return Verdict{true, ok};
        });

    add("T-25", stated, Shape::Pa,
        "P prime implication filter, a not in P: P_a = preimage of {[x] > [a]}; the family has |L/P| members",
        [](Case c, Inst in, Observations* obs) {
            const Algebra& a = *c.algebra;
            const auto& p = in.filters[0];
            const Element x = in.elements[0];
            if (p.contains(x) || !isPrimeImplicationFilter(a, p)) return Verdict{};
            const auto eta = quotientByImplicationFilter(c.algebra, p);
            ElementSet above(eta.quotient.size());
            for (std::size_t k = 0; k < eta.quotient.size(); ++k)
                if (k != eta(x) && eta.quotient.leq(eta(x), static_cast<Element>(k))) above.insert(static_cast<Element>(k));
            const auto pa = subordinate(a, p, x);
            const auto pre = quotientPreimage(eta, above);
            const auto members = subordinateFamily(a, p).members.size();
            note(obs, "P_a", a, pa);
            note(obs, "preimage of {[x] > [a]}", a, pre);
            note(obs, "family size", std::to_string(members));
            note(obs, "|L/P|", std::to_string(eta.quotient.size()));
            return Verdict{true, pa == pre && members == eta.quotient.size()};
        });

    add("T-26", stated, Shape::PQ, "P, Q implication filters: P v Q = J(P,Q)", [](Case c, Inst in, Observations* obs) {
        const Algebra& a = *c.algebra;
        const auto& p = in.filters[0];
        const auto& q = in.filters[1];
        const auto gen = implicationFilterGenerated(a, p | q);
        const auto j = saturate(c.algebra, p, q);
        note(obs, "P v Q", a, gen);
        note(obs, "J(P,Q)", a, j);
        return Verdict{true, gen == j};
    });

    add("T-27", stated, Shape::FP, "P prime implication filter, J(F,P) proper: K(F) within K(J(F,P))",
        [](Case c, Inst in, Observations* obs) {
            const Algebra& a = *c.algebra;
            const auto& f = in.filters[0];
            const auto& p = in.filters[1];
            if (!isPrimeImplicationFilter(a, p)) return Verdict{};
            const auto j = saturate(c.algebra, f, p);
            if (j.isFull()) return Verdict{};
            const auto kf = kernel(a, f), kj = kernel(a, j);
            note(obs, "K(F)", a, kf);
            note(obs, "K(J(F,P))", a, kj);
            return Verdict{true, kf.isSubsetOf(kj)};
        });

    add("T-28", stated, Shape::FP, "Q implication filter: preimage of K(F/Q) = K(J(F,Q))",
        [](Case c, Inst in, Observations* obs) {
            const Algebra& a = *c.algebra;
            const auto& f = in.filters[0];
            const auto eta = quotientByImplicationFilter(c.algebra, in.filters[1]);
            const auto lhs = quotientPreimage(eta, kernel(eta.quotient, quotientImage(eta, f)));
            const auto rhs = kernel(a, saturate(eta, f));
            note(obs, "preimage of K(F/Q)", a, lhs);
            note(obs, "K(J(F,Q))", a, rhs);
            return Verdict{true, lhs == rhs};
        });

    add("T-29", stated, Shape::FP,
        "F prime lattice filter, P prime implication filter, J(F,P) proper: K(J(F,P)) = K(F) v P",
        [](Case c, Inst in, Observations* obs) {
            const Algebra& a = *c.algebra;
            const auto& f = in.filters[0];
            const auto& p = in.filters[1];
            const auto s = saturationSetting(c, f, p);
            if (!s.applies) return Verdict{};
            const auto lhs = kernel(a, s.j);
            const auto rhs = joinImplicationFilters(c.algebra, s.kernel_f, p);
            note(obs, "K(J(F,P))", a, lhs);
            note(obs, "K(F) v P", a, rhs);
            Verdict v{true, lhs == rhs};
            v.subcase = p.isSubsetOf(s.kernel_f) ? "case 1: P within K(F)" : "case 2: P not within K(F)";
            return v;
        });
    r.back().declared_subcases = {"case 1: P within K(F)", "case 2: P not within K(F)"};
    r.back().subcases_partition_hits = true;

    add("T-30", stated, Shape::FP, "under the T-29 hypotheses, P' = P v K(F): P'/P within K(F/P)",
        [](Case c, Inst in, Observations* obs) {
            const auto& f = in.filters[0];
            const auto& p = in.filters[1];
            const auto s = saturationSetting(c, f, p);
            if (!s.applies) return Verdict{};
            const auto p2 = joinImplicationFilters(c.algebra, p, s.kernel_f);
            const auto eta = quotientByImplicationFilter(c.algebra, p);
            const auto lhs = quotientImage(eta, p2);
            const auto rhs = kernel(eta.quotient, quotientImage(eta, f));
            note(obs, "P'/P", eta.quotient, lhs);
            note(obs, "K(F/P)", eta.quotient, rhs);
            return Verdict{true, lhs.isSubsetOf(rhs)};
        });

    add("T-31", stated, Shape::FP,
        "under the T-29 hypotheses: (L/P)/(P'/P) is isomorphic to L/P', compatibly with the quotient maps on F",
        [](Case c, Inst in, Observations* obs) {
            const auto& f = in.filters[0];
            const auto& p = in.filters[1];
            const auto s = saturationSetting(c, f, p);
            if (!s.applies) return Verdict{};
            const auto p2 = joinImplicationFilters(c.algebra, p, s.kernel_f);
            const auto by_p = quotientByImplicationFilter(c.algebra, p);
            auto lp = std::make_shared<const Algebra>(by_p.quotient);
            const auto twice = quotientByImplicationFilter(lp, quotientImage(by_p, p2));
            const auto once = quotientByImplicationFilter(c.algebra, p2);
            const auto iso = findIsomorphism(twice.quotient, once.quotient);
            note(obs, "|(L/P)/(P'/P)|", std::to_string(twice.quotient.size()));
            note(obs, "|L/P'|", std::to_string(once.quotient.size()));
            if (!iso) return Verdict{true, false};
            for (Element x : f.members())
                if ((*iso)[twice(by_p(x))] != once(x)) return Verdict{true, false};
            return Verdict{true, true};
        });

    add("T-32", stated, Shape::F, "F lattice filter: F = intersection over minimal primes m of J(F,m)",
        [](Case c, Inst in, Observations* obs) {
            const Algebra& a = *c.algebra;
            const auto& f = in.filters[0];
            std::vector<ElementSet> js;
            for (const auto& m : c.minimal_primes) js.push_back(saturate(c.algebra, f, m));
            const auto meet = intersectAll(a.size(), js);
            note(obs, "intersection of J(F,m)", a, meet);
            const bool holds = meet == f;
            Verdict v{classify(a, f).latticeFilter(), holds};
            if (!v.hypothesis) v.subcase = holds ? "order filter, not lattice: holds" : "order filter, not lattice: fails";
            return v;
        })
        .declared_subcases = {"order filter, not lattice: holds", "order filter, not lattice: fails"};

    add("T-33", stated, Shape::F, "F lattice filter: K(F) = intersection over minimal primes m of K(J(F,m))",
        [](Case c, Inst in, Observations* obs) {
            const Algebra& a = *c.algebra;
            const auto& f = in.filters[0];
            std::vector<ElementSet> ks;
            for (const auto& m : c.minimal_primes) ks.push_back(kernel(a, saturate(c.algebra, f, m)));
            const auto meet = intersectAll(a.size(), ks);
            const auto k = kernel(a, f);
            note(obs, "K(F)", a, k);
            note(obs, "intersection of K(J(F,m))", a, meet);
            const bool holds = meet == k;
            Verdict v{classify(a, f).latticeFilter(), holds};
            if (!v.hypothesis) v.subcase = holds ? "order filter, not lattice: holds" : "order filter, not lattice: fails";
            return v;
        })
        .declared_subcases = {"order filter, not lattice: holds", "order filter, not lattice: fails"};

    return r;
}

}  // namespace

const std::vector<Statement>& registry() {
    static const std::vector<Statement> r = buildRegistry();
    return r;
}

const Statement* findStatement(std::string_view id, Variant variant) {
    for (const auto& s : registry())
        if (s.id == id && s.variant == variant) return &s;
    return nullptr;
}

}  // namespace mvspec
