#include "mvspec/spectrum.hpp"

#include <algorithm>

#include "mvspec/errors.hpp"

namespace mvspec {

ElementSet subordinate(const Algebra& alg, const ElementSet& f, Element a) {
    ElementSet out(alg.size());
    const auto n = static_cast<Element>(alg.size());
    for (Element z = 0; z < n; ++z)
        if (!f.contains(alg.imp(z, a))) out.insert(z);
    return out;
}

ElementSet plus(const Algebra& alg, const ElementSet& f) {
    ElementSet result = subordinate(alg, f, 0);
    ElementSet star(alg.size());
    for (Element x : f.complement().members()) star.insert(alg.neg(x));
    if (result != star)
        throw InternalInconsistency("f_0 = " + formatSet(alg, result) + " but (L \\ F)* = " + formatSet(alg, star));
    return result;
}

ElementSet kernelByDefinition(const Algebra& alg, const ElementSet& f) {
    ElementSet out(alg.size());
    const auto outside = f.complement().members();
    const auto n = static_cast<Element>(alg.size());
    for (Element z = 0; z < n; ++z) {
        bool keep = true;
        for (Element a : outside)
            if (f.contains(alg.imp(z, a))) {
                keep = false;
                break;
            }
        if (keep) out.insert(z);
    }
    return out;
}

ElementSet kernelByProducts(const Algebra& alg, const ElementSet& f) {
    ElementSet out(alg.size());
    const auto inside = f.members();
    const auto n = static_cast<Element>(alg.size());
    for (Element z = 0; z < n; ++z) {
        bool keep = true;
        for (Element g : inside)
            if (!f.contains(alg.otimes(g, z))) {
                keep = false;
                break;
            }
        if (keep) out.insert(z);
    }
    return out;
}

ElementSet kernelFromSubordinates(const Algebra& alg, const ElementSet& f) {
    ElementSet out = ElementSet::full(alg.size());
    for (Element a : f.complement().members()) out &= subordinate(alg, f, a);
    return out;
}

ElementSet kernel(const Algebra& alg, const ElementSet& f) {
    if (!isOrderFilter(alg, f)) throw PreconditionViolation("kernel of " + formatSet(alg, f) + ": not an order filter");
    ElementSet by_def = kernelByDefinition(alg, f);
    ElementSet by_prod = kernelByProducts(alg, f);
    if (by_def != by_prod)
        throw InternalInconsistency("kernel formulas disagree on " + formatSet(alg, f) + ": " + formatSet(alg, by_def) +
                                    " vs " + formatSet(alg, by_prod));
    return by_def;
}

ElementSet localize(const IntervalEmbedding& iv, const ElementSet& f) {
    ElementSet out(iv.algebra.size());
    for (std::size_t i = 0; i < iv.to_parent.size(); ++i)
        if (f.contains(iv.to_parent[i])) out.insert(static_cast<Element>(i));
    return out;
}

ElementSet quotientImage(const QuotientMap& qm, const ElementSet& s) {
    ElementSet out(qm.quotient.size());
    for (Element x : s.members()) out.insert(qm.class_of[x]);
    return out;
}

ElementSet quotientPreimage(const QuotientMap& qm, const ElementSet& t) {
    ElementSet out(qm.parent->size());
    for (std::size_t x = 0; x < qm.class_of.size(); ++x)
        if (t.contains(qm.class_of[x])) out.insert(static_cast<Element>(x));
    return out;
}

ElementSet saturate(const QuotientMap& by_p, const ElementSet& f) {
    return quotientPreimage(by_p, quotientImage(by_p, f));
}

ElementSet saturate(AlgebraPtr alg, const ElementSet& f, const ElementSet& p) {
    return saturate(quotientByImplicationFilter(std::move(alg), p), f);
}

ElementSet joinImplicationFilters(AlgebraPtr alg, const ElementSet& p, const ElementSet& q) {
    ElementSet generated = implicationFilterGenerated(*alg, p | q);
    ElementSet via_saturation = saturate(alg, p, q);
    if (generated != via_saturation)
        throw InternalInconsistency("generated join " + formatSet(*alg, generated) + " differs from saturation " +
                                    formatSet(*alg, via_saturation));
    return generated;
}

bool isPrimeImplicationFilter(const Algebra& alg, const ElementSet& p) {
    const auto c = classify(alg, p);
    return c.implicationFilter() && c.proper && joinSplitting(alg, p);
}

std::vector<ElementSet> minimalPrimes(const Algebra& alg) {
    std::vector<ElementSet> primes;
    for (auto& p : implicationFiltersFromIdempotents(alg))
        if (isPrimeImplicationFilter(alg, p)) primes.push_back(std::move(p));
    std::vector<ElementSet> out;
    for (const auto& p : primes) {
        bool minimal = std::none_of(primes.begin(), primes.end(),
                                    [&](const ElementSet& q) { return q != p && q.isSubsetOf(p); });
        if (minimal) out.push_back(p);
    }
    return out;
}

bool SubordinateFamily::isTotal() const {
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = 0; j < members.size(); ++j)
            if (!included[i][j] && !included[j][i]) return false;
    return true;
}

SubordinateFamily subordinateFamily(const Algebra& alg, const ElementSet& f) {
    SubordinateFamily fam{f, {}, {}};
    const auto n = static_cast<Element>(alg.size());
    for (Element a = 0; a < n; ++a) {
        ElementSet s = subordinate(alg, f, a);
        auto same = [&](const auto& m) { return m.second == s; };
        if (std::none_of(fam.members.begin(), fam.members.end(), same)) fam.members.emplace_back(a, std::move(s));
    }
    const std::size_t m = fam.members.size();
    fam.included.assign(m, std::vector<bool>(m, false));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            fam.included[i][j] = fam.members[i].second.isSubsetOf(fam.members[j].second);
    return fam;
}

}  // namespace mvspec
