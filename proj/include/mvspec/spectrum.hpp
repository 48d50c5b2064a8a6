#pragma once

#include <utility>
#include <vector>

#include "mvspec/algebra.hpp"
#include "mvspec/filters.hpp"

namespace mvspec {

/// Subordinate of f at a: {z | z -> a not in f}. Empty whenever a is in f.
ElementSet subordinate(const Algebra& alg, const ElementSet& f, Element a);

/// The largest subordinate, f_0. Cross-checked against {~x | x not in f};
/// throws InternalInconsistency if the two disagree.
ElementSet plus(const Algebra& alg, const ElementSet& f);

/// Kernel of an order filter: {z | for all a not in f, z -> a not in f}.
///
/// Always evaluated twice, once from the definition and once as
/// {z | for all g in f, g * z in f}; throws InternalInconsistency on any
/// disagreement and PreconditionViolation if f is not an order filter.
ElementSet kernel(const Algebra& alg, const ElementSet& f);

/// The two kernel formulas on their own, for oracle tests.
ElementSet kernelByDefinition(const Algebra& alg, const ElementSet& f);
ElementSet kernelByProducts(const Algebra& alg, const ElementSet& f);

/// Intersection of all f_a with a not in f (the whole algebra if f is).
ElementSet kernelFromSubordinates(const Algebra& alg, const ElementSet& f);

/// f intersected with [a,1], re-indexed into the interval algebra.
ElementSet localize(const IntervalEmbedding& iv, const ElementSet& f);

/// Image {class_of(x) | x in s} in the quotient.
ElementSet quotientImage(const QuotientMap& qm, const ElementSet& s);

/// Preimage {x | class_of(x) in t}.
ElementSet quotientPreimage(const QuotientMap& qm, const ElementSet& t);

/// Saturation of f by the implication filter p: the preimage of the image
/// of f in A/p (written J(F,P) in the literature on MV-filters). Contains
/// f and p.
ElementSet saturate(AlgebraPtr alg, const ElementSet& f, const ElementSet& p);
ElementSet saturate(const QuotientMap& by_p, const ElementSet& f);

/// Least implication filter containing p and q. Checked against
/// saturate(p, q); throws InternalInconsistency if they differ.
ElementSet joinImplicationFilters(AlgebraPtr alg, const ElementSet& p, const ElementSet& q);

/// True iff p is a proper implication filter with a linearly ordered
/// quotient, i.e. a prime implication filter.
bool isPrimeImplicationFilter(const Algebra& alg, const ElementSet& p);

/// Minimal members of the proper prime implication filters, ascending by bit
/// pattern.
std::vector<ElementSet> minimalPrimes(const Algebra& alg);

/// Distinct subordinates of a filter and their inclusion order.
struct SubordinateFamily {
    ElementSet base_filter;
    /// (least a producing the set, f_a); the empty set appears once, for the
    /// least a in f.
    std::vector<std::pair<Element, ElementSet>> members;
    /// included[i][j] iff members[i].second is a subset of members[j].second.
    std::vector<std::vector<bool>> included;

    bool isTotal() const;
};

SubordinateFamily subordinateFamily(const Algebra& alg, const ElementSet& f);

}  // namespace mvspec
