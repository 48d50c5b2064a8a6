#pragma once

#include <cstddef>
#include <vector>

#include "mvspec/algebra.hpp"

namespace mvspec {

/// Closure flags of a subset, each computed by exhaustive check.
struct FilterClassification {
    bool nonempty = false;
    bool up_closed = false;
    bool contains_top = false;
    bool meet_closed = false;
    bool otimes_closed = false;
    /// Proper and x v y in S implies x in S or y in S.
    bool prime = false;
    bool proper = false;

    bool orderFilter() const noexcept { return nonempty && up_closed; }
    bool latticeFilter() const noexcept { return orderFilter() && meet_closed; }
    bool implicationFilter() const noexcept { return contains_top && otimes_closed && up_closed; }
};

FilterClassification classify(const Algebra& a, const ElementSet& s);

/// x v y in s implies x in s or y in s (no properness requirement).
bool joinSplitting(const Algebra& a, const ElementSet& s);
bool isUpClosed(const Algebra& a, const ElementSet& s);
bool isOrderFilter(const Algebra& a, const ElementSet& s);

/// Up-closure of s.
ElementSet upClosure(const Algebra& a, const ElementSet& s);

/// Default cap on the number of up-sets any enumeration may produce.
inline constexpr std::size_t kDefaultUpSetBudget = 1'000'000;

/// All nonempty up-sets, ascending by bit pattern. Throws BudgetExceeded
/// when more than `budget` exist.
std::vector<ElementSet> enumerateOrderFilters(const Algebra& a, std::size_t budget = kDefaultUpSetBudget);

/// enumerateOrderFilters restricted to otimes-closed members.
std::vector<ElementSet> enumerateImplicationFilters(const Algebra& a, std::size_t budget = kDefaultUpSetBudget);

/// Implication filters as the principal filters [e,1] of the idempotents e
/// (e + e = e), ascending by bit pattern. Independent of the up-set
/// enumeration and usable on algebras too large to enumerate.
std::vector<ElementSet> implicationFiltersFromIdempotents(const Algebra& a);

/// [p, 1].
ElementSet principalFilter(const Algebra& a, Element p);

/// Least implication filter containing s.
ElementSet implicationFilterGenerated(const Algebra& a, const ElementSet& s);

/// True iff the complement of f is a nonempty prime ideal: down-closed,
/// join-closed, and x ^ y in it forces x or y in it.
bool isPrimeIdealComplement(const Algebra& a, const ElementSet& f);

}  // namespace mvspec
