#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mvspec/element_set.hpp"

namespace mvspec {

/// A finite MV-algebra given by its operation tables.
///
/// Elements are 0..size()-1 with 0 the bottom; top() is neg(0). Only oplus
/// and neg are primary. Every other operation (implication, product, lattice
/// operations, order) is tabulated once at construction and read from the
/// tables afterwards. Instances are immutable.
class Algebra {
public:
    /// Validates dimensions, ranges and the MV axioms; throws AxiomError on
    /// any violation and InvalidArgument on malformed tables.
    static Algebra fromTables(std::size_t size, std::vector<Element> oplus, std::vector<Element> neg,
                              std::vector<std::string> names = {}, std::string label = {});

    /// Same as fromTables but skips the axiom check. Used by constructions
    /// that are correct by definition (chains, products, intervals, quotients).
    static Algebra fromTrustedTables(std::size_t size, std::vector<Element> oplus, std::vector<Element> neg,
                                     std::vector<std::string> names = {}, std::string label = {});

    std::size_t size() const noexcept { return size_; }
    Element bottom() const noexcept { return 0; }
    Element top() const noexcept { return neg_[0]; }

    Element oplus(Element x, Element y) const noexcept { return oplus_[x * size_ + y]; }
    Element neg(Element x) const noexcept { return neg_[x]; }
    Element imp(Element x, Element y) const noexcept { return imp_[x * size_ + y]; }
    Element otimes(Element x, Element y) const noexcept { return otimes_[x * size_ + y]; }
    Element join(Element x, Element y) const noexcept { return join_[x * size_ + y]; }
    Element meet(Element x, Element y) const noexcept { return meet_[x * size_ + y]; }
    bool leq(Element x, Element y) const noexcept { return imp(x, y) == top(); }

    /// {y | x <= y} and {y | y <= x}.
    const ElementSet& upSet(Element x) const noexcept { return up_[x]; }
    const ElementSet& downSet(Element x) const noexcept { return down_[x]; }

    bool isChain() const noexcept { return chain_; }

    std::span<const Element> oplusTable() const noexcept { return oplus_; }
    std::span<const Element> negTable() const noexcept { return neg_; }

    const std::string& label() const noexcept { return label_; }
    const std::string& name(Element x) const { return names_[x]; }
    const std::vector<std::string>& names() const noexcept { return names_; }

    /// Sizes of the direct factors when built by product(); empty otherwise.
    /// Drives the tuple element literals of the DSL.
    const std::vector<std::size_t>& factorSizes() const noexcept { return factor_sizes_; }

    Algebra withLabel(std::string label) const;
    Algebra withFactorSizes(std::vector<std::size_t> sizes) const;

    /// Table equality; labels and names are presentation only.
    friend bool operator==(const Algebra& a, const Algebra& b) noexcept {
        return a.size_ == b.size_ && a.oplus_ == b.oplus_ && a.neg_ == b.neg_;
    }

private:
    Algebra() = default;
    void derive();

    std::size_t size_ = 0;
    std::vector<Element> oplus_;
    std::vector<Element> neg_;
    std::vector<Element> imp_;
    std::vector<Element> otimes_;
    std::vector<Element> join_;
    std::vector<Element> meet_;
    std::vector<ElementSet> up_;
    std::vector<ElementSet> down_;
    bool chain_ = false;
    std::string label_;
    std::vector<std::string> names_;
    std::vector<std::size_t> factor_sizes_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

struct AxiomViolation {
    std::string axiom;
    std::vector<Element> witness;
};

class AxiomError : public std::runtime_error {
public:
    explicit AxiomError(std::vector<AxiomViolation> violations);
    const std::vector<AxiomViolation>& violations() const noexcept { return violations_; }

private:
    std::vector<AxiomViolation> violations_;
};

std::string describe(const AxiomViolation& v);

/// Exhaustive check of the MV axioms and of the derived-table invariants.
/// Reports at most one witness per axiom.
std::vector<AxiomViolation> checkAxioms(const Algebra& a);

/// Lukasiewicz chain with k elements; index i stands for i/(k-1).
Algebra chain(std::size_t k);

/// Componentwise product; row-major indexing with the last factor varying
/// fastest.
Algebra product(std::span<const Algebra> factors);

/// The MV-algebra induced on [base, 1].
struct IntervalEmbedding {
    AlgebraPtr parent;
    Element base = 0;
    Algebra algebra;
    std::vector<Element> to_parent;

    /// Interval element for a parent element >= base.
    std::optional<Element> fromParent(Element x) const;
};

/// Carrier {x | base <= x}, bottom base, negation x -> x => base and sum
/// x (+) y => (x -> base) -> y. Implication on the carrier is the parent's.
IntervalEmbedding interval(AlgebraPtr parent, Element base);

/// The canonical surjection onto the quotient by an implication filter.
struct QuotientMap {
    AlgebraPtr parent;
    ElementSet kernel_filter;
    Algebra quotient;
    std::vector<Element> class_of;
    std::vector<Element> representative;

    Element operator()(Element x) const { return class_of[x]; }
};

/// Congruence x ~ y iff x->y and y->x lie in q. Classes are numbered by
/// their least member, so the class of 0 is 0. Throws PreconditionViolation
/// when q is not an implication filter.
QuotientMap quotientByImplicationFilter(AlgebraPtr parent, const ElementSet& q);

/// One-element algebra (the quotient by everything).
Algebra trivialAlgebra();

/// Lexicographically least isomorphism from a to b (as a map indexed by
/// elements of a), or nullopt.
std::optional<std::vector<Element>> findIsomorphism(const Algebra& a, const Algebra& b);

/// Text for a set using element names, e.g. "{(0,1),(1,1)}".
std::string formatSet(const Algebra& a, const ElementSet& s);

}  // namespace mvspec
