#include "mvspec/filters.hpp"

#include <algorithm>
#include <numeric>

#include "mvspec/errors.hpp"

namespace mvspec {

bool isUpClosed(const Algebra& a, const ElementSet& s) {
    for (Element x : s.members())
        if (!a.upSet(x).isSubsetOf(s)) return false;
    return true;
}

bool isOrderFilter(const Algebra& a, const ElementSet& s) { return !s.empty() && isUpClosed(a, s); }

bool joinSplitting(const Algebra& a, const ElementSet& s) {
    const auto n = static_cast<Element>(a.size());
    for (Element x = 0; x < n; ++x) {
        if (s.contains(x)) continue;
        for (Element y = x; y < n; ++y)
            if (!s.contains(y) && s.contains(a.join(x, y))) return false;
    }
    return true;
}

FilterClassification classify(const Algebra& a, const ElementSet& s) {
    FilterClassification c;
    const auto members = s.members();
    c.nonempty = !members.empty();
    c.up_closed = isUpClosed(a, s);
    c.contains_top = s.contains(a.top());
    c.proper = !s.isFull();
    c.meet_closed = true;
    c.otimes_closed = true;
    for (Element x : members)
        for (Element y : members) {
            if (!s.contains(a.meet(x, y))) c.meet_closed = false;
            if (!s.contains(a.otimes(x, y))) c.otimes_closed = false;
        }
    c.prime = c.proper && joinSplitting(a, s);
    return c;
}

ElementSet upClosure(const Algebra& a, const ElementSet& s) {
    ElementSet out(a.size());
    for (Element x : s.members()) out |= a.upSet(x);
    return out;
}

namespace {

class UpSetEnumerator {
public:
    UpSetEnumerator(const Algebra& a, std::size_t budget) : a_(a), budget_(budget), current_(a.size()) {
        order_.resize(a.size());
        std::iota(order_.begin(), order_.end(), Element{0});
        // Larger elements have smaller up-sets, so this is a top-down linear
        // extension: every element comes after everything above it.
        std::stable_sort(order_.begin(), order_.end(),
                         [&](Element x, Element y) { return a.upSet(x).count() < a.upSet(y).count(); });
    }

    std::vector<ElementSet> run() {
        // The top comes first and is always in a nonempty up-set.
        current_.insert(order_[0]);
        descend(1);
        std::sort(out_.begin(), out_.end());
        return std::move(out_);
    }

private:
    void descend(std::size_t i) {
        if (i == order_.size()) {
            if (out_.size() == budget_)
                throw BudgetExceeded("more than " + std::to_string(budget_) + " up-sets");
            out_.push_back(current_);
            return;
        }
        const Element x = order_[i];
        descend(i + 1);
        // x may join only when every element strictly above it already did.
        ElementSet above = a_.upSet(x);
        above.erase(x);
        if (above.isSubsetOf(current_)) {
            current_.insert(x);
            descend(i + 1);
            current_.erase(x);
        }
    }

    const Algebra& a_;
    std::size_t budget_;
    std::vector<Element> order_;
    ElementSet current_;
    std::vector<ElementSet> out_;
};

}  // namespace

std::vector<ElementSet> enumerateOrderFilters(const Algebra& a, std::size_t budget) {
    return UpSetEnumerator(a, budget).run();
}

std::vector<ElementSet> enumerateImplicationFilters(const Algebra& a, std::size_t budget) {
    std::vector<ElementSet> out;
    for (auto& f : enumerateOrderFilters(a, budget))
        if (classify(a, f).otimes_closed) out.push_back(std::move(f));
    return out;
}

std::vector<ElementSet> implicationFiltersFromIdempotents(const Algebra& a) {
    std::vector<ElementSet> out;
    for (std::size_t e = 0; e < a.size(); ++e)
        if (a.oplus(static_cast<Element>(e), static_cast<Element>(e)) == e)
            out.push_back(a.upSet(static_cast<Element>(e)));
    std::sort(out.begin(), out.end());
    return out;
}

ElementSet principalFilter(const Algebra& a, Element p) { return a.upSet(p); }

ElementSet implicationFilterGenerated(const Algebra& a, const ElementSet& s) {
    ElementSet current = s;
    current.insert(a.top());
    current = upClosure(a, current);
    for (;;) {
        ElementSet next = current;
        const auto members = current.members();
        for (Element x : members)
            for (Element y : members) next.insert(a.otimes(x, y));
        next = upClosure(a, next);
        if (next == current) return current;
        current = std::move(next);
    }
}

bool isPrimeIdealComplement(const Algebra& a, const ElementSet& f) {
    const ElementSet ideal = f.complement();
    if (ideal.empty()) return false;
    const auto members = ideal.members();
    for (Element x : members) {
        if (!a.downSet(x).isSubsetOf(ideal)) return false;
        for (Element y : members)
            if (!ideal.contains(a.join(x, y))) return false;
    }
    const auto n = static_cast<Element>(a.size());
    for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y)
            if (ideal.contains(a.meet(x, y)) && !ideal.contains(x) && !ideal.contains(y)) return false;
    return true;
}

}  // namespace mvspec
