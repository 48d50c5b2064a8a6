#include <array>

#include "mvspec/algebra.hpp"

namespace mvspec {

namespace {

constexpr Element kUnset = 0xFFFF;

// Invariants preserved by any MV-isomorphism.
using Signature = std::array<std::size_t, 4>;

std::vector<Signature> signatures(const Algebra& a) {
    std::vector<Signature> sig(a.size());
    for (std::size_t x = 0; x < a.size(); ++x) {
        const auto e = static_cast<Element>(x);
        sig[x] = {a.downSet(e).count(), a.upSet(e).count(), a.oplus(e, e) == e ? 1u : 0u,
                  a.neg(e) == e ? 1u : 0u};
    }
    return sig;
}

class Search {
public:
    Search(const Algebra& a, const Algebra& b)
        : a_(a), b_(b), sa_(signatures(a)), sb_(signatures(b)), map_(a.size(), kUnset), used_(b.size(), false) {}

    std::optional<std::vector<Element>> run() {
        if (extend(0)) return map_;
        return std::nullopt;
    }

private:
    // Assigns x -> y and everything forced by negation; false on conflict.
    bool assign(Element x, Element y, std::vector<Element>& trail) {
        if (map_[x] != kUnset) return map_[x] == y;
        if (used_[y] || sa_[x] != sb_[y]) return false;
        map_[x] = y;
        used_[y] = true;
        trail.push_back(x);
        return assign(a_.neg(x), b_.neg(y), trail);
    }

    void undo(std::vector<Element>& trail) {
        for (Element x : trail) {
            used_[map_[x]] = false;
            map_[x] = kUnset;
        }
        trail.clear();
    }

    bool consistent() const {
        const std::size_t n = a_.size();
        for (std::size_t x = 0; x < n; ++x) {
            if (map_[x] == kUnset) continue;
            for (std::size_t y = 0; y < n; ++y) {
                if (map_[y] == kUnset) continue;
                const Element s = a_.oplus(static_cast<Element>(x), static_cast<Element>(y));
                if (map_[s] != kUnset && map_[s] != b_.oplus(map_[x], map_[y])) return false;
            }
        }
        return true;
    }

    bool extend(std::size_t x) {
        const std::size_t n = a_.size();
        while (x < n && map_[x] != kUnset) ++x;
        if (x == n) return true;
        for (std::size_t y = 0; y < n; ++y) {
            std::vector<Element> trail;
            if (assign(static_cast<Element>(x), static_cast<Element>(y), trail) && consistent() && extend(x + 1))
                return true;
            undo(trail);
        }
        return false;
    }

    const Algebra& a_;
    const Algebra& b_;
    std::vector<Signature> sa_, sb_;
    std::vector<Element> map_;
    std::vector<bool> used_;
};

}  // namespace

std::optional<std::vector<Element>> findIsomorphism(const Algebra& a, const Algebra& b) {
    if (a.size() != b.size()) return std::nullopt;
    return Search(a, b).run();
}

}  // namespace mvspec
