#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace mvspec {

/// Index of an algebra element. 0 is always the bottom.
using Element = std::uint16_t;

/// A subset of {0, ..., n-1} stored as a bit set. Every filter, ideal and
/// image set in the library is one of these.
///
/// Ordering compares the sets as binary numbers with element i at bit i,
/// which is the "bit pattern" order used for all deterministic listings.
class ElementSet {
public:
    ElementSet() = default;
    explicit ElementSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}
    ElementSet(std::size_t universe, std::initializer_list<Element> members) : ElementSet(universe) {
        for (Element e : members) insert(e);
    }

    static ElementSet full(std::size_t universe) {
        ElementSet s(universe);
        for (std::size_t i = 0; i < universe; ++i) s.insert(static_cast<Element>(i));
        return s;
    }

    std::size_t universe() const noexcept { return universe_; }

    bool contains(Element e) const noexcept { return (words_[e >> 6] >> (e & 63)) & 1u; }
    void insert(Element e) noexcept { words_[e >> 6] |= std::uint64_t{1} << (e & 63); }
    void erase(Element e) noexcept { words_[e >> 6] &= ~(std::uint64_t{1} << (e & 63)); }

    std::size_t count() const noexcept {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool empty() const noexcept {
        for (auto w : words_)
            if (w) return false;
        return true;
    }
    bool isFull() const noexcept { return count() == universe_; }

    bool isSubsetOf(const ElementSet& other) const noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~other.words_[i]) return false;
        return true;
    }
    bool intersects(const ElementSet& other) const noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & other.words_[i]) return true;
        return false;
    }

    ElementSet& operator&=(const ElementSet& o) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    ElementSet& operator|=(const ElementSet& o) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    friend ElementSet operator&(ElementSet a, const ElementSet& b) noexcept { return a &= b; }
    friend ElementSet operator|(ElementSet a, const ElementSet& b) noexcept { return a |= b; }

    ElementSet complement() const {
        ElementSet c(universe_);
        for (std::size_t i = 0; i < universe_; ++i)
            if (!contains(static_cast<Element>(i))) c.insert(static_cast<Element>(i));
        return c;
    }

    /// Members in increasing index order.
    std::vector<Element> members() const {
        std::vector<Element> out;
        out.reserve(count());
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits) {
                int b = std::countr_zero(bits);
                out.push_back(static_cast<Element>(w * 64 + static_cast<std::size_t>(b)));
                bits &= bits - 1;
            }
        }
        return out;
    }

    friend bool operator==(const ElementSet&, const ElementSet&) = default;

    friend std::strong_ordering operator<=>(const ElementSet& a, const ElementSet& b) noexcept {
        if (a.universe_ != b.universe_) return a.universe_ <=> b.universe_;
        for (std::size_t i = a.words_.size(); i-- > 0;)
            if (a.words_[i] != b.words_[i]) return a.words_[i] <=> b.words_[i];
        return std::strong_ordering::equal;
    }

private:
    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace mvspec
