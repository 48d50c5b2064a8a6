#include "mvspec/render.hpp"

#include <sstream>

namespace mvspec {

namespace {

std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

/// Cover pairs (i, j) of a strict order given by `less`, sorted.
template <class Less>
std::vector<std::pair<std::size_t, std::size_t>> covers(std::size_t n, Less less) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (!less(i, j)) continue;
            bool cover = true;
            for (std::size_t k = 0; k < n && cover; ++k)
                if (less(i, k) && less(k, j)) cover = false;
            if (cover) out.emplace_back(i, j);
        }
    return out;
}

}  // namespace

std::string renderDot(const Algebra& a, const std::optional<ElementSet>& highlight) {
    std::ostringstream os;
    os << "digraph " << quoted(a.label().empty() ? "algebra" : a.label()) << " {\n";
    os << "  rankdir=BT;\n  node [shape=circle];\n";
    for (std::size_t x = 0; x < a.size(); ++x) {
        os << "  n" << x << " [label=" << quoted(a.name(static_cast<Element>(x)));
        if (highlight && highlight->contains(static_cast<Element>(x))) os << ", style=filled, fillcolor=\"lightblue\"";
        os << "];\n";
    }
    auto less = [&](std::size_t x, std::size_t y) {
        return x != y && a.leq(static_cast<Element>(x), static_cast<Element>(y));
    };
    for (auto [x, y] : covers(a.size(), less)) os << "  n" << x << " -> n" << y << ";\n";
    os << "}\n";
    return os.str();
}

std::string renderFamilyDot(const Algebra& a, const SubordinateFamily& family) {
    std::ostringstream os;
    os << "digraph \"subordinates of " << formatSet(a, family.base_filter) << "\" {\n";
    os << "  rankdir=BT;\n  node [shape=box];\n";
    const auto& m = family.members;
    for (std::size_t i = 0; i < m.size(); ++i)
        os << "  s" << i << " [label=" << quoted(formatSet(a, m[i].second)) << "];\n";
    auto less = [&](std::size_t i, std::size_t j) { return i != j && family.included[i][j]; };
    for (auto [i, j] : covers(m.size(), less)) os << "  s" << i << " -> s" << j << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace mvspec
