#pragma once

#include <optional>
#include <string>

#include "mvspec/algebra.hpp"
#include "mvspec/spectrum.hpp"

namespace mvspec {

/// Hasse diagram of the order as a DOT digraph, bottom at the bottom.
/// Nodes appear in index order and edges sorted by (lower, upper), so the
/// text is byte-stable. Highlighted elements are filled.
std::string renderDot(const Algebra& a, const std::optional<ElementSet>& highlight = std::nullopt);

/// Inclusion diagram of a deduplicated subordinate family; nodes are
/// labelled by their sets ("{}" for the empty set).
std::string renderFamilyDot(const Algebra& a, const SubordinateFamily& family);

}  // namespace mvspec
