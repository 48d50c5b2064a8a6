#pragma once

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "mvspec/harness.hpp"

namespace mvspec::testing {

struct CliResult {
    int code = 0;
    std::string out;
    std::string err;
};

CliResult runCli(std::vector<std::string> args);

std::string fixture(const std::string& relative);
std::string readText(const std::string& path);

/// Prepared default-suite cases, built once per process.
const std::vector<AlgebraCase>& suiteCases();

AlgebraPtr share(Algebra a);

/// product(chain k1, chain k2, ...).
Algebra chains(std::initializer_list<std::size_t> lengths);

/// Element by display name, e.g. "(1,0)" or "2".
Element el(const Algebra& a, std::string_view name);
ElementSet set(const Algebra& a, std::initializer_list<std::string_view> names);

}  // namespace mvspec::testing
