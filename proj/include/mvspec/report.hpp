#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mvspec/harness.hpp"

namespace mvspec {

/// Configuration echoed at the top of a JSON report.
struct SuiteEcho {
    /// "builtin" or the input path.
    std::string source = "builtin";
    std::vector<std::string> algebras;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    std::vector<std::string> only;
};

struct JsonOptions {
    /// Emit measured elapsed_ms; otherwise null, keeping the output
    /// byte-identical across runs.
    bool timing = false;
};

/// Keys in fixed order: suite, statements, summary.
std::string reportJson(const std::vector<StatementReport>& reports, const SuiteEcho& suite, JsonOptions options = {});

/// Counterexample recorded in a report, in textual form.
struct StoredWitness {
    std::string id;
    Variant variant = Variant::PaperStated;
    std::string algebra;
    std::vector<std::string> filters;
    std::vector<std::string> elements;
};

/// Witnesses of every counterexample entry of a reportJson document.
/// Throws InvalidArgument on malformed input.
std::vector<StoredWitness> witnessesFromJson(std::string_view text);

}  // namespace mvspec
