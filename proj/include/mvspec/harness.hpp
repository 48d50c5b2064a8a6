#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mvspec/algebra.hpp"
#include "mvspec/filters.hpp"

namespace mvspec {

/// One algebra prepared for statement checking: its filters are enumerated
/// once and shared by every statement.
struct AlgebraCase {
    AlgebraPtr algebra;
    /// All order filters, ascending; a random sample when `partial`.
    std::vector<ElementSet> order_filters;
    std::vector<ElementSet> implication_filters;
    std::vector<ElementSet> prime_implication_filters;
    std::vector<ElementSet> minimal_primes;
    /// Elements with exactly one lower cover.
    std::vector<Element> join_irreducibles;
    bool partial = false;
};

/// Builds a case. When the up-set enumeration exceeds `budget`, falls back
/// to `fallback_samples` random order filters drawn from `seed`.
AlgebraCase prepareCase(AlgebraPtr algebra, std::size_t budget = kDefaultUpSetBudget,
                        std::size_t fallback_samples = 1000, std::uint64_t seed = 0);

/// Same, without enumerating order filters (for random sampling).
AlgebraCase prepareSamplingCase(AlgebraPtr algebra);

enum class Variant { PaperStated, Repaired };
enum class Status { Verified, Counterexample, Vacuous };

std::string_view toString(Variant v);
std::string_view toString(Status s);

/// Quantifier pattern of a statement: F, G range over order filters, P, Q
/// over implication filters, a, b, p over elements.
enum class Shape { F, FG, Fa, Fab, FGa, FP, PQ, Pa, p };

struct Instance {
    std::vector<ElementSet> filters;
    std::vector<Element> elements;
};

/// Named intermediate value captured when a counterexample is explained.
struct Observation {
    std::string name;
    std::string value;
};
using Observations = std::vector<Observation>;

struct Verdict {
    bool hypothesis = false;
    bool conclusion = true;
    /// Counted separately when nonempty, whether or not the hypothesis held.
    std::string_view subcase = {};

    bool failed() const noexcept { return hypothesis && !conclusion; }
};

using Check = std::function<Verdict(const AlgebraCase&, const Instance&, Observations*)>;

struct Statement {
    std::string id;
    Variant variant = Variant::PaperStated;
    Shape shape = Shape::F;
    std::string description;
    Check check;
    /// Subcases always listed in the report, even at count zero.
    std::vector<std::string> declared_subcases;
    /// The declared subcases partition the hypothesis hits; any of them
    /// with no hits is reported as a vacuous subcase.
    bool subcases_partition_hits = false;
    /// Known gap: a counterexample is the expected outcome.
    bool expected_counterexample = false;
};

/// Every statement, ordered by id then variant.
const std::vector<Statement>& registry();
const Statement* findStatement(std::string_view id, Variant variant);

struct Witness {
    std::string algebra;
    std::vector<std::string> filters;
    std::vector<std::string> elements;
    Observations observed;
    /// Index form, for replay against the same algebra.
    Instance instance;
};

struct SubcaseCount {
    std::string name;
    std::size_t count = 0;
};

struct StatementReport {
    std::string id;
    Variant variant = Variant::PaperStated;
    std::string mode;  // "suite" or "random"
    Status status = Status::Vacuous;
    std::size_t instances = 0;
    std::size_t hypothesis_hits = 0;
    bool partial = false;
    std::optional<Witness> witness;
    std::vector<SubcaseCount> subcases;
    /// Declared subcases that were never hit.
    std::vector<std::string> vacuous_subcases;
    bool expected_counterexample = false;
    double elapsed_ms = 0.0;
};

enum class Execution { Serial, Parallel };

struct SuiteConfig {
    std::vector<AlgebraPtr> algebras;
    /// Random samples per statement; 0 disables random mode.
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    /// Statement ids to run (a bare id also selects its clauses); empty
    /// runs everything.
    std::vector<std::string> only;
    std::size_t upset_budget = kDefaultUpSetBudget;
    std::size_t random_size_cap = 64;
    /// 0 = OpenMP default (or MVSPEC_THREADS when set).
    int threads = 0;
};

/// chain(2..6), the products 2x2, 2x3, 3x3, 2x2x2, and every nontrivial
/// interval and quotient of those reachable in one step.
std::vector<AlgebraPtr> defaultSuite();

/// Statement checked exhaustively over prepared cases.
StatementReport runStatement(const Statement& s, const std::vector<AlgebraCase>& cases,
                             Execution exec = Execution::Parallel);
StatementReport runStatement(const Statement& s, const SuiteConfig& config, Execution exec = Execution::Parallel);

/// Suite reports for every selected statement, then random reports when
/// config.samples > 0. Deterministic order; identical for both executions
/// apart from elapsed_ms.
std::vector<StatementReport> runAll(const SuiteConfig& config, Execution exec = Execution::Parallel);

/// Randomized search over products of chains of size <= size_cap. Each
/// sample i draws its algebra and instance from a stream seeded by
/// (seed, i), so the outcome does not depend on thread scheduling.
StatementReport searchCounterexample(const Statement& s, std::size_t budget, std::uint64_t seed,
                                     std::size_t size_cap = 64, Execution exec = Execution::Parallel,
                                     int threads = 0);

/// Re-evaluates a statement on a stored instance.
Verdict replay(const Statement& s, const AlgebraCase& c, const Instance& instance, Observations* obs = nullptr);

/// Witness rendered with element names of the case's algebra.
Witness makeWitness(const Statement& s, const AlgebraCase& c, const Instance& instance);

/// Thread count honoring MVSPEC_THREADS; 0 means "let OpenMP decide".
int configuredThreads();

}  // namespace mvspec
