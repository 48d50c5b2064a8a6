#include "mvspec/harness.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <map>
#include <mutex>
#include <random>

#include "mvspec/errors.hpp"
#include "mvspec/spectrum.hpp"

namespace mvspec {

std::string_view toString(Variant v) { return v == Variant::PaperStated ? "paper-stated" : "repaired"; }

std::string_view toString(Status s) {
    switch (s) {
        case Status::Verified: return "verified";
        case Status::Counterexample: return "counterexample";
        case Status::Vacuous: return "vacuous";
    }
    return "vacuous";
}

int configuredThreads() {
    const char* env = std::getenv("MVSPEC_THREADS");
    if (!env) return 0;
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v <= 0) return 0;
    return static_cast<int>(v);
}

namespace {

using Clock = std::chrono::steady_clock;

double msSince(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

int resolveThreads(int requested) {
    if (requested > 0) return requested;
    const int env = configuredThreads();
    return env > 0 ? env : omp_get_max_threads();
}

std::vector<Element> joinIrreducibles(const Algebra& a) {
    std::vector<Element> out;
    for (std::size_t x = 1; x < a.size(); ++x) {
        ElementSet below = a.downSet(static_cast<Element>(x));
        below.erase(static_cast<Element>(x));
        std::size_t covers = 0;
        for (Element y : below.members()) {
            ElementSet strictly_above_y = a.upSet(y);
            strictly_above_y.erase(y);
            // y is a lower cover of x when nothing sits strictly between them.
            if ((strictly_above_y & below).empty()) ++covers;
        }
        if (covers == 1) out.push_back(static_cast<Element>(x));
    }
    return out;
}

void fillCommon(AlgebraCase& c) {
    const Algebra& a = *c.algebra;
    c.implication_filters = implicationFiltersFromIdempotents(a);
    for (const auto& p : c.implication_filters)
        if (isPrimeImplicationFilter(a, p)) c.prime_implication_filters.push_back(p);
    c.minimal_primes = minimalPrimes(a);
    c.join_irreducibles = joinIrreducibles(a);
}

std::mt19937_64 sampleStream(std::uint64_t seed, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    return std::mt19937_64(seq);
}

template <typename T>
const T& pick(std::mt19937_64& rng, const std::vector<T>& items) {
    return items[std::uniform_int_distribution<std::size_t>(0, items.size() - 1)(rng)];
}

Element randomElement(std::mt19937_64& rng, const Algebra& a) {
    return static_cast<Element>(std::uniform_int_distribution<std::size_t>(0, a.size() - 1)(rng));
}

ElementSet randomUpClosure(std::mt19937_64& rng, const Algebra& a) {
    std::bernoulli_distribution take(std::uniform_real_distribution<double>(0.02, 0.5)(rng));
    ElementSet seeds(a.size(), {a.top()});
    for (std::size_t x = 0; x < a.size(); ++x)
        if (take(rng)) seeds.insert(static_cast<Element>(x));
    return upClosure(a, seeds);
}

// A mixture over the kinds of order filter the statements care about.
ElementSet randomOrderFilter(std::mt19937_64& rng, const AlgebraCase& c) {
    const Algebra& a = *c.algebra;
    switch (std::uniform_int_distribution<int>(0, 5)(rng)) {
        case 0: return randomUpClosure(rng, a);
        case 1: return principalFilter(a, randomElement(rng, a));
        case 2: {
            // Complements of principal ideals are exactly the prime order filters.
            Element cut = randomElement(rng, a);
            if (cut == a.top()) cut = 0;
            return a.downSet(cut).complement();
        }
        case 3:
            // Principal filters at join-irreducibles: prime lattice filters.
            if (!c.join_irreducibles.empty()) return principalFilter(a, pick(rng, c.join_irreducibles));
            return randomUpClosure(rng, a);
        case 4: return pick(rng, c.implication_filters);
        default: return ElementSet::full(a.size());
    }
}

ElementSet randomImplicationFilter(std::mt19937_64& rng, const AlgebraCase& c) {
    if (!c.prime_implication_filters.empty() && std::bernoulli_distribution(0.5)(rng))
        return pick(rng, c.prime_implication_filters);
    return pick(rng, c.implication_filters);
}

Instance randomInstance(std::mt19937_64& rng, const AlgebraCase& c, Shape shape) {
    const Algebra& a = *c.algebra;
    Instance in;
    auto f = [&] { in.filters.push_back(randomOrderFilter(rng, c)); };
    auto p = [&] { in.filters.push_back(randomImplicationFilter(rng, c)); };
    auto e = [&] { in.elements.push_back(randomElement(rng, a)); };
    switch (shape) {
        case Shape::F: f(); break;
        case Shape::FG:
        case Shape::FGa:
            f();
            // Half the time G is built over F so that F within G is exercised.
            if (std::bernoulli_distribution(0.5)(rng))
                in.filters.push_back(in.filters[0] | randomOrderFilter(rng, c));
            else
                f();
            if (shape == Shape::FGa) e();
            break;
        case Shape::Fa: f(); e(); break;
        case Shape::Fab:
            f();
            e();
            if (std::bernoulli_distribution(0.5)(rng))
                in.elements.push_back(a.join(in.elements[0], randomElement(rng, a)));
            else
                e();
            break;
        case Shape::FP: f(); p(); break;
        case Shape::PQ: p(); p(); break;
        case Shape::Pa: p(); e(); break;
        case Shape::p: e(); break;
    }
    return in;
}

// Chain lengths of a random product with at most `cap` elements.
std::vector<std::size_t> randomChainLengths(std::mt19937_64& rng, std::size_t cap) {
    std::vector<std::size_t> lengths;
    std::size_t size = 1;
    do {
        const std::size_t room = cap / size;
        if (room < 2) break;
        const std::size_t k = std::uniform_int_distribution<std::size_t>(2, std::min<std::size_t>(room, 12))(rng);
        lengths.push_back(k);
        size *= k;
    } while (std::bernoulli_distribution(0.6)(rng));
    return lengths;
}

class SamplingCache {
public:
    std::shared_ptr<const AlgebraCase> get(const std::vector<std::size_t>& lengths) {
        std::lock_guard lock(mutex_);
        auto it = cache_.find(lengths);
        if (it != cache_.end()) return it->second;
        std::vector<Algebra> factors;
        for (auto k : lengths) factors.push_back(chain(k));
        auto alg = std::make_shared<const Algebra>(factors.size() == 1 ? factors[0] : product(factors));
        auto c = std::make_shared<const AlgebraCase>(prepareSamplingCase(alg));
        cache_.emplace(lengths, c);
        return c;
    }

private:
    std::mutex mutex_;
    std::map<std::vector<std::size_t>, std::shared_ptr<const AlgebraCase>> cache_;
};

SamplingCache& samplingCache() {
    static SamplingCache cache;
    return cache;
}

// Visits instances of `shape` in descending order (filters from the largest
// bit pattern down, elements from the highest index down) until `visit`
// returns false.
template <typename Visit>
void forEachInstance(const AlgebraCase& c, Shape shape, Visit&& visit) {
    const auto& ofs = c.order_filters;
    const auto& ifs = c.implication_filters;
    const auto n = static_cast<Element>(c.algebra->size());
    Instance in;
    auto run = [&] { return visit(static_cast<const Instance&>(in)); };

    auto elements = [&](std::size_t count, auto&& inner) -> bool {
        if (count == 1) {
            for (Element x = n; x-- > 0;) {
                in.elements = {x};
                if (!inner()) return false;
            }
            return true;
        }
        for (Element x = n; x-- > 0;)
            for (Element y = n; y-- > 0;) {
                in.elements = {x, y};
                if (!inner()) return false;
            }
        return true;
    };
    auto filters = [&](const std::vector<ElementSet>& first, const std::vector<ElementSet>* second,
                       auto&& inner) -> bool {
        for (std::size_t i = first.size(); i-- > 0;) {
            if (!second) {
                in.filters = {first[i]};
                if (!inner()) return false;
                continue;
            }
            for (std::size_t j = second->size(); j-- > 0;) {
                in.filters = {first[i], (*second)[j]};
                if (!inner()) return false;
            }
        }
        return true;
    };

    switch (shape) {
        case Shape::F: filters(ofs, nullptr, run); break;
        case Shape::FG: filters(ofs, &ofs, run); break;
        case Shape::Fa: filters(ofs, nullptr, [&] { return elements(1, run); }); break;
        case Shape::Fab: filters(ofs, nullptr, [&] { return elements(2, run); }); break;
        case Shape::FGa: filters(ofs, &ofs, [&] { return elements(1, run); }); break;
        case Shape::FP: filters(ofs, &ifs, run); break;
        case Shape::PQ: filters(ifs, &ifs, run); break;
        case Shape::Pa: filters(ifs, nullptr, [&] { return elements(1, run); }); break;
        case Shape::p:
            in.filters.clear();
            elements(1, run);
            break;
    }
}

struct Tally {
    std::size_t instances = 0;
    std::size_t hits = 0;
    std::map<std::string, std::size_t, std::less<>> subcases;
    std::optional<Instance> failing;
    double elapsed_ms = 0.0;

    void record(const Verdict& v) {
        ++instances;
        if (v.hypothesis) ++hits;
        if (!v.subcase.empty()) ++subcases[std::string(v.subcase)];
    }
    void absorb(const Tally& o) {
        instances += o.instances;
        hits += o.hits;
        for (const auto& [k, v] : o.subcases) subcases[k] += v;
        elapsed_ms += o.elapsed_ms;
    }
};

Tally runUnit(const Statement& s, const AlgebraCase& c) {
    const auto start = Clock::now();
    Tally t;
    forEachInstance(c, s.shape, [&](const Instance& in) {
        const Verdict v = s.check(c, in, nullptr);
        t.record(v);
        if (v.failed()) {
            t.failing = in;
            return false;
        }
        return true;
    });
    t.elapsed_ms = msSince(start);
    return t;
}

StatementReport finishReport(const Statement& s, const Tally& t, std::string mode) {
    StatementReport r;
    r.id = s.id;
    r.variant = s.variant;
    r.mode = std::move(mode);
    r.instances = t.instances;
    r.hypothesis_hits = t.hits;
    r.expected_counterexample = s.expected_counterexample;
    r.elapsed_ms = t.elapsed_ms;
    if (t.failing) r.status = Status::Counterexample;
    else r.status = t.hits > 0 ? Status::Verified : Status::Vacuous;
    for (const auto& name : s.declared_subcases) {
        auto it = t.subcases.find(name);
        const std::size_t count = it == t.subcases.end() ? 0 : it->second;
        r.subcases.push_back({name, count});
        if (s.subcases_partition_hits && count == 0) r.vacuous_subcases.push_back(name);
    }
    for (const auto& [name, count] : t.subcases)
        if (std::find(s.declared_subcases.begin(), s.declared_subcases.end(), name) == s.declared_subcases.end())
            r.subcases.push_back({name, count});
    return r;
}

// Folds per-case tallies in suite order, stopping after the first failure.
StatementReport mergeSuite(const Statement& s, const std::vector<AlgebraCase>& cases, const std::vector<Tally>& tallies) {
    Tally total;
    const AlgebraCase* failing_case = nullptr;
    bool partial = false;
    for (std::size_t i = 0; i < cases.size(); ++i) {
        total.absorb(tallies[i]);
        partial = partial || cases[i].partial;
        if (tallies[i].failing) {
            total.failing = tallies[i].failing;
            failing_case = &cases[i];
            break;
        }
    }
    StatementReport r = finishReport(s, total, "suite");
    r.partial = partial;
    if (failing_case) r.witness = makeWitness(s, *failing_case, *total.failing);
    return r;
}

void rethrowFirst(const std::vector<std::exception_ptr>& errors) {
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
}

bool selected(const SuiteConfig& config, const Statement& s) {
    // "T-07" also selects the clauses "T-07(1)", "T-07(2)", ...
    return config.only.empty() || std::any_of(config.only.begin(), config.only.end(), [&](const std::string& o) {
               return s.id == o || (s.id.size() > o.size() && s.id.compare(0, o.size(), o) == 0 && s.id[o.size()] == '(');
           });
}

std::vector<AlgebraCase> prepareAll(const SuiteConfig& config) {
    std::vector<AlgebraCase> cases;
    cases.reserve(config.algebras.size());
    for (const auto& a : config.algebras) cases.push_back(prepareCase(a, config.upset_budget, 1000, config.seed));
    return cases;
}

}  // namespace

AlgebraCase prepareSamplingCase(AlgebraPtr algebra) {
    AlgebraCase c;
    c.algebra = std::move(algebra);
    fillCommon(c);
    return c;
}

AlgebraCase prepareCase(AlgebraPtr algebra, std::size_t budget, std::size_t fallback_samples, std::uint64_t seed) {
    AlgebraCase c = prepareSamplingCase(std::move(algebra));
    try {
        c.order_filters = enumerateOrderFilters(*c.algebra, budget);
    } catch (const BudgetExceeded&) {
        c.partial = true;
        for (std::size_t i = 0; i < fallback_samples; ++i) {
            auto rng = sampleStream(seed, i);
            c.order_filters.push_back(randomOrderFilter(rng, c));
        }
        std::sort(c.order_filters.begin(), c.order_filters.end());
        c.order_filters.erase(std::unique(c.order_filters.begin(), c.order_filters.end()), c.order_filters.end());
    }
    return c;
}

std::vector<AlgebraPtr> defaultSuite() {
    std::vector<Algebra> bases;
    for (std::size_t k = 2; k <= 6; ++k) bases.push_back(chain(k));
    const std::vector<std::vector<std::size_t>> products{{2, 2}, {2, 3}, {3, 3}, {2, 2, 2}};
    for (const auto& lengths : products) {
        std::vector<Algebra> factors;
        for (auto k : lengths) factors.push_back(chain(k));
        bases.push_back(product(factors));
    }

    std::vector<AlgebraPtr> suite;
    for (auto& b : bases) suite.push_back(std::make_shared<const Algebra>(std::move(b)));
    const std::size_t base_count = suite.size();
    for (std::size_t i = 0; i < base_count; ++i) {
        const AlgebraPtr base = suite[i];
        const Algebra& a = *base;
        // Intervals at 0 and at the top are the algebra itself and the trivial one.
        for (std::size_t x = 1; x < a.size(); ++x)
            if (x != a.top())
                suite.push_back(std::make_shared<const Algebra>(interval(base, static_cast<Element>(x)).algebra));
        for (const auto& q : implicationFiltersFromIdempotents(a)) {
            if (q.count() == 1 || q.isFull()) continue;
            suite.push_back(std::make_shared<const Algebra>(quotientByImplicationFilter(base, q).quotient));
        }
    }
    return suite;
}

Verdict replay(const Statement& s, const AlgebraCase& c, const Instance& instance, Observations* obs) {
    return s.check(c, instance, obs);
}

Witness makeWitness(const Statement& s, const AlgebraCase& c, const Instance& instance) {
    const Algebra& a = *c.algebra;
    Witness w;
    w.algebra = a.label();
    for (const auto& f : instance.filters) w.filters.push_back(formatSet(a, f));
    for (Element e : instance.elements) w.elements.push_back(a.name(e));
    s.check(c, instance, &w.observed);
    w.instance = instance;
    return w;
}

StatementReport runStatement(const Statement& s, const std::vector<AlgebraCase>& cases, Execution exec) {
    std::vector<Tally> tallies(cases.size());
    std::vector<std::exception_ptr> errors(cases.size());
    const auto n = static_cast<std::ptrdiff_t>(cases.size());
    if (exec == Execution::Serial) {
        for (std::size_t i = 0; i < cases.size(); ++i) {
            tallies[i] = runUnit(s, cases[i]);
            if (tallies[i].failing) break;
        }
    } else {
#pragma omp parallel for schedule(dynamic) num_threads(resolveThreads(0))
        for (std::ptrdiff_t i = 0; i < n; ++i) {
            try {
                tallies[i] = runUnit(s, cases[i]);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
        rethrowFirst(errors);
    }
    return mergeSuite(s, cases, tallies);
}

StatementReport runStatement(const Statement& s, const SuiteConfig& config, Execution exec) {
    return runStatement(s, prepareAll(config), exec);
}

StatementReport searchCounterexample(const Statement& s, std::size_t budget, std::uint64_t seed,
                                     std::size_t size_cap, Execution exec, int threads) {
    const auto start = Clock::now();
    struct Sample {
        bool evaluated = false;
        Verdict verdict;
        std::shared_ptr<const AlgebraCase> c;
        Instance instance;
    };
    std::vector<Sample> samples(budget);
    std::atomic<std::size_t> first_failure{budget};
    std::vector<std::exception_ptr> errors(budget);

    auto draw = [&](std::size_t i) {
        if (i > first_failure.load(std::memory_order_relaxed)) return;
        auto rng = sampleStream(seed, i);
        Sample& out = samples[i];
        out.c = samplingCache().get(randomChainLengths(rng, size_cap));
        out.instance = randomInstance(rng, *out.c, s.shape);
        out.verdict = s.check(*out.c, out.instance, nullptr);
        out.evaluated = true;
        if (out.verdict.failed()) {
            std::size_t seen = first_failure.load();
            while (i < seen && !first_failure.compare_exchange_weak(seen, i)) {
            }
        }
    };

    const auto n = static_cast<std::ptrdiff_t>(budget);
    if (exec == Execution::Serial) {
        for (std::size_t i = 0; i < budget && i <= first_failure; ++i) draw(i);
    } else {
#pragma omp parallel for schedule(dynamic, 16) num_threads(resolveThreads(threads))
        for (std::ptrdiff_t i = 0; i < n; ++i) {
            try {
                draw(static_cast<std::size_t>(i));
            } catch (...) {
                errors[static_cast<std::size_t>(i)] = std::current_exception();
            }
        }
        rethrowFirst(errors);
    }

    Tally t;
    const std::size_t stop = std::min(budget, first_failure.load() + 1);
    for (std::size_t i = 0; i < stop; ++i) t.record(samples[i].verdict);
    StatementReport r;
    if (first_failure.load() < budget) {
        const Sample& bad = samples[first_failure.load()];
        t.failing = bad.instance;
        r = finishReport(s, t, "random");
        r.witness = makeWitness(s, *bad.c, bad.instance);
    } else {
        r = finishReport(s, t, "random");
    }
    r.elapsed_ms = msSince(start);
    return r;
}

std::vector<StatementReport> runAll(const SuiteConfig& config, Execution exec) {
    std::vector<const Statement*> chosen;
    for (const auto& s : registry())
        if (selected(config, s)) chosen.push_back(&s);

    const auto cases = prepareAll(config);
    std::vector<StatementReport> reports;
    if (exec == Execution::Serial) {
        for (const auto* s : chosen) reports.push_back(runStatement(*s, cases, Execution::Serial));
    } else {
        // One flat work list of (statement, case) units for load balance.
        const std::size_t per = cases.size();
        const std::size_t units = chosen.size() * per;
        std::vector<Tally> tallies(units);
        std::vector<std::exception_ptr> errors(units);
        const auto n = static_cast<std::ptrdiff_t>(units);
#pragma omp parallel for schedule(dynamic) num_threads(resolveThreads(config.threads))
        for (std::ptrdiff_t u = 0; u < n; ++u) {
            const auto idx = static_cast<std::size_t>(u);
            try {
                tallies[idx] = runUnit(*chosen[idx / per], cases[idx % per]);
            } catch (...) {
                errors[idx] = std::current_exception();
            }
        }
        rethrowFirst(errors);
        for (std::size_t i = 0; i < chosen.size(); ++i) {
            std::vector<Tally> mine(tallies.begin() + static_cast<std::ptrdiff_t>(i * per),
                                    tallies.begin() + static_cast<std::ptrdiff_t>((i + 1) * per));
            reports.push_back(mergeSuite(*chosen[i], cases, mine));
        }
    }
    if (config.samples > 0)
        for (const auto* s : chosen)
            reports.push_back(
                searchCounterexample(*s, config.samples, config.seed, config.random_size_cap, exec, config.threads));
    return reports;
}

}  // namespace mvspec
