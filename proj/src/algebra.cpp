#include "mvspec/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "mvspec/errors.hpp"

namespace mvspec {

namespace {

std::vector<std::string> indexNames(std::size_t n) {
    std::vector<std::string> names(n);
    for (std::size_t i = 0; i < n; ++i) names[i] = std::to_string(i);
    return names;
}

void checkShape(std::size_t size, const std::vector<Element>& oplus, const std::vector<Element>& neg,
                const std::vector<std::string>& names) {
    if (size == 0) throw InvalidArgument("algebra size must be positive");
    if (size > 0xFFFF) throw InvalidArgument("algebra size exceeds 65535");
    if (oplus.size() != size * size)
        throw InvalidArgument("oplus table has " + std::to_string(oplus.size()) + " entries, expected " +
                              std::to_string(size * size));
    if (neg.size() != size)
        throw InvalidArgument("neg table has " + std::to_string(neg.size()) + " entries, expected " +
                              std::to_string(size));
    if (!names.empty() && names.size() != size) throw InvalidArgument("element name count does not match size");
    for (std::size_t i = 0; i < oplus.size(); ++i)
        if (oplus[i] >= size)
            throw InvalidArgument("oplus entry (" + std::to_string(i / size) + "," + std::to_string(i % size) +
                                  ") = " + std::to_string(oplus[i]) + " is out of range");
    for (std::size_t i = 0; i < size; ++i)
        if (neg[i] >= size)
            throw InvalidArgument("neg entry " + std::to_string(i) + " = " + std::to_string(neg[i]) +
                                  " is out of range");
}

}  // namespace

Algebra Algebra::fromTrustedTables(std::size_t size, std::vector<Element> oplus, std::vector<Element> neg,
                                   std::vector<std::string> names, std::string label) {
    checkShape(size, oplus, neg, names);
    Algebra a;
    a.size_ = size;
    a.oplus_ = std::move(oplus);
    a.neg_ = std::move(neg);
    a.names_ = names.empty() ? indexNames(size) : std::move(names);
    a.label_ = std::move(label);
    a.derive();
    return a;
}

Algebra Algebra::fromTables(std::size_t size, std::vector<Element> oplus, std::vector<Element> neg,
                            std::vector<std::string> names, std::string label) {
    Algebra a = fromTrustedTables(size, std::move(oplus), std::move(neg), std::move(names), std::move(label));
    auto violations = checkAxioms(a);
    if (!violations.empty()) throw AxiomError(std::move(violations));
    return a;
}

void Algebra::derive() {
    const std::size_t n = size_;
    imp_.resize(n * n);
    otimes_.resize(n * n);
    join_.resize(n * n);
    meet_.resize(n * n);
    // Each table only reads tables filled before it.
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            imp_[x * n + y] = oplus_[neg_[x] * n + y];
            otimes_[x * n + y] = neg_[oplus_[neg_[x] * n + neg_[y]]];
        }
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) join_[x * n + y] = imp_[imp_[x * n + y] * n + y];
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) meet_[x * n + y] = neg_[join_[neg_[x] * n + neg_[y]]];

    up_.assign(n, ElementSet(n));
    down_.assign(n, ElementSet(n));
    const Element t = top();
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (imp_[x * n + y] == t) {
                up_[x].insert(static_cast<Element>(y));
                down_[y].insert(static_cast<Element>(x));
            }
    chain_ = true;
    for (std::size_t x = 0; x < n && chain_; ++x)
        for (std::size_t y = x + 1; y < n; ++y)
            if (!up_[x].contains(static_cast<Element>(y)) && !down_[x].contains(static_cast<Element>(y))) {
                chain_ = false;
                break;
            }
}

Algebra Algebra::withLabel(std::string label) const {
    Algebra copy = *this;
    copy.label_ = std::move(label);
    return copy;
}

Algebra Algebra::withFactorSizes(std::vector<std::size_t> sizes) const {
    Algebra copy = *this;
    copy.factor_sizes_ = std::move(sizes);
    return copy;
}

AxiomError::AxiomError(std::vector<AxiomViolation> violations)
    : std::runtime_error(violations.empty() ? std::string("axiom violation") : describe(violations.front())),
      violations_(std::move(violations)) {}

std::string describe(const AxiomViolation& v) {
    std::ostringstream os;
    os << v.axiom << " fails at (";
    for (std::size_t i = 0; i < v.witness.size(); ++i) os << (i ? "," : "") << v.witness[i];
    os << ")";
    return os.str();
}

Algebra trivialAlgebra() { return Algebra::fromTrustedTables(1, {0}, {0}, {}, "chain 1"); }

Algebra chain(std::size_t k) {
    if (k < 2) throw InvalidArgument("chain requires k >= 2, got " + std::to_string(k));
    std::vector<Element> oplus(k * k), neg(k);
    for (std::size_t i = 0; i < k; ++i) {
        neg[i] = static_cast<Element>(k - 1 - i);
        for (std::size_t j = 0; j < k; ++j) oplus[i * k + j] = static_cast<Element>(std::min(k - 1, i + j));
    }
    return Algebra::fromTrustedTables(k, std::move(oplus), std::move(neg), {}, "chain " + std::to_string(k));
}

Algebra product(std::span<const Algebra> factors) {
    if (factors.empty()) throw InvalidArgument("product of an empty sequence");
    std::size_t n = 1;
    for (const auto& f : factors) {
        n *= f.size();
        if (n > 0xFFFF) throw InvalidArgument("product exceeds 65535 elements");
    }
    const std::size_t m = factors.size();

    // digits[x] = per-factor coordinates of x, last factor fastest.
    std::vector<std::vector<Element>> digits(n, std::vector<Element>(m));
    for (std::size_t x = 0; x < n; ++x) {
        std::size_t r = x;
        for (std::size_t i = m; i-- > 0;) {
            digits[x][i] = static_cast<Element>(r % factors[i].size());
            r /= factors[i].size();
        }
    }
    auto encode = [&](const std::vector<Element>& d) {
        std::size_t x = 0;
        for (std::size_t i = 0; i < m; ++i) x = x * factors[i].size() + d[i];
        return static_cast<Element>(x);
    };

    std::vector<Element> oplus(n * n), neg(n);
    std::vector<Element> tmp(m);
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t i = 0; i < m; ++i) tmp[i] = factors[i].neg(digits[x][i]);
        neg[x] = encode(tmp);
        for (std::size_t y = 0; y < n; ++y) {
            for (std::size_t i = 0; i < m; ++i) tmp[i] = factors[i].oplus(digits[x][i], digits[y][i]);
            oplus[x * n + y] = encode(tmp);
        }
    }

    std::vector<std::string> names(n);
    for (std::size_t x = 0; x < n; ++x) {
        std::string s = "(";
        for (std::size_t i = 0; i < m; ++i) s += (i ? "," : "") + std::to_string(digits[x][i]);
        names[x] = s + ")";
    }
    std::string label = "product(";
    std::vector<std::size_t> sizes;
    for (std::size_t i = 0; i < m; ++i) {
        label += (i ? ", " : "") + factors[i].label();
        sizes.push_back(factors[i].size());
    }
    label += ")";
    return Algebra::fromTrustedTables(n, std::move(oplus), std::move(neg), std::move(names), std::move(label))
        .withFactorSizes(std::move(sizes));
}

std::optional<Element> IntervalEmbedding::fromParent(Element x) const {
    auto it = std::find(to_parent.begin(), to_parent.end(), x);
    if (it == to_parent.end()) return std::nullopt;
    return static_cast<Element>(it - to_parent.begin());
}

IntervalEmbedding interval(AlgebraPtr parent, Element base) {
    const Algebra& p = *parent;
    if (base >= p.size()) throw InvalidArgument("interval base " + std::to_string(base) + " is out of range");

    std::vector<Element> carrier{base};
    for (Element x : p.upSet(base).members())
        if (x != base) carrier.push_back(x);
    const std::size_t m = carrier.size();
    std::vector<Element> local(p.size(), 0);
    for (std::size_t i = 0; i < m; ++i) local[carrier[i]] = static_cast<Element>(i);

    std::vector<Element> oplus(m * m), neg(m);
    for (std::size_t i = 0; i < m; ++i) {
        const Element xn = p.imp(carrier[i], base);
        neg[i] = local[xn];
        for (std::size_t j = 0; j < m; ++j) oplus[i * m + j] = local[p.imp(xn, carrier[j])];
    }
    std::string label;
    if (!p.label().empty()) label = "interval(" + p.label() + ", " + p.name(base) + ")";
    IntervalEmbedding e{parent, base, Algebra::fromTrustedTables(m, std::move(oplus), std::move(neg), {}, label),
                        std::move(carrier)};
    return e;
}

QuotientMap quotientByImplicationFilter(AlgebraPtr parent, const ElementSet& q) {
    const Algebra& p = *parent;
    const std::size_t n = p.size();
    if (q.universe() != n) throw PreconditionViolation("quotient set has the wrong universe size");
    if (!q.contains(p.top())) throw PreconditionViolation("quotient set is not an implication filter: missing top");
    for (Element x : q.members()) {
        if (!p.upSet(x).isSubsetOf(q))
            throw PreconditionViolation("quotient set is not an implication filter: not up-closed at " + p.name(x));
        for (Element y : q.members())
            if (!q.contains(p.otimes(x, y)))
                throw PreconditionViolation("quotient set is not an implication filter: not otimes-closed at " +
                                            p.name(x) + "," + p.name(y));
    }

    constexpr Element unassigned = 0xFFFF;
    std::vector<Element> class_of(n, unassigned);
    std::vector<Element> representative;
    for (std::size_t x = 0; x < n; ++x) {
        if (class_of[x] != unassigned) continue;
        const auto c = static_cast<Element>(representative.size());
        representative.push_back(static_cast<Element>(x));
        for (std::size_t y = x; y < n; ++y)
            if (q.contains(p.imp(static_cast<Element>(x), static_cast<Element>(y))) &&
                q.contains(p.imp(static_cast<Element>(y), static_cast<Element>(x))))
                class_of[y] = c;
    }
    const std::size_t m = representative.size();
    std::vector<Element> oplus(m * m), neg(m);
    for (std::size_t i = 0; i < m; ++i) {
        neg[i] = class_of[p.neg(representative[i])];
        for (std::size_t j = 0; j < m; ++j) oplus[i * m + j] = class_of[p.oplus(representative[i], representative[j])];
    }
    std::string label;
    if (!p.label().empty()) label = "quotient(" + p.label() + ", " + formatSet(p, q) + ")";
    return QuotientMap{parent, q, Algebra::fromTrustedTables(m, std::move(oplus), std::move(neg), {}, label),
                       std::move(class_of), std::move(representative)};
}

std::string formatSet(const Algebra& a, const ElementSet& s) {
    std::string out = "{";
    bool first = true;
    for (Element x : s.members()) {
        if (!first) out += ",";
        out += a.name(x);
        first = false;
    }
    return out + "}";
}

}  // namespace mvspec
