#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mvspec/algebra.hpp"

namespace mvspec::dsl {

struct SourcePos {
    std::size_t line = 1;
    std::size_t column = 1;
};

/// `3` or `(1,0)`; tuples give per-factor indices of a product.
struct ElemLiteral {
    std::vector<std::size_t> parts;
    bool tuple = false;
    SourcePos pos;
};

struct AlgebraExpr;
using ExprPtr = std::shared_ptr<const AlgebraExpr>;

struct ChainExpr {
    std::size_t length = 0;
};
struct ProductExpr {
    std::vector<ExprPtr> factors;
};
struct IntervalExpr {
    ExprPtr child;
    ElemLiteral base;
};
struct QuotientExpr {
    ExprPtr child;
    std::vector<ElemLiteral> filter;
};
struct TableExpr {
    std::size_t size = 0;
    std::vector<std::size_t> neg;
    std::vector<std::size_t> oplus;
};
struct RefExpr {
    std::string name;
};

struct AlgebraExpr {
    std::variant<ChainExpr, ProductExpr, IntervalExpr, QuotientExpr, TableExpr, RefExpr> node;
    SourcePos pos;
};

struct AlgebraBinding {
    std::string name;
    ExprPtr expr;
    SourcePos pos;
};

struct FilterBinding {
    std::string name;
    std::string algebra;
    std::vector<ElemLiteral> elements;
    SourcePos pos;
};

struct SourceFile {
    std::vector<std::variant<AlgebraBinding, FilterBinding>> bindings;
};

/// Parses the definition language:
///
///     algebra NAME = expr
///     filter NAME on NAME = { elem, ... }
///
///     expr := chain INT | product(expr, expr, ...) | interval(expr, elem)
///           | quotient(expr, { elem, ... })
///           | table { size INT; neg INT...; oplus INT... } | NAME
///     elem := INT | (INT, INT, ...)
///
/// `#` starts a comment running to the end of the line. Throws ParseError
/// (with line and column) on lexical and syntax errors, duplicate names and
/// references to names not bound earlier.
SourceFile parse(std::string_view text);

/// Parses a single algebra expression, e.g. a report label.
ExprPtr parseExpression(std::string_view text);

/// Parses a `{...}` set literal (possibly empty) or a single element
/// literal.
std::vector<ElemLiteral> parseElementSet(std::string_view text);
ElemLiteral parseElement(std::string_view text);

struct NamedFilter {
    AlgebraPtr algebra;
    ElementSet set;
};

struct Environment {
    std::map<std::string, AlgebraPtr> algebras;
    std::map<std::string, NamedFilter> filters;
    /// Algebra names in binding order.
    std::vector<std::string> algebra_order;
    std::vector<std::string> filter_order;
};

struct EvalOptions {
    /// Reject tables that fail checkAxioms. Off only for `check`, which
    /// reports violations itself.
    bool validate_tables = true;
};

/// Evaluates bindings in order. Algebras bound at top level take their
/// binding name as label. Construction errors (chain 1, element out of
/// range, quotient by a non-implication filter, axiom violations) are
/// rethrown as ParseError at the offending position.
Environment evaluate(const SourceFile& file, EvalOptions options = {});

/// Evaluates one expression against already-bound names.
AlgebraPtr evaluateExpression(const AlgebraExpr& expr, const Environment& env = {}, EvalOptions options = {});

/// Resolves literals to element indices of `a`.
Element resolveElement(const Algebra& a, const ElemLiteral& lit);
ElementSet resolveSet(const Algebra& a, const std::vector<ElemLiteral>& lits);

/// Canonical `table { size n; neg ...; oplus ... }` text.
std::string serializeAlgebra(const Algebra& a);

}  // namespace mvspec::dsl
