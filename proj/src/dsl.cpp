#include "mvspec/dsl.hpp"

#include <cctype>
#include <charconv>
#include <set>
#include <sstream>

#include "mvspec/errors.hpp"
#include "mvspec/filters.hpp"

namespace mvspec::dsl {

namespace {

enum class Tok { Ident, Int, Punct, End };

struct Token {
    Tok kind = Tok::End;
    std::string text;
    std::size_t value = 0;
    SourcePos pos;
};

constexpr std::string_view kReserved[] = {"algebra", "filter", "on", "chain", "product", "interval", "quotient", "table"};

bool isReserved(std::string_view word) {
    for (auto r : kReserved)
        if (r == word) return true;
    return false;
}

std::vector<Token> lex(std::string_view text) {
    std::vector<Token> out;
    std::size_t line = 1, col = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t k) {
        for (std::size_t j = 0; j < k; ++j, ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };
    while (i < text.size()) {
        const char c = text[i];
        if (c == '#') {
            while (i < text.size() && text[i] != '\n') advance(1);
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        Token t;
        t.pos = {line, col};
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
            t.kind = Tok::Ident;
            t.text = std::string(text.substr(i, j - i));
            advance(j - i);
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            t.kind = Tok::Int;
            t.text = std::string(text.substr(i, j - i));
            auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + j, t.value);
            if (ec != std::errc{} || t.value > 65535) throw ParseError(line, col, "integer too large: " + t.text);
            advance(j - i);
        } else if (std::string_view("(){},;=").find(c) != std::string_view::npos) {
            t.kind = Tok::Punct;
            t.text = std::string(1, c);
            advance(1);
        } else {
            throw ParseError(line, col, std::string("unexpected character '") + c + "'");
        }
        out.push_back(std::move(t));
    }
    Token end;
    end.pos = {line, col};
    out.push_back(end);
    return out;
}

std::string describe(const Token& t) {
    switch (t.kind) {
        case Tok::End: return "end of input";
        case Tok::Int: return "integer " + t.text;
        default: return "'" + t.text + "'";
    }
}

class Parser {
public:
    /// With `names` null, references are not checked at parse time.
    Parser(std::string_view text, std::set<std::string>* names) : tokens_(lex(text)), names_(names) {}

    SourceFile file() {
        SourceFile out;
        while (peek().kind != Tok::End) {
            const Token& t = peek();
            if (isWord("algebra")) {
                out.bindings.emplace_back(algebraBinding());
            } else if (isWord("filter")) {
                out.bindings.emplace_back(filterBinding());
            } else {
                throw error(t, "expected 'algebra' or 'filter', found " + describe(t));
            }
        }
        return out;
    }

    ExprPtr standaloneExpr() {
        ExprPtr e = expr();
        expectEnd();
        return e;
    }

    std::vector<ElemLiteral> standaloneSet() {
        auto s = elemSet(true);
        expectEnd();
        return s;
    }

    ElemLiteral standaloneElem() {
        auto e = elem();
        expectEnd();
        return e;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    const Token& next() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }

    bool isWord(std::string_view w) const { return peek().kind == Tok::Ident && peek().text == w; }
    bool isPunct(char c) const { return peek().kind == Tok::Punct && peek().text[0] == c; }

    static ParseError error(const Token& t, const std::string& msg) { return ParseError(t.pos.line, t.pos.column, msg); }

    void expectEnd() {
        if (peek().kind != Tok::End) throw error(peek(), "unexpected " + describe(peek()) + " after expression");
    }

    void expectWord(std::string_view w) {
        if (!isWord(w)) throw error(peek(), "expected '" + std::string(w) + "', found " + describe(peek()));
        next();
    }

    void expectPunct(char c) {
        if (!isPunct(c)) throw error(peek(), std::string("expected '") + c + "', found " + describe(peek()));
        next();
    }

    std::size_t integer() {
        if (peek().kind != Tok::Int) throw error(peek(), "expected integer, found " + describe(peek()));
        return next().value;
    }

    Token newName() {
        const Token& t = peek();
        if (t.kind != Tok::Ident || isReserved(t.text)) throw error(t, "expected a name, found " + describe(t));
        if (names_ && !names_->insert(t.text).second) throw error(t, "duplicate name '" + t.text + "'");
        return next();
    }

    AlgebraBinding algebraBinding() {
        const SourcePos at = next().pos;
        // The name becomes visible only after its own expression.
        const Token& t = peek();
        if (t.kind != Tok::Ident || isReserved(t.text)) throw error(t, "expected a name, found " + describe(t));
        if (names_ && names_->count(t.text)) throw error(t, "duplicate name '" + t.text + "'");
        std::string name = next().text;
        expectPunct('=');
        ExprPtr e = expr();
        if (names_) names_->insert(name);
        return AlgebraBinding{std::move(name), std::move(e), at};
    }

    FilterBinding filterBinding() {
        const SourcePos at = next().pos;
        std::string name = newName().text;
        expectWord("on");
        const Token& ref = peek();
        if (ref.kind != Tok::Ident || isReserved(ref.text)) throw error(ref, "expected an algebra name, found " + describe(ref));
        if (names_ && !names_->count(ref.text)) throw error(ref, "unresolved reference '" + ref.text + "'");
        std::string algebra = next().text;
        expectPunct('=');
        auto elements = elemSet();
        return FilterBinding{std::move(name), std::move(algebra), std::move(elements), at};
    }

    ExprPtr expr() {
        const Token& t = peek();
        if (t.kind != Tok::Ident) throw error(t, "expected an algebra expression, found " + describe(t));
        auto node = std::make_shared<AlgebraExpr>();
        node->pos = t.pos;
        if (t.text == "chain") {
            next();
            node->node = ChainExpr{integer()};
        } else if (t.text == "product") {
            next();
            expectPunct('(');
            ProductExpr p;
            p.factors.push_back(expr());
            do {
                expectPunct(',');
                p.factors.push_back(expr());
            } while (!isPunct(')'));
            next();
            node->node = std::move(p);
        } else if (t.text == "interval") {
            next();
            expectPunct('(');
            IntervalExpr iv;
            iv.child = expr();
            expectPunct(',');
            iv.base = elem();
            expectPunct(')');
            node->node = std::move(iv);
        } else if (t.text == "quotient") {
            next();
            expectPunct('(');
            QuotientExpr q;
            q.child = expr();
            expectPunct(',');
            q.filter = elemSet();
            expectPunct(')');
            node->node = std::move(q);
        } else if (t.text == "table") {
            next();
            node->node = table();
        } else if (isReserved(t.text)) {
            throw error(t, "expected an algebra expression, found " + describe(t));
        } else {
            if (names_ && !names_->count(t.text)) throw error(t, "unresolved reference '" + t.text + "'");
            node->node = RefExpr{next().text};
        }
        return node;
    }

    TableExpr table() {
        TableExpr tab;
        expectPunct('{');
        expectWord("size");
        const Token& size_tok = peek();
        tab.size = integer();
        if (tab.size == 0) throw error(size_tok, "table size must be positive");
        expectPunct(';');
        expectWord("neg");
        tab.neg = row(tab.size, "neg");
        expectPunct(';');
        expectWord("oplus");
        tab.oplus = row(tab.size * tab.size, "oplus");
        expectPunct('}');
        return tab;
    }

    std::vector<std::size_t> row(std::size_t expected, std::string_view what) {
        const Token start = peek();
        std::vector<std::size_t> out;
        while (peek().kind == Tok::Int) out.push_back(next().value);
        if (out.size() != expected)
            throw error(start, std::string(what) + " row has " + std::to_string(out.size()) + " entries, expected " +
                                   std::to_string(expected));
        return out;
    }

    /// Set literals in files are nonempty; report text may contain "{}".
    std::vector<ElemLiteral> elemSet(bool allow_empty = false) {
        expectPunct('{');
        std::vector<ElemLiteral> out;
        if (allow_empty && isPunct('}')) {
            next();
            return out;
        }
        out.push_back(elem());
        while (isPunct(',')) {
            next();
            out.push_back(elem());
        }
        expectPunct('}');
        return out;
    }

    ElemLiteral elem() {
        ElemLiteral lit;
        lit.pos = peek().pos;
        if (isPunct('(')) {
            next();
            lit.tuple = true;
            lit.parts.push_back(integer());
            do {
                expectPunct(',');
                lit.parts.push_back(integer());
            } while (!isPunct(')'));
            next();
        } else {
            lit.parts.push_back(integer());
        }
        return lit;
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    std::set<std::string>* names_;
};

std::string literalText(const ElemLiteral& lit) {
    if (!lit.tuple) return std::to_string(lit.parts[0]);
    std::string s = "(";
    for (std::size_t i = 0; i < lit.parts.size(); ++i) s += (i ? "," : "") + std::to_string(lit.parts[i]);
    return s + ")";
}

ParseError at(const SourcePos& p, const std::string& msg) { return ParseError(p.line, p.column, msg); }

}  // namespace

SourceFile parse(std::string_view text) {
    std::set<std::string> names;
    return Parser(text, &names).file();
}

ExprPtr parseExpression(std::string_view text) { return Parser(text, nullptr).standaloneExpr(); }

std::vector<ElemLiteral> parseElementSet(std::string_view text) { return Parser(text, nullptr).standaloneSet(); }

ElemLiteral parseElement(std::string_view text) { return Parser(text, nullptr).standaloneElem(); }

Element resolveElement(const Algebra& a, const ElemLiteral& lit) {
    if (!lit.tuple) {
        if (lit.parts[0] >= a.size())
            throw at(lit.pos, "element " + literalText(lit) + " out of range for algebra of size " + std::to_string(a.size()));
        return static_cast<Element>(lit.parts[0]);
    }
    const auto& sizes = a.factorSizes();
    if (sizes.empty()) throw at(lit.pos, "tuple element " + literalText(lit) + " used on an algebra that is not a product");
    if (sizes.size() != lit.parts.size())
        throw at(lit.pos, "tuple element " + literalText(lit) + " has " + std::to_string(lit.parts.size()) +
                              " components, product has " + std::to_string(sizes.size()) + " factors");
    std::size_t x = 0;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        if (lit.parts[i] >= sizes[i])
            throw at(lit.pos, "tuple element " + literalText(lit) + " out of range in factor " + std::to_string(i + 1));
        x = x * sizes[i] + lit.parts[i];
    }
    return static_cast<Element>(x);
}

ElementSet resolveSet(const Algebra& a, const std::vector<ElemLiteral>& lits) {
    ElementSet s(a.size());
    for (const auto& lit : lits) s.insert(resolveElement(a, lit));
    return s;
}

AlgebraPtr evaluateExpression(const AlgebraExpr& expr, const Environment& env, EvalOptions options) {
    auto wrap = [&](auto&& build) -> AlgebraPtr {
        try {
            return build();
        } catch (const ParseError&) {
            throw;
        } catch (const AxiomError& e) {
            throw at(expr.pos, std::string("table violates the MV axioms: ") + describe(e.violations().front()));
        } catch (const std::exception& e) {
            throw at(expr.pos, e.what());
        }
    };
    return std::visit(
        [&](const auto& node) -> AlgebraPtr {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, ChainExpr>) {
                return wrap([&] { return std::make_shared<const Algebra>(chain(node.length)); });
            } else if constexpr (std::is_same_v<T, ProductExpr>) {
                std::vector<Algebra> factors;
                for (const auto& f : node.factors) factors.push_back(*evaluateExpression(*f, env, options));
                return wrap([&] { return std::make_shared<const Algebra>(product(factors)); });
            } else if constexpr (std::is_same_v<T, IntervalExpr>) {
                AlgebraPtr parent = evaluateExpression(*node.child, env, options);
                Element base = resolveElement(*parent, node.base);
                return wrap([&] { return std::make_shared<const Algebra>(interval(parent, base).algebra); });
            } else if constexpr (std::is_same_v<T, QuotientExpr>) {
                AlgebraPtr parent = evaluateExpression(*node.child, env, options);
                ElementSet q = resolveSet(*parent, node.filter);
                return wrap([&] { return std::make_shared<const Algebra>(quotientByImplicationFilter(parent, q).quotient); });
            } else if constexpr (std::is_same_v<T, TableExpr>) {
                return wrap([&] {
                    std::vector<Element> oplus(node.oplus.begin(), node.oplus.end());
                    std::vector<Element> neg(node.neg.begin(), node.neg.end());
                    auto a = options.validate_tables
                                 ? Algebra::fromTables(node.size, std::move(oplus), std::move(neg))
                                 : Algebra::fromTrustedTables(node.size, std::move(oplus), std::move(neg));
                    return std::make_shared<const Algebra>(a.withLabel(serializeAlgebra(a)));
                });
            } else {
                auto it = env.algebras.find(node.name);
                if (it == env.algebras.end()) throw at(expr.pos, "unresolved reference '" + node.name + "'");
                return it->second;
            }
        },
        expr.node);
}

Environment evaluate(const SourceFile& file, EvalOptions options) {
    Environment env;
    for (const auto& binding : file.bindings) {
        if (const auto* ab = std::get_if<AlgebraBinding>(&binding)) {
            AlgebraPtr a = evaluateExpression(*ab->expr, env, options);
            env.algebras[ab->name] = std::make_shared<const Algebra>(a->withLabel(ab->name));
            env.algebra_order.push_back(ab->name);
        } else {
            const auto& fb = std::get<FilterBinding>(binding);
            auto it = env.algebras.find(fb.algebra);
            if (it == env.algebras.end()) throw at(fb.pos, "unresolved reference '" + fb.algebra + "'");
            env.filters[fb.name] = NamedFilter{it->second, resolveSet(*it->second, fb.elements)};
            env.filter_order.push_back(fb.name);
        }
    }
    return env;
}

std::string serializeAlgebra(const Algebra& a) {
    std::ostringstream os;
    os << "table { size " << a.size() << "; neg";
    for (Element x : a.negTable()) os << ' ' << x;
    os << "; oplus";
    for (Element x : a.oplusTable()) os << ' ' << x;
    os << " }";
    return os.str();
}

}  // namespace mvspec::dsl
