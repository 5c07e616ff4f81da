#include "wfomc/parser.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <optional>
#include <vector>

namespace wfomc {

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

enum class Tok {
    Ident,
    Int,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Slash,
    Bar,
    Plus,
    Minus,
    Eq,
    Le,
    Ge,
    Tilde,
    Amp,
    Arrow,
    DoubleArrow,
    Dot,
    End,
};

struct Token {
    Tok kind;
    std::string text;
    std::size_t line;
    std::size_t column;
};

std::vector<Token> tokenize(std::string_view src) {
    std::vector<Token> out;
    std::size_t line = 1;
    std::size_t col = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t count) {
        for (std::size_t k = 0; k < count; ++k) {
            if (src[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
            ++i;
        }
    };
    while (i < src.size()) {
        const char c = src[i];
        if (c == '#') {
            while (i < src.size() && src[i] != '\n') advance(1);
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        const std::size_t l = line;
        const std::size_t cc = col;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
            out.push_back({Tok::Ident, std::string(src.substr(i, j - i)), l, cc});
            advance(j - i);
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            out.push_back({Tok::Int, std::string(src.substr(i, j - i)), l, cc});
            advance(j - i);
            continue;
        }
        auto starts = [&](std::string_view s) { return src.substr(i, s.size()) == s; };
        static constexpr std::array<std::pair<std::string_view, Tok>, 18> symbols{{
            {"<->", Tok::DoubleArrow},
            {"->", Tok::Arrow},
            {"<=", Tok::Le},
            {">=", Tok::Ge},
            {"(", Tok::LParen},
            {")", Tok::RParen},
            {"[", Tok::LBracket},
            {"]", Tok::RBracket},
            {",", Tok::Comma},
            {"/", Tok::Slash},
            {"|", Tok::Bar},
            {"+", Tok::Plus},
            {"-", Tok::Minus},
            {"=", Tok::Eq},
            {"~", Tok::Tilde},
            {"&", Tok::Amp},
            {".", Tok::Dot},
            {"!", Tok::Tilde},
        }};
        bool matched = false;
        for (const auto& [text, kind] : symbols) {
            if (starts(text)) {
                out.push_back({kind, std::string(text), l, cc});
                advance(text.size());
                matched = true;
                break;
            }
        }
        if (!matched) throw ParseError(std::string("unexpected character '") + c + "'", l, cc);
    }
    out.push_back({Tok::End, "", line, col});
    return out;
}

bool is_keyword(const std::string& s) {
    static const std::array<std::string_view, 10> keywords{
        "predicate", "axiom", "constraint", "sentence", "forall", "exists", "true", "false", "weight", "acyclic"};
    for (auto k : keywords) {
        if (s == k) return true;
    }
    return false;
}

class Parser {
public:
    explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

    Problem run() {
        bool have_sentence = false;
        while (peek().kind != Tok::End) {
            const Token& t = peek();
            if (t.kind != Tok::Ident) fail("expected 'predicate', 'axiom', 'constraint' or 'sentence'", t);
            if (t.text == "predicate") {
                if (have_sentence) fail("predicate declared after the sentence", t);
                declaration();
            } else if (t.text == "axiom") {
                if (have_sentence) fail("axiom declared after the sentence", t);
                axiom();
            } else if (t.text == "constraint") {
                constraint();
            } else if (t.text == "sentence") {
                if (have_sentence) fail("more than one sentence", t);
                next();
                problem_.sentence = formula();
                have_sentence = true;
            } else {
                fail("expected 'predicate', 'axiom', 'constraint' or 'sentence', got '" + t.text + "'", t);
            }
        }
        if (!have_sentence) fail("missing sentence", peek());
        return std::move(problem_);
    }

private:
    [[noreturn]] static void fail(const std::string& message, const Token& at) {
        throw ParseError(message, at.line, at.column);
    }

    const Token& peek() const { return tokens_[pos_]; }
    const Token& next() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }
    bool accept(Tok kind) {
        if (peek().kind != kind) return false;
        next();
        return true;
    }
    const Token& expect(Tok kind, const char* what) {
        if (peek().kind != kind) fail(std::string("expected ") + what, peek());
        return next();
    }
    bool accept_word(std::string_view word) {
        if (peek().kind == Tok::Ident && peek().text == word) {
            next();
            return true;
        }
        return false;
    }

    std::string name() {
        const Token& t = expect(Tok::Ident, "a name");
        if (is_keyword(t.text)) fail("'" + t.text + "' is a reserved word", t);
        return t.text;
    }

    std::uint64_t integer() {
        const Token& t = expect(Tok::Int, "an integer");
        try {
            return std::stoull(t.text);
        } catch (const std::exception&) {
            fail("integer out of range", t);
        }
    }

    Rational rational() {
        const Token& start = peek();
        std::string text;
        if (accept(Tok::Minus)) {
            text = "-";
        } else {
            accept(Tok::Plus);
        }
        text += expect(Tok::Int, "a rational number").text;
        if (accept(Tok::Slash)) text += "/" + expect(Tok::Int, "a denominator").text;
        try {
            return parse_rational(text);
        } catch (const std::invalid_argument& e) {
            fail(e.what(), start);
        }
    }

    std::size_t predicate_ref(const Token& at, const std::string& n) const {
        auto index = problem_.vocabulary.find(n);
        if (!index) fail("undeclared predicate '" + n + "'", at);
        return *index;
    }

    void declaration() {
        next();
        const Token& at = peek();
        std::string n = name();
        expect(Tok::Slash, "'/'");
        const Token& arity_tok = peek();
        const std::uint64_t arity = integer();
        if (arity < 1 || arity > 2) fail("arity must be 1 or 2", arity_tok);
        if (problem_.vocabulary.find(n)) fail("predicate '" + n + "' declared twice", at);
        problem_.vocabulary.add(n, static_cast<std::uint32_t>(arity));
        if (accept_word("weight")) {
            Weight w;
            w.positive = rational();
            w.negative = rational();
            problem_.weights.set(n, std::move(w));
        }
    }

    void axiom() {
        const Token& at = next();
        if (problem_.dag) fail("only one acyclic axiom is supported", at);
        if (!accept_word("acyclic")) fail("expected 'acyclic'", peek());
        expect(Tok::LParen, "'('");
        const Token& rel_tok = peek();
        DagAxiom dag;
        dag.relation = predicate_ref(rel_tok, name());
        if (problem_.vocabulary[dag.relation].arity != 2) fail("acyclic relation must be binary", rel_tok);
        if (accept(Tok::Comma)) {
            dag.source = optional_unary();
            expect(Tok::Comma, "','");
            dag.sink = optional_unary();
        }
        expect(Tok::RParen, "')'");
        problem_.dag = dag;
    }

    std::optional<std::size_t> optional_unary() {
        const Token& t = expect(Tok::Ident, "a predicate name or '_'");
        if (t.text == "_") return std::nullopt;
        if (is_keyword(t.text)) fail("'" + t.text + "' is a reserved word", t);
        const std::size_t p = predicate_ref(t, t.text);
        if (problem_.vocabulary[p].arity != 1) fail("source/sink predicate must be unary", t);
        return p;
    }

    void constraint() {
        next();
        CardinalityConstraint c;
        do {
            expect(Tok::Bar, "'|'");
            const Token& at = peek();
            c.terms.push_back(predicate_ref(at, name()));
            expect(Tok::Bar, "'|'");
        } while (accept(Tok::Plus));
        if (accept(Tok::Eq)) {
            c.cmp = Comparator::Eq;
        } else if (accept(Tok::Le)) {
            c.cmp = Comparator::Le;
        } else if (accept(Tok::Ge)) {
            c.cmp = Comparator::Ge;
        } else {
            fail("expected '=', '<=' or '>='", peek());
        }
        c.bound = integer();
        problem_.constraints.push_back(std::move(c));
    }

    // ---- formulas ----

    Var variable_slot(const Token& at, const std::string& n) {
        for (std::size_t s = 0; s < 2; ++s) {
            if (slots_[s] == n) return static_cast<Var>(s);
        }
        const std::size_t preferred = n == "y" ? 1 : 0;
        for (std::size_t s : {preferred, 1 - preferred}) {
            if (slots_[s].empty()) {
                slots_[s] = n;
                return static_cast<Var>(s);
            }
        }
        fail("more than two variables ('" + n + "')", at);
    }

    Formula formula() { return iff_level(); }

    Formula iff_level() {
        Formula left = implies_level();
        while (accept(Tok::DoubleArrow)) left = fol::iff(left, implies_level());
        return left;
    }

    Formula implies_level() {
        Formula left = or_level();
        if (accept(Tok::Arrow)) return fol::implies(left, implies_level());
        return left;
    }

    Formula or_level() {
        std::vector<Formula> parts{and_level()};
        while (accept(Tok::Bar)) parts.push_back(and_level());
        return parts.size() == 1 ? parts.front() : fol::disj(std::move(parts));
    }

    Formula and_level() {
        std::vector<Formula> parts{unary()};
        while (accept(Tok::Amp)) parts.push_back(unary());
        return parts.size() == 1 ? parts.front() : fol::conj(std::move(parts));
    }

    Formula unary() {
        if (accept(Tok::Tilde)) return fol::negate(unary());
        const Token& t = peek();
        if (t.kind == Tok::Ident && (t.text == "forall" || t.text == "exists")) return quantified();
        return primary();
    }

    Formula quantified() {
        const Token& q = next();
        std::optional<Comparator> cmp;
        std::uint64_t bound = 0;
        if (q.text == "exists" && accept(Tok::LBracket)) {
            if (accept(Tok::Eq)) {
                cmp = Comparator::Eq;
            } else if (accept(Tok::Le)) {
                cmp = Comparator::Le;
            } else if (accept(Tok::Ge)) {
                cmp = Comparator::Ge;
            } else {
                fail("expected '=', '<=' or '>=' in counting quantifier", peek());
            }
            bound = integer();
            expect(Tok::RBracket, "']'");
        }
        const Token& var_tok = expect(Tok::Ident, "a variable");
        if (is_keyword(var_tok.text)) fail("'" + var_tok.text + "' is a reserved word", var_tok);
        const Var v = variable_slot(var_tok, var_tok.text);
        // "Q v. body" scopes to the end; "Q v body" binds like '~'
        const bool dotted = accept(Tok::Dot);
        bound_.push_back(v);
        Formula body = dotted ? formula() : unary();
        bound_.pop_back();
        if (cmp) {
            if (free_vars(body) != bit(v)) {
                fail("counting quantifier body must have exactly one free variable, the quantified one", q);
            }
            return fol::counting(*cmp, bound, v, std::move(body));
        }
        return q.text == "forall" ? fol::forall(v, std::move(body)) : fol::exists(v, std::move(body));
    }

    Formula primary() {
        const Token& t = peek();
        if (accept(Tok::LParen)) {
            Formula f = formula();
            expect(Tok::RParen, "')'");
            return f;
        }
        if (t.kind != Tok::Ident) fail("expected a formula", t);
        if (accept_word("true")) return fol::top();
        if (accept_word("false")) return fol::bottom();
        const std::string n = name();
        const std::size_t p = predicate_ref(t, n);
        expect(Tok::LParen, "'('");
        std::vector<Var> terms;
        do {
            const Token& vt = expect(Tok::Ident, "a variable");
            if (is_keyword(vt.text)) fail("'" + vt.text + "' is a reserved word", vt);
            const Var v = variable_slot(vt, vt.text);
            if (std::find(bound_.begin(), bound_.end(), v) == bound_.end()) {
                fail("free variable '" + vt.text + "'", vt);
            }
            terms.push_back(v);
        } while (accept(Tok::Comma));
        expect(Tok::RParen, "')'");
        if (terms.size() != problem_.vocabulary[p].arity) {
            fail("predicate '" + n + "' has arity " + std::to_string(problem_.vocabulary[p].arity) + " but got " +
                     std::to_string(terms.size()) + " arguments",
                 t);
        }
        return fol::atom(p, std::move(terms));
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    Problem problem_;
    std::array<std::string, 2> slots_;
    std::vector<Var> bound_;
};

}  // namespace

Problem parse(std::string_view text) { return Parser(text).run(); }

}  // namespace wfomc
