#include "spbw/io.hpp"

#include <algorithm>
#include <cctype>
#include <memory>
#include <optional>
#include <sstream>

#include "spbw/error.hpp"
#include "spbw/rewriting.hpp"

namespace spbw {

namespace {

// ---------------------------------------------------------------- printing

bool deglex_greater(const MultiIndex& a, const MultiIndex& b) {
    if (a.degree() != b.degree()) {
        return a.degree() > b.degree();
    }
    return a.exponents() > b.exponents();
}

std::string variable_text(const MultiIndex& alpha, const std::vector<std::string>& names) {
    std::string out;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (alpha[i] == 0) {
            continue;
        }
        if (!out.empty()) {
            out += '*';
        }
        out += names.at(i);
        if (alpha[i] > 1) {
            out += '^' + std::to_string(alpha[i]);
        }
    }
    return out;
}

// Splits a coefficient into a sign and the text of its magnitude.
std::pair<bool, std::string> coefficient_text(const CommPoly& r, const std::vector<std::string>& gens,
                                              bool bare) {
    if (r.term_count() == 1) {
        const auto& [m, c] = *r.terms().begin();
        const bool negative = c.sign() < 0;
        return {negative, to_string(negative ? -r : r, gens)};
    }
    const std::string text = to_string(r, gens);
    return {false, bare ? text : "(" + text + ")"};
}

// -------------------------------------------------------------- tokenizer

enum class Tok { ident, integer, plus, minus, star, caret, slash, lparen, rparen, end };

struct Token {
    Tok kind;
    std::string text;
    int column;  // 1-based
};

std::vector<Token> tokenize(std::string_view s, int line, int column_offset) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        const char ch = s[i];
        const int col = static_cast<int>(i) + 1 + column_offset;
        if (std::isspace(static_cast<unsigned char>(ch))) {
            ++i;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            std::size_t j = i;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) {
                ++j;
            }
            out.push_back({Tok::ident, std::string(s.substr(i, j - i)), col});
            i = j;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) {
                ++j;
            }
            out.push_back({Tok::integer, std::string(s.substr(i, j - i)), col});
            i = j;
            continue;
        }
        Tok kind;
        switch (ch) {
            case '+': kind = Tok::plus; break;
            case '-': kind = Tok::minus; break;
            case '*': kind = Tok::star; break;
            case '^': kind = Tok::caret; break;
            case '/': kind = Tok::slash; break;
            case '(': kind = Tok::lparen; break;
            case ')': kind = Tok::rparen; break;
            default:
                throw ParseError(line, col, std::string("unexpected character '") + ch + "'");
        }
        out.push_back({kind, std::string(1, ch), col});
        ++i;
    }
    out.push_back({Tok::end, "", static_cast<int>(s.size()) + 1 + column_offset});
    return out;
}

// --------------------------------------------------------------- AST

struct Node {
    enum class Kind { number, ident, add, sub, mul, neg, pow };
    Kind kind;
    Rational value;
    std::string name;
    unsigned exponent = 0;
    int column = 0;
    std::unique_ptr<Node> lhs;
    std::unique_ptr<Node> rhs;
};

using NodePtr = std::unique_ptr<Node>;

class ExprParser {
public:
    ExprParser(std::vector<Token> toks, int line) : toks_(std::move(toks)), line_(line) {}

    NodePtr parse_all() {
        auto e = expr();
        if (peek().kind != Tok::end) {
            fail("unexpected '" + peek().text + "'");
        }
        return e;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& take() { return toks_[pos_++]; }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, peek().column, msg); }

    static NodePtr binary(Node::Kind k, NodePtr a, NodePtr b, int col) {
        auto n = std::make_unique<Node>();
        n->kind = k;
        n->column = col;
        n->lhs = std::move(a);
        n->rhs = std::move(b);
        return n;
    }

    NodePtr expr() {
        auto lhs = term();
        while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
            const Token op = take();
            auto rhs = term();
            lhs = binary(op.kind == Tok::plus ? Node::Kind::add : Node::Kind::sub, std::move(lhs), std::move(rhs),
                         op.column);
        }
        return lhs;
    }

    NodePtr term() {
        auto lhs = unary();
        while (peek().kind == Tok::star) {
            const Token op = take();
            auto rhs = unary();
            lhs = binary(Node::Kind::mul, std::move(lhs), std::move(rhs), op.column);
        }
        return lhs;
    }

    NodePtr unary() {
        if (peek().kind == Tok::minus) {
            const Token op = take();
            auto n = std::make_unique<Node>();
            n->kind = Node::Kind::neg;
            n->column = op.column;
            n->lhs = unary();
            return n;
        }
        return power();
    }

    NodePtr power() {
        auto base = atom();
        if (peek().kind == Tok::caret) {
            const Token op = take();
            if (peek().kind != Tok::integer) {
                fail("exponent must be a non-negative integer");
            }
            const Token e = take();
            auto n = std::make_unique<Node>();
            n->kind = Node::Kind::pow;
            n->column = op.column;
            try {
                n->exponent = static_cast<unsigned>(std::stoul(e.text));
            } catch (const std::exception&) {
                throw ParseError(line_, e.column, "exponent too large");
            }
            n->lhs = std::move(base);
            return n;
        }
        return base;
    }

    NodePtr atom() {
        const Token& t = peek();
        if (t.kind == Tok::integer) {
            take();
            auto n = std::make_unique<Node>();
            n->kind = Node::Kind::number;
            n->column = t.column;
            std::string text = t.text;
            if (peek().kind == Tok::slash) {
                take();
                if (peek().kind != Tok::integer) {
                    fail("expected a denominator after '/'");
                }
                const Token& d = take();
                if (d.text.find_first_not_of('0') == std::string::npos) {
                    throw ParseError(line_, d.column, "zero denominator");
                }
                text += "/" + d.text;
            }
            n->value = Rational::parse(text);
            return n;
        }
        if (t.kind == Tok::ident) {
            take();
            auto n = std::make_unique<Node>();
            n->kind = Node::Kind::ident;
            n->column = t.column;
            n->name = t.text;
            return n;
        }
        if (t.kind == Tok::lparen) {
            take();
            auto e = expr();
            if (peek().kind != Tok::rparen) {
                fail("expected ')'");
            }
            take();
            return e;
        }
        if (t.kind == Tok::end) {
            fail("unexpected end of expression");
        }
        fail("unexpected '" + t.text + "'");
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    int line_;
};

NodePtr parse_tokens(std::vector<Token> toks, int line) { return ExprParser(std::move(toks), line).parse_all(); }

std::optional<std::size_t> index_of(const std::vector<std::string>& names, const std::string& name) {
    const auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - names.begin());
}

// ----------------------------------------------------------- evaluators

struct Context {
    const std::vector<std::string>& gens;
    const std::vector<std::string>& vars;
    const ParamTable& params;
    int line;
};

CommPoly eval_poly(const Node& n, const Context& cx) {
    const std::size_t m = cx.gens.size();
    switch (n.kind) {
        case Node::Kind::number:
            return CommPoly(m, n.value);
        case Node::Kind::ident:
            if (auto g = index_of(cx.gens, n.name)) {
                return CommPoly::generator(m, *g);
            }
            if (auto it = cx.params.find(n.name); it != cx.params.end()) {
                return CommPoly(m, it->second);
            }
            if (index_of(cx.vars, n.name)) {
                throw ParseError(cx.line, n.column, "variable '" + n.name + "' is not allowed in a coefficient");
            }
            throw ParseError(cx.line, n.column, "unknown identifier '" + n.name + "'");
        case Node::Kind::add:
            return eval_poly(*n.lhs, cx) + eval_poly(*n.rhs, cx);
        case Node::Kind::sub:
            return eval_poly(*n.lhs, cx) - eval_poly(*n.rhs, cx);
        case Node::Kind::mul:
            return eval_poly(*n.lhs, cx) * eval_poly(*n.rhs, cx);
        case Node::Kind::neg:
            return -eval_poly(*n.lhs, cx);
        case Node::Kind::pow:
            return eval_poly(*n.lhs, cx).pow(n.exponent);
    }
    throw ParseError(cx.line, n.column, "bad expression");
}

// r0 + sum_l r_l x_l, as written in relation tails.
struct LinearForm {
    CommPoly r0;
    std::vector<CommPoly> linear;

    bool has_variables() const {
        return std::any_of(linear.begin(), linear.end(), [](const CommPoly& p) { return !p.is_zero(); });
    }
};

LinearForm eval_linear(const Node& n, const Context& cx) {
    const std::size_t m = cx.gens.size();
    const std::size_t nv = cx.vars.size();
    const auto constant = [&](CommPoly r) { return LinearForm{std::move(r), std::vector<CommPoly>(nv, CommPoly(m))}; };
    switch (n.kind) {
        case Node::Kind::ident:
            if (auto v = index_of(cx.vars, n.name)) {
                LinearForm out = constant(CommPoly(m));
                out.linear[*v] = CommPoly(m, Rational(1));
                return out;
            }
            return constant(eval_poly(n, cx));
        case Node::Kind::number:
            return constant(eval_poly(n, cx));
        case Node::Kind::add:
        case Node::Kind::sub: {
            LinearForm a = eval_linear(*n.lhs, cx);
            const LinearForm b = eval_linear(*n.rhs, cx);
            const bool add = n.kind == Node::Kind::add;
            a.r0 = add ? a.r0 + b.r0 : a.r0 - b.r0;
            for (std::size_t l = 0; l < nv; ++l) {
                a.linear[l] = add ? a.linear[l] + b.linear[l] : a.linear[l] - b.linear[l];
            }
            return a;
        }
        case Node::Kind::neg: {
            LinearForm a = eval_linear(*n.lhs, cx);
            a.r0 = -a.r0;
            for (auto& r : a.linear) {
                r = -r;
            }
            return a;
        }
        case Node::Kind::mul: {
            const LinearForm a = eval_linear(*n.lhs, cx);
            if (a.has_variables()) {
                throw ParseError(cx.line, n.column, "in a relation tail a variable must be the last factor");
            }
            LinearForm b = eval_linear(*n.rhs, cx);
            b.r0 = a.r0 * b.r0;
            for (auto& r : b.linear) {
                r = a.r0 * r;
            }
            return b;
        }
        case Node::Kind::pow: {
            const LinearForm a = eval_linear(*n.lhs, cx);
            if (a.has_variables() && n.exponent != 1) {
                throw ParseError(cx.line, n.column, "relation tails must be linear in the variables");
            }
            if (a.has_variables()) {
                return a;
            }
            return constant(a.r0.pow(n.exponent));
        }
    }
    throw ParseError(cx.line, n.column, "bad expression");
}

SkewElement eval_element(const Node& n, const Context& cx, Multiplier& mult) {
    const Presentation& p = mult.presentation();
    switch (n.kind) {
        case Node::Kind::ident:
            if (auto v = index_of(cx.vars, n.name)) {
                return mult.generator(*v);
            }
            return mult.constant(eval_poly(n, cx));
        case Node::Kind::number:
            return mult.constant(p.constant(n.value));
        case Node::Kind::add:
            return eval_element(*n.lhs, cx, mult) + eval_element(*n.rhs, cx, mult);
        case Node::Kind::sub:
            return eval_element(*n.lhs, cx, mult) - eval_element(*n.rhs, cx, mult);
        case Node::Kind::mul: {
            const SkewElement a = eval_element(*n.lhs, cx, mult);
            const SkewElement b = eval_element(*n.rhs, cx, mult);
            return mult.mul(a, b);
        }
        case Node::Kind::neg:
            return -eval_element(*n.lhs, cx, mult);
        case Node::Kind::pow:
            return mult.pow(eval_element(*n.lhs, cx, mult), n.exponent);
    }
    throw ParseError(cx.line, n.column, "bad expression");
}

// ------------------------------------------------------- file parsing

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

bool valid_identifier(const std::string& s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) {
        return false;
    }
    return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

struct Twists {
    std::vector<std::optional<CommPoly>> sigma;
    std::vector<std::optional<CommPoly>> sigma_inv;
    std::vector<std::optional<CommPoly>> delta;
    bool any_sigma = false;
    bool any_inv = false;
};

struct RelLine {
    std::size_t i;
    std::size_t j;
    CommPoly c;
    RelationTail tail;
};

class FileParser {
public:
    explicit FileParser(std::string_view text) : text_(text) {}

    Presentation run() {
        std::size_t start = 0;
        int line_no = 0;
        while (start <= text_.size()) {
            const std::size_t stop = std::min(text_.find('\n', start), text_.size());
            ++line_no;
            std::string_view raw = text_.substr(start, stop - start);
            if (const auto hash = raw.find('#'); hash != std::string_view::npos) {
                raw = raw.substr(0, hash);
            }
            line(raw, line_no);
            start = stop + 1;
        }
        return finish(line_no);
    }

private:
    [[noreturn]] void fail(int line, std::string_view raw, std::string_view at, const std::string& msg) const {
        const int col = static_cast<int>(at.data() - raw.data()) + 1;
        throw ParseError(line, col, msg);
    }

    static int column_of(std::string_view raw, std::string_view part) {
        return static_cast<int>(part.data() - raw.data());
    }

    void require_header(int line, std::string_view raw, std::string_view at) const {
        if (!ring_ || !vars_) {
            fail(line, raw, at, "'coeff' and 'vars' must come before this line");
        }
    }

    Context context(int line) const { return Context{ring_->generators, *vars_, params_, line}; }

    CommPoly poly(std::string_view raw, std::string_view part, int line) const {
        auto toks = tokenize(part, line, column_of(raw, part));
        return eval_poly(*parse_tokens(std::move(toks), line), context(line));
    }

    void line(std::string_view raw, int ln) {
        const std::string_view body = trim(raw);
        if (body.empty()) {
            return;
        }
        const std::size_t sp = body.find_first_of(" \t");
        const std::string_view keyword = body.substr(0, sp);
        const std::string_view rest = sp == std::string_view::npos ? std::string_view() : trim(body.substr(sp));
        if (keyword == "algebra") {
            const std::string name(rest);
            if (!valid_identifier(name)) {
                fail(ln, raw, rest.empty() ? body : rest, "expected an algebra name");
            }
            name_ = name;
        } else if (keyword == "coeff") {
            coeff_line(raw, rest, ln);
        } else if (keyword == "vars") {
            vars_line(raw, rest, ln);
        } else if (keyword == "param") {
            param_line(raw, rest, ln);
        } else if (keyword == "grade") {
            grade_line(raw, rest, ln);
        } else if (keyword == "sigma" || keyword == "sigma_inv" || keyword == "delta") {
            twist_line(raw, keyword, rest, ln);
        } else if (keyword == "rel") {
            rel_line(raw, rest, ln);
        } else {
            fail(ln, raw, body, "unknown directive '" + std::string(keyword) + "'");
        }
    }

    std::vector<std::pair<std::string, std::string_view>> words(std::string_view s) const {
        std::vector<std::pair<std::string, std::string_view>> out;
        std::size_t i = 0;
        while (i < s.size()) {
            if (std::isspace(static_cast<unsigned char>(s[i]))) {
                ++i;
                continue;
            }
            std::size_t j = i;
            while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) {
                ++j;
            }
            out.emplace_back(std::string(s.substr(i, j - i)), s.substr(i, j - i));
            i = j;
        }
        return out;
    }

    void coeff_line(std::string_view raw, std::string_view rest, int ln) {
        if (ring_) {
            fail(ln, raw, rest, "duplicate 'coeff' line");
        }
        const auto w = words(rest);
        if (w.size() == 2 && w[0].first == "field" && w[1].first == "rational") {
            ring_ = CoeffRing::field();
            return;
        }
        if (w.size() >= 3 && w[0].first == "poly" && w[1].first == "rational") {
            std::vector<std::string> names;
            for (std::size_t k = 2; k < w.size(); ++k) {
                if (!valid_identifier(w[k].first)) {
                    fail(ln, raw, w[k].second, "bad generator name '" + w[k].first + "'");
                }
                if (std::find(names.begin(), names.end(), w[k].first) != names.end()) {
                    fail(ln, raw, w[k].second, "duplicate generator '" + w[k].first + "'");
                }
                names.push_back(w[k].first);
            }
            ring_ = CoeffRing::polynomial(std::move(names));
            return;
        }
        fail(ln, raw, rest.empty() ? raw : rest, "expected 'coeff field rational' or 'coeff poly rational <gens>'");
    }

    void vars_line(std::string_view raw, std::string_view rest, int ln) {
        if (vars_) {
            fail(ln, raw, rest, "duplicate 'vars' line");
        }
        if (!ring_) {
            fail(ln, raw, rest, "'coeff' must come before 'vars'");
        }
        std::vector<std::string> names;
        for (const auto& [w, at] : words(rest)) {
            if (!valid_identifier(w)) {
                fail(ln, raw, at, "bad variable name '" + w + "'");
            }
            if (std::find(names.begin(), names.end(), w) != names.end() || index_of(ring_->generators, w)) {
                fail(ln, raw, at, "identifier '" + w + "' declared twice");
            }
            names.push_back(w);
        }
        const std::size_t n = names.size();
        const std::size_t m = ring_->size();
        vars_ = std::move(names);
        twists_.sigma.assign(n * m, std::nullopt);
        twists_.sigma_inv.assign(n * m, std::nullopt);
        twists_.delta.assign(n * m, std::nullopt);
        inv_seen_.assign(n, false);
        sigma_seen_.assign(n, false);
    }

    // "<name> = <value>"
    std::pair<std::string, std::string_view> assignment(std::string_view raw, std::string_view rest, int ln) const {
        const auto eq = rest.find('=');
        if (eq == std::string_view::npos) {
            fail(ln, raw, rest.empty() ? raw : rest, "expected '='");
        }
        const std::string name(trim(rest.substr(0, eq)));
        if (!valid_identifier(name)) {
            fail(ln, raw, rest, "expected an identifier before '='");
        }
        return {name, trim(rest.substr(eq + 1))};
    }

    void param_line(std::string_view raw, std::string_view rest, int ln) {
        const auto [name, value] = assignment(raw, rest, ln);
        if (ring_ && index_of(ring_->generators, name)) {
            fail(ln, raw, rest, "param '" + name + "' shadows a generator");
        }
        if (vars_ && index_of(*vars_, name)) {
            fail(ln, raw, rest, "param '" + name + "' shadows a variable");
        }
        static const std::vector<std::string> none;
        auto toks = tokenize(value, ln, column_of(raw, value));
        const CommPoly v = eval_poly(*parse_tokens(std::move(toks), ln), Context{none, none, params_, ln});
        if (!v.is_constant()) {
            fail(ln, raw, value, "param value must be a rational number");
        }
        params_[name] = v.constant_term();
    }

    void grade_line(std::string_view raw, std::string_view rest, int ln) {
        if (!ring_) {
            fail(ln, raw, rest, "'coeff' must come before 'grade'");
        }
        const auto [name, value] = assignment(raw, rest, ln);
        const auto g = index_of(ring_->generators, name);
        if (!g) {
            fail(ln, raw, rest, "unknown generator '" + name + "'");
        }
        const std::string v(value);
        if (v.empty() || v.find_first_not_of("0123456789") != std::string::npos) {
            fail(ln, raw, value.empty() ? rest : value, "grade must be a non-negative integer");
        }
        ring_->degrees[*g] = static_cast<unsigned>(std::stoul(v));
    }

    void twist_line(std::string_view raw, std::string_view keyword, std::string_view rest, int ln) {
        require_header(ln, raw, rest);
        const auto colon = rest.find(':');
        const auto arrow = rest.find("->");
        if (colon == std::string_view::npos || arrow == std::string_view::npos || arrow < colon) {
            fail(ln, raw, rest.empty() ? raw : rest, "expected '<var>: <gen> -> <expr>'");
        }
        const std::string var(trim(rest.substr(0, colon)));
        const std::string gen(trim(rest.substr(colon + 1, arrow - colon - 1)));
        const auto v = index_of(*vars_, var);
        if (!v) {
            fail(ln, raw, rest, "unknown variable '" + var + "'");
        }
        const auto g = index_of(ring_->generators, gen);
        if (!g) {
            fail(ln, raw, rest.substr(colon + 1), "unknown generator '" + gen + "'");
        }
        const std::string_view value = trim(rest.substr(arrow + 2));
        CommPoly image = poly(raw, value, ln);
        const std::size_t slot = *v * ring_->size() + *g;
        auto& table = keyword == "sigma" ? twists_.sigma : keyword == "sigma_inv" ? twists_.sigma_inv : twists_.delta;
        if (table[slot]) {
            fail(ln, raw, rest, "duplicate " + std::string(keyword) + " line for " + var + " and " + gen);
        }
        table[slot] = std::move(image);
        if (keyword == "sigma_inv") {
            inv_seen_[*v] = true;
        } else if (keyword == "sigma") {
            sigma_seen_[*v] = true;
        }
    }

    void rel_line(std::string_view raw, std::string_view rest, int ln) {
        require_header(ln, raw, rest);
        const auto eq = rest.find('=');
        if (eq == std::string_view::npos) {
            fail(ln, raw, rest.empty() ? raw : rest, "expected '='");
        }
        const auto lhs = words(rest.substr(0, eq));
        if (lhs.size() != 2) {
            fail(ln, raw, rest, "expected 'rel <vj> <vi> = ...'");
        }
        const auto vj = index_of(*vars_, lhs[0].first);
        const auto vi = index_of(*vars_, lhs[1].first);
        if (!vj) {
            fail(ln, raw, lhs[0].second, "unknown variable '" + lhs[0].first + "'");
        }
        if (!vi) {
            fail(ln, raw, lhs[1].second, "unknown variable '" + lhs[1].first + "'");
        }
        if (!(*vj > *vi)) {
            fail(ln, raw, lhs[0].second, "relation must be written as <later var> <earlier var>");
        }
        const std::string_view rhs = rest.substr(eq + 1);
        auto toks = tokenize(rhs, ln, column_of(raw, rhs));

        // locate the juxtaposed pair "vi vj"
        std::size_t at = toks.size();
        int depth = 0;
        for (std::size_t k = 0; k + 1 < toks.size(); ++k) {
            if (toks[k].kind == Tok::lparen) {
                ++depth;
            } else if (toks[k].kind == Tok::rparen) {
                --depth;
            }
            if (depth == 0 && toks[k].kind == Tok::ident && toks[k + 1].kind == Tok::ident &&
                toks[k].text == lhs[1].first && toks[k + 1].text == lhs[0].first) {
                at = k;
                break;
            }
        }
        if (at == toks.size()) {
            fail(ln, raw, rhs, "expected '" + lhs[1].first + " " + lhs[0].first + "' on the right-hand side");
        }
        const std::size_t m = ring_->size();
        CommPoly c(m, Rational(1));
        if (at > 0) {
            if (toks[at - 1].kind != Tok::star || at < 2) {
                throw ParseError(ln, toks[at].column, "expected '<coeff> * " + lhs[1].first + " " + lhs[0].first + "'");
            }
            std::vector<Token> ct(toks.begin(), toks.begin() + static_cast<long>(at - 1));
            ct.push_back({Tok::end, "", toks[at - 1].column});
            c = eval_poly(*parse_tokens(std::move(ct), ln), context(ln));
        }
        RelationTail tail = RelationTail::zero(vars_->size(), m);
        const std::size_t after = at + 2;
        if (toks[after].kind != Tok::end) {
            if (toks[after].kind != Tok::plus && toks[after].kind != Tok::minus) {
                throw ParseError(ln, toks[after].column, "expected '+' or '-' before the tail");
            }
            const bool negate = toks[after].kind == Tok::minus;
            std::vector<Token> tt(toks.begin() + static_cast<long>(after + 1), toks.end());
            const auto node = parse_tokens(std::move(tt), ln);
            LinearForm lf = eval_linear(*node, context(ln));
            tail.r0 = negate ? -lf.r0 : lf.r0;
            for (std::size_t l = 0; l < vars_->size(); ++l) {
                tail.linear[l] = negate ? -lf.linear[l] : lf.linear[l];
            }
        }
        if (c.is_zero()) {
            fail(ln, raw, rhs, "relation constant must be nonzero");
        }
        for (const auto& r : rels_) {
            if (r.i == *vi && r.j == *vj) {
                fail(ln, raw, rest, "duplicate relation for " + lhs[0].first + " " + lhs[1].first);
            }
        }
        rels_.push_back({*vi, *vj, std::move(c), std::move(tail)});
    }

    Presentation finish(int last_line) {
        if (!ring_) {
            throw ParseError(last_line, 1, "missing 'coeff' line");
        }
        if (!vars_) {
            throw ParseError(last_line, 1, "missing 'vars' line");
        }
        Presentation p(name_, *ring_, *vars_);
        const std::size_t m = ring_->size();
        for (std::size_t v = 0; v < vars_->size(); ++v) {
            TwistData tw = TwistData::trivial(m);
            for (std::size_t g = 0; g < m; ++g) {
                const std::size_t slot = v * m + g;
                if (twists_.sigma[slot]) {
                    tw.sigma.images[g] = *twists_.sigma[slot];
                }
                if (twists_.delta[slot]) {
                    tw.delta.values[g] = *twists_.delta[slot];
                }
            }
            if (inv_seen_[v]) {
                std::vector<CommPoly> inv;
                for (std::size_t g = 0; g < m; ++g) {
                    const std::size_t slot = v * m + g;
                    inv.push_back(twists_.sigma_inv[slot] ? *twists_.sigma_inv[slot] : CommPoly::generator(m, g));
                }
                tw.sigma.inverse_images = std::move(inv);
            } else if (sigma_seen_[v] && !tw.sigma.is_identity()) {
                tw.sigma.inverse_images.reset();
            }
            p.set_twist(v, std::move(tw));
        }
        for (auto& r : rels_) {
            p.set_relation(r.i, r.j, std::move(r.c), std::move(r.tail));
        }
        return p;
    }

    std::string_view text_;
    std::string name_;
    std::optional<CoeffRing> ring_;
    std::optional<std::vector<std::string>> vars_;
    ParamTable params_;
    Twists twists_;
    std::vector<bool> inv_seen_;
    std::vector<bool> sigma_seen_;
    std::vector<RelLine> rels_;
};

std::string tail_text(const RelationTail& t, const Presentation& p) {
    SkewElement f(p.nvars(), p.ring_nvars());
    f.add_term(MultiIndex(p.nvars()), t.r0);
    for (std::size_t l = 0; l < p.nvars(); ++l) {
        f.add_term(MultiIndex::unit(p.nvars(), l), t.linear[l]);
    }
    return to_string(f, p);
}

}  // namespace

std::string to_string(const SkewElement& f, const Presentation& p) {
    if (f.is_zero()) {
        return "0";
    }
    std::vector<const SkewElement::TermMap::value_type*> terms;
    for (const auto& t : f.terms()) {
        terms.push_back(&t);
    }
    std::sort(terms.begin(), terms.end(), [](auto* a, auto* b) { return deglex_greater(a->first, b->first); });
    const auto& gens = p.ring().generators;
    std::ostringstream os;
    bool first = true;
    for (const auto* t : terms) {
        const auto& [alpha, r] = *t;
        const std::string mono = variable_text(alpha, p.var_names());
        const bool alone = terms.size() == 1;
        auto [negative, coeff] = coefficient_text(r, gens, mono.empty() && alone);
        if (first) {
            os << (negative ? "-" : "");
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        if (mono.empty()) {
            os << coeff;
        } else if (coeff == "1") {
            os << mono;
        } else {
            os << coeff << '*' << mono;
        }
    }
    return os.str();
}

CommPoly parse_poly(std::string_view text, const Presentation& p, const ParamTable& params, int line) {
    const Context cx{p.ring().generators, p.var_names(), params, line};
    return eval_poly(*parse_tokens(tokenize(text, line, 0), line), cx);
}

SkewElement parse_element(std::string_view text, const Presentation& p, const ParamTable& params, int line) {
    const Context cx{p.ring().generators, p.var_names(), params, line};
    Multiplier mult(p);
    return eval_element(*parse_tokens(tokenize(text, line, 0), line), cx, mult);
}

Presentation parse_presentation(std::string_view text) { return FileParser(text).run(); }

std::string print_presentation(const Presentation& p) {
    std::ostringstream os;
    const auto& ring = p.ring();
    const auto& gens = ring.generators;
    const auto& vars = p.var_names();
    const std::size_t m = ring.size();
    if (!p.name().empty()) {
        os << "algebra " << p.name() << '\n';
    }
    if (ring.is_field()) {
        os << "coeff field rational\n";
    } else {
        os << "coeff poly rational";
        for (const auto& g : gens) {
            os << ' ' << g;
        }
        os << '\n';
        for (std::size_t g = 0; g < m; ++g) {
            if (ring.degrees[g] != 1) {
                os << "grade " << gens[g] << " = " << ring.degrees[g] << '\n';
            }
        }
    }
    os << "vars";
    for (const auto& v : vars) {
        os << ' ' << v;
    }
    os << '\n';
    for (std::size_t v = 0; v < p.nvars(); ++v) {
        const TwistData& tw = p.twist(v);
        for (std::size_t g = 0; g < m; ++g) {
            if (tw.sigma.images[g] != CommPoly::generator(m, g)) {
                os << "sigma " << vars[v] << ": " << gens[g] << " -> " << to_string(tw.sigma.images[g], gens) << '\n';
            }
        }
        const bool print_inv =
            tw.sigma.inverse_images && (!tw.sigma.is_identity() || *tw.sigma.inverse_images != tw.sigma.images);
        if (print_inv) {
            for (std::size_t g = 0; g < m; ++g) {
                os << "sigma_inv " << vars[v] << ": " << gens[g] << " -> "
                   << to_string((*tw.sigma.inverse_images)[g], gens) << '\n';
            }
        }
        for (std::size_t g = 0; g < m; ++g) {
            if (!tw.delta.values[g].is_zero()) {
                os << "delta " << vars[v] << ": " << gens[g] << " -> " << to_string(tw.delta.values[g], gens) << '\n';
            }
        }
    }
    for (std::size_t j = 0; j < p.nvars(); ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            const CommPoly& c = p.c(i, j);
            const RelationTail& t = p.tail(i, j);
            if (c == p.constant(Rational(1)) && t.is_zero()) {
                continue;
            }
            std::string ctext = to_string(c, gens);
            if (c.term_count() > 1) {
                ctext = "(" + ctext + ")";
            }
            os << "rel " << vars[j] << ' ' << vars[i] << " = " << ctext << " * " << vars[i] << ' ' << vars[j];
            if (!t.is_zero()) {
                const std::string tt = tail_text(t, p);
                os << " + " << (tt.front() == '-' ? "(" + tt + ")" : tt);
            }
            os << '\n';
        }
    }
    return os.str();
}

void Report::section(std::string name) { sections_.emplace_back(std::move(name), std::vector<std::pair<std::string, std::string>>{}); }

void Report::add(std::string key, std::string value) {
    if (sections_.empty()) {
        section("report");
    }
    sections_.back().second.emplace_back(std::move(key), std::move(value));
}

std::string Report::render() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [name, entries] : sections_) {
        if (!first) {
            os << '\n';
        }
        first = false;
        os << '[' << name << "]\n";
        for (const auto& [k, v] : entries) {
            os << k << ": " << v << '\n';
        }
    }
    return os.str();
}

}  // namespace spbw
