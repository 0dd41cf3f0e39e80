#pragma once

#include <json.hpp>

#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "oreqs/diagonalize.hpp"
#include "oreqs/fields.hpp"
#include "oreqs/matrix.hpp"

namespace oreqs {

/// Embeds a rational constant into any supported field.
template <Field K>
K field_from_rational(const Rational& r) {
    if constexpr (std::is_same_v<K, Rational>) {
        return r;
    } else if constexpr (std::is_same_v<K, GaussianRational>) {
        return GaussianRational(r, Rational::zero());
    } else if constexpr (is_rational_function_v<K>) {
        return K::constant(field_from_rational<rf_base_t<K>>(r));
    }
}

namespace textio_detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

/// True if `s` has a '+' or a binary '-' outside parentheses, i.e. it is
/// not safe as the left factor of "*x^k" without parentheses.
inline bool needs_parens(std::string_view s) {
    int depth = 0;
    for (size_t k = 0; k < s.size(); ++k) {
        char c = s[k];
        if (c == '(') ++depth;
        else if (c == ')') --depth;
        else if (depth == 0 && (c == '+' || (c == '-' && k > 0)))
            return true;
    }
    return false;
}

inline std::string field_text(const Rational& v, std::span<const char* const>) {
    return v.str();
}

inline std::string field_text(const GaussianRational& v, std::span<const char* const>) {
    if (v.im().is_zero()) return v.re().str();
    std::string im;
    if (v.im().is_one()) im = "i";
    else if ((-v.im()).is_one()) im = "-i";
    else im = v.im().str() + "*i";
    if (v.re().is_zero()) return im;
    if (im[0] == '-') return v.re().str() + "-" + im.substr(1);
    return v.re().str() + "+" + im;
}

template <class B>
std::string poly_text(const Polynomial<B>& p, std::span<const char* const> vars);

template <class B>
std::string field_text(const RationalFunction<B>& v, std::span<const char* const> vars) {
    if (v.is_zero()) return "0";
    if (v.is_polynomial()) {
        if (v.num().is_constant()) return field_text(v.num().coeff(0), vars.subspan(1));
        return poly_text(v.num(), vars);
    }
    return "(" + poly_text(v.num(), vars) + ")/(" + poly_text(v.den(), vars) + ")";
}

/// Joins term strings with " + " / " - ", folding a clean leading minus.
inline void join_term(std::string& out, const std::string& term) {
    if (out.empty()) {
        out = term;
    } else if (term[0] == '-') {
        out += " - ";
        out += term.substr(1);
    } else {
        out += " + ";
        out += term;
    }
}

template <class C>
std::string monomial_term(const C& coeff, int k, const std::string& var,
                          std::span<const char* const> coeff_vars) {
    if (k == 0) return field_text(coeff, coeff_vars);
    std::string xs = (k == 1) ? var : var + "^" + std::to_string(k);
    if (coeff.is_one()) return xs;
    if ((-coeff).is_one()) return "-" + xs;
    std::string ct = field_text(coeff, coeff_vars);
    if (needs_parens(ct)) ct = "(" + ct + ")";
    return ct + "*" + xs;
}

template <class B>
std::string poly_text(const Polynomial<B>& p, std::span<const char* const> vars) {
    if (p.is_zero()) return "0";
    std::string var(vars.empty() ? "t" : vars[0]);
    std::string out;
    for (int k = 0; k <= p.deg(); ++k) {
        B c = p.coeff(k);
        if (c.is_zero()) continue;
        join_term(out, monomial_term(c, k, var, vars.subspan(1)));
    }
    return out;
}

template <Field K>
std::span<const char* const> field_vars() {
    const auto& vars = FieldTraits<K>::vars;
    return std::span<const char* const>(vars.data(), vars.size());
}

}  // namespace textio_detail

/// Canonical text form of a field element.
template <Field K>
std::string render_field(const K& v) {
    return textio_detail::field_text(v, textio_detail::field_vars<K>());
}

/// Ascending-power text form of an Ore polynomial, e.g. "1 - i*x + (1+i)*x^3".
template <Field K>
std::string render_ore_poly(const OrePoly<K>& p) {
    using namespace textio_detail;
    if (p.is_zero()) return "0";
    std::string out;
    for (int k = 0; k <= p.deg(); ++k) {
        K c = p.coeff(k);
        if (c.is_zero()) continue;
        join_term(out, monomial_term(c, k, "x", field_vars<K>()));
    }
    return out;
}

template <Field K>
std::string render_row(const std::vector<OrePoly<K>>& row) {
    std::string out;
    for (size_t j = 0; j < row.size(); ++j) {
        if (j) out += " ; ";
        out += render_ore_poly(row[j]);
    }
    return out;
}

template <Field K>
std::string render_matrix(const OreMatrix<K>& m) {
    std::string out = "matrix " + std::to_string(m.rows()) + " x " + std::to_string(m.cols());
    for (int i = 0; i < m.rows(); ++i) {
        out += "\n";
        for (int j = 0; j < m.cols(); ++j) {
            if (j) out += " ; ";
            out += render_ore_poly(m.at(i, j));
        }
    }
    return out;
}

template <Field K>
std::string render_ring(const OreRing<K>& r) {
    std::string sigma;
    switch (r.sigma_kind()) {
        case SigmaKind::identity: sigma = "id"; break;
        case SigmaKind::conjugation: sigma = "conj"; break;
        case SigmaKind::shift: sigma = "shift(" + render_field(r.sigma_param()) + ")"; break;
        case SigmaKind::scale: sigma = "scale(" + render_field(r.sigma_param()) + ")"; break;
    }
    std::string delta;
    switch (r.delta_kind()) {
        case DeltaKind::zero: delta = "zero"; break;
        case DeltaKind::derivative: delta = "ddt"; break;
        case DeltaKind::q_difference: delta = "qdiff"; break;
    }
    return std::string("ring { field = ") + FieldTraits<K>::name + "; sigma = " + sigma +
           "; delta = " + delta + " }";
}

// ---------------------------------------------------------------------------
// Lexing and expression parsing
// ---------------------------------------------------------------------------

namespace textio_detail {

struct Token {
    enum class Kind { integer, ident, punct, end };
    Kind kind = Kind::end;
    std::string text;
    char ch = 0;
    int line = 1;
    int col = 1;
};

class Lexer {
public:
    Lexer(std::string_view text, int line0, int col0)
        : text_(text), line_(line0), col_(col0) {}

    Token next() {
        skip_space();
        Token t;
        t.line = line_;
        t.col = col_;
        if (pos_ >= text_.size()) return t;
        char c = text_[pos_];
        if (c >= '0' && c <= '9') {
            t.kind = Token::Kind::integer;
            while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
                t.text += text_[pos_];
                advance();
            }
            return t;
        }
        if (is_ident_char(c)) {
            t.kind = Token::Kind::ident;
            while (pos_ < text_.size() && (is_ident_char(text_[pos_]) ||
                                           (text_[pos_] >= '0' && text_[pos_] <= '9'))) {
                t.text += text_[pos_];
                advance();
            }
            return t;
        }
        t.kind = Token::Kind::punct;
        t.ch = c;
        advance();
        return t;
    }

    int line() const { return line_; }
    int col() const { return col_; }

private:
    static bool is_ident_char(char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
    }

    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip_space() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == ' ' || c == '\t' || c == '\r' || c == '\n') advance();
            else break;
        }
    }

    std::string_view text_;
    size_t pos_ = 0;
    int line_;
    int col_;
};

/// Recursive-descent parser for Ore-polynomial and field expressions.
/// Grammar (unary minus binds tighter than '+'; '^' takes a nonnegative
/// integer literal):
///   expr    := term (('+'|'-') term)*
///   term    := factor (('*'|'/') factor)*
///   factor  := '-' factor | primary ('^' integer)?
///   primary := integer | ident | '(' expr ')'
/// Coefficients must stay left of x-powers: "x*t" is rejected.
template <Field K>
class ExpressionParser {
public:
    ExpressionParser(std::string_view text, int line0, int col0)
        : lex_(text, line0, col0) {
        cur_ = lex_.next();
    }

    OrePoly<K> parse_poly() {
        OrePoly<K> v = expression();
        expect_end();
        return v;
    }

    K parse_scalar() {
        Token at = cur_;
        OrePoly<K> v = expression();
        expect_end();
        if (v.deg() > 0)
            throw ParseError("expected a coefficient expression without x", at.line, at.col);
        return v.constant_value();
    }

private:
    [[noreturn]] void fail(const std::string& msg, const Token& t) const {
        throw ParseError(msg, t.line, t.col);
    }

    void bump() { cur_ = lex_.next(); }

    bool is_punct(char c) const { return cur_.kind == Token::Kind::punct && cur_.ch == c; }

    void expect_end() {
        if (cur_.kind != Token::Kind::end) {
            if (cur_.kind == Token::Kind::punct)
                fail(std::string("unexpected '") + cur_.ch + "'", cur_);
            fail("unexpected '" + cur_.text + "'", cur_);
        }
    }

    OrePoly<K> expression() {
        OrePoly<K> v = term();
        while (is_punct('+') || is_punct('-')) {
            bool plus = cur_.ch == '+';
            bump();
            OrePoly<K> rhs = term();
            v = plus ? v + rhs : v - rhs;
        }
        return v;
    }

    OrePoly<K> term() {
        OrePoly<K> v = factor();
        while (is_punct('*') || is_punct('/')) {
            bool mul = cur_.ch == '*';
            Token op = cur_;
            bump();
            OrePoly<K> rhs = factor();
            v = mul ? mul_values(v, rhs, op) : div_values(v, rhs, op);
        }
        return v;
    }

    OrePoly<K> factor() {
        if (is_punct('-')) {
            bump();
            return -factor();
        }
        OrePoly<K> v = primary();
        if (is_punct('^')) {
            Token op = cur_;
            bump();
            if (cur_.kind != Token::Kind::integer)
                fail("'^' requires a nonnegative integer exponent", cur_);
            if (cur_.text.size() > 4) fail("exponent too large", cur_);
            long e = std::stol(cur_.text);
            bump();
            v = pow_value(v, e, op);
        }
        return v;
    }

    OrePoly<K> primary() {
        if (cur_.kind == Token::Kind::integer) {
            Rational r = Rational::from_decimal_string(cur_.text);
            bump();
            return OrePoly<K>::constant(field_from_rational<K>(r));
        }
        if (cur_.kind == Token::Kind::ident) {
            if (cur_.text == "x") {
                bump();
                return OrePoly<K>::x();
            }
            if (auto g = generator_value<K>(cur_.text)) {
                bump();
                return OrePoly<K>::constant(*g);
            }
            fail("unknown symbol '" + cur_.text + "' in field " + FieldTraits<K>::name, cur_);
        }
        if (is_punct('(')) {
            bump();
            OrePoly<K> v = expression();
            if (!is_punct(')')) fail("expected ')'", cur_);
            bump();
            return v;
        }
        fail("expected a number, symbol, or '('", cur_);
    }

    OrePoly<K> mul_values(const OrePoly<K>& a, const OrePoly<K>& b, const Token& at) {
        if (a.is_zero() || b.is_zero()) return {};
        if (a.deg() <= 0) return b.scaled_left(a.constant_value());
        if (b.is_power_of_x()) return a.times_x_pow(b.deg());
        fail("x must appear to the right of its coefficient (left-coefficient form)", at);
    }

    OrePoly<K> div_values(const OrePoly<K>& a, const OrePoly<K>& b, const Token& at) {
        if (b.deg() > 0) fail("cannot divide by an expression containing x", at);
        if (b.is_zero()) fail("division by zero in a coefficient", at);
        if (a.deg() > 0) fail("cannot divide an expression containing x", at);
        return OrePoly<K>::constant(a.constant_value() * b.constant_value().inv());
    }

    OrePoly<K> pow_value(const OrePoly<K>& v, long e, const Token& at) {
        if (e == 0) return OrePoly<K>::one();
        if (v.deg() <= 0) return OrePoly<K>::constant(pow_int(v.constant_value(), e));
        if (v.is_power_of_x())
            return OrePoly<K>::monomial(K::one(), static_cast<int>(v.deg() * e));
        OrePoly<K> acc = v;
        for (long k = 1; k < e; ++k) acc = mul_values(acc, v, at);
        return acc;
    }

    Lexer lex_;
    Token cur_;
};

}  // namespace textio_detail

/// Parses one Ore-polynomial expression (whole input).
template <Field K>
OrePoly<K> parse_ore_poly(std::string_view text, int line0 = 1, int col0 = 1) {
    return textio_detail::ExpressionParser<K>(text, line0, col0).parse_poly();
}

/// Parses one field-coefficient expression (no x allowed).
template <Field K>
K parse_field(std::string_view text, int line0 = 1, int col0 = 1) {
    return textio_detail::ExpressionParser<K>(text, line0, col0).parse_scalar();
}

// ---------------------------------------------------------------------------
// Ring / matrix / problem parsing
// ---------------------------------------------------------------------------

/// Reads the field name out of a ring block without committing to a type.
inline FieldKind scan_ring_field_kind(std::string_view ring_text, int line0 = 1, int col0 = 1) {
    using namespace textio_detail;
    Lexer lex(ring_text, line0, col0);
    Token prev;
    for (Token t = lex.next(); t.kind != Token::Kind::end; t = lex.next()) {
        if (t.kind == Token::Kind::ident && prev.kind == Token::Kind::ident &&
            prev.text == "field") {
            // saw "field <name>" without '='; fall through to error below
        }
        if (prev.kind == Token::Kind::ident && prev.text == "field" &&
            t.kind == Token::Kind::punct && t.ch == '=') {
            Token name = lex.next();
            if (name.kind != Token::Kind::ident)
                throw ParseError("expected a field name after 'field ='", name.line, name.col);
            auto kind = field_kind_from_name(name.text);
            if (!kind)
                throw ParseError("unknown field '" + name.text + "' (expected Q, Qi, Qt, or Qqt)",
                                 name.line, name.col);
            return *kind;
        }
        prev = t;
    }
    throw ParseError("ring block does not declare a field", line0, col0);
}

/// Parses "ring { field = ...; sigma = ...; delta = ... }" for a known K.
template <Field K>
OreRing<K> parse_ring(std::string_view text, int line0 = 1, int col0 = 1) {
    using namespace textio_detail;
    Lexer lex(text, line0, col0);
    Token t = lex.next();
    auto expect_ident = [&](const char* what) {
        if (t.kind != Token::Kind::ident)
            throw ParseError(std::string("expected ") + what, t.line, t.col);
        std::string name = t.text;
        t = lex.next();
        return name;
    };
    auto expect_punct = [&](char c) {
        if (t.kind != Token::Kind::punct || t.ch != c)
            throw ParseError(std::string("expected '") + c + "'", t.line, t.col);
        t = lex.next();
    };

    if (expect_ident("'ring'") != "ring")
        throw ParseError("expected 'ring'", line0, col0);
    expect_punct('{');

    std::optional<std::string> field_name;
    std::optional<SigmaKind> sigma;
    std::optional<DeltaKind> delta;
    K param = K::zero();

    while (!(t.kind == Token::Kind::punct && t.ch == '}')) {
        Token key_tok = t;
        std::string key = expect_ident("a key (field, sigma, delta)");
        expect_punct('=');
        if (key == "field") {
            field_name = expect_ident("a field name");
        } else if (key == "sigma") {
            Token val = t;
            std::string name = expect_ident("a sigma spec");
            if (name == "id") {
                sigma = SigmaKind::identity;
            } else if (name == "conj") {
                sigma = SigmaKind::conjugation;
            } else if (name == "shift" || name == "scale") {
                sigma = (name == "shift") ? SigmaKind::shift : SigmaKind::scale;
                if (!(t.kind == Token::Kind::punct && t.ch == '('))
                    throw ParseError("expected '(' after '" + name + "'", t.line, t.col);
                // capture tokens up to the matching ')' and re-parse as a scalar
                std::string payload;
                int depth = 1;
                int pline = t.line, pcol = t.col + 1;
                for (;;) {
                    t = lex.next();
                    if (t.kind == Token::Kind::end)
                        throw ParseError("unterminated '(' in sigma spec", val.line, val.col);
                    if (t.kind == Token::Kind::punct && t.ch == '(') ++depth;
                    if (t.kind == Token::Kind::punct && t.ch == ')' && --depth == 0) break;
                    if (t.kind == Token::Kind::punct) payload += t.ch;
                    else payload += t.text;
                    payload += ' ';
                }
                t = lex.next();
                try {
                    param = parse_field<K>(payload, pline, pcol);
                } catch (const ParseError&) {
                    throw ParseError("invalid " + name + " parameter", pline, pcol);
                }
            } else {
                throw ParseError("unknown sigma '" + name + "' (expected id, conj, shift, scale)",
                                 val.line, val.col);
            }
        } else if (key == "delta") {
            Token val = t;
            std::string name = expect_ident("a delta spec");
            if (name == "zero") delta = DeltaKind::zero;
            else if (name == "ddt") delta = DeltaKind::derivative;
            else if (name == "qdiff") delta = DeltaKind::q_difference;
            else
                throw ParseError("unknown delta '" + name + "' (expected zero, ddt, qdiff)",
                                 val.line, val.col);
        } else {
            throw ParseError("unknown ring key '" + key + "'", key_tok.line, key_tok.col);
        }
        if (t.kind == Token::Kind::punct && t.ch == ';') t = lex.next();
    }

    if (!field_name) throw ParseError("ring block does not declare a field", line0, col0);
    if (*field_name != FieldTraits<K>::name)
        throw ParseError("ring field '" + *field_name + "' does not match " +
                             FieldTraits<K>::name,
                         line0, col0);
    if (!sigma) sigma = SigmaKind::identity;
    if (!delta) delta = DeltaKind::zero;
    try {
        return OreRing<K>::make(*sigma, *delta, param);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), line0, col0);
    }
}

/// Parses the "matrix R x C" block format (header then one row per line,
/// entries separated by ';').
template <Field K>
OreMatrix<K> parse_matrix(const OreRing<K>& ring, std::string_view text, int line0 = 1) {
    using namespace textio_detail;
    // split into lines, dropping comments
    std::vector<std::pair<int, std::string>> lines;
    {
        int ln = line0;
        size_t start = 0;
        while (start <= text.size()) {
            size_t nl = text.find('\n', start);
            std::string_view line = (nl == std::string_view::npos)
                                        ? text.substr(start)
                                        : text.substr(start, nl - start);
            if (auto hash = line.find('#'); hash != std::string_view::npos)
                line = line.substr(0, hash);
            if (!trim(line).empty()) lines.emplace_back(ln, std::string(line));
            if (nl == std::string_view::npos) break;
            start = nl + 1;
            ++ln;
        }
    }
    if (lines.empty()) throw ParseError("expected 'matrix R x C'", line0, 1);

    Lexer hlex(lines[0].second, lines[0].first, 1);
    Token t = hlex.next();
    if (t.kind != Token::Kind::ident || t.text != "matrix")
        throw ParseError("expected 'matrix R x C'", t.line, t.col);
    t = hlex.next();
    if (t.kind != Token::Kind::integer)
        throw ParseError("expected row count", t.line, t.col);
    int rows = std::stoi(t.text);
    t = hlex.next();
    if (t.kind != Token::Kind::ident || t.text != "x")
        throw ParseError("expected 'x' between dimensions", t.line, t.col);
    t = hlex.next();
    if (t.kind != Token::Kind::integer)
        throw ParseError("expected column count", t.line, t.col);
    int cols = std::stoi(t.text);
    if (rows <= 0 || cols <= 0)
        throw ParseError("matrix dimensions must be positive", lines[0].first, 1);
    if (static_cast<int>(lines.size()) - 1 < rows)
        throw ParseError("matrix has fewer rows than declared", lines[0].first, 1);
    if (static_cast<int>(lines.size()) - 1 > rows)
        throw ParseError("matrix has more rows than declared",
                         lines[static_cast<size_t>(rows) + 1].first, 1);

    OreMatrix<K> m(ring, rows, cols);
    for (int i = 0; i < rows; ++i) {
        const auto& [ln, row_text] = lines[static_cast<size_t>(i) + 1];
        // split on ';', tracking column offsets
        int parsed = 0;
        size_t start = 0;
        while (true) {
            size_t semi = row_text.find(';', start);
            std::string_view cell{row_text.data() + start,
                                  (semi == std::string::npos ? row_text.size() : semi) - start};
            if (parsed >= cols)
                throw ParseError("row has more than " + std::to_string(cols) + " entries", ln,
                                 static_cast<int>(start) + 1);
            m.at(i, parsed) = parse_ore_poly<K>(cell, ln, static_cast<int>(start) + 1);
            ++parsed;
            if (semi == std::string::npos) break;
            start = semi + 1;
        }
        if (parsed != cols)
            throw ParseError("row has " + std::to_string(parsed) + " entries, expected " +
                                 std::to_string(cols),
                             ln, 1);
    }
    return m;
}

/// A parsed .oreq problem: ring, matrix, and optional metadata.
template <Field K>
struct Problem {
    OreRing<K> ring;
    OreMatrix<K> f;
    std::string name;
    std::optional<int> expected_rank;
};

using ProblemVariant =
    std::variant<Problem<Rational>, Problem<GaussianRational>, Problem<RatFunc>,
                 Problem<RatFuncTower>>;

template <Field K>
std::string render_problem(const Problem<K>& p) {
    std::string out;
    if (!p.name.empty()) out += "name " + p.name + "\n";
    if (p.expected_rank) out += "expected_rank " + std::to_string(*p.expected_rank) + "\n";
    out += render_ring(p.ring) + "\n";
    out += render_matrix(p.f) + "\n";
    return out;
}

/// Parses a .oreq problem file: '#' comments, optional "name"/"expected_rank"
/// lines, a ring block, then a matrix block.
inline ProblemVariant parse_problem(std::string_view text) {
    using namespace textio_detail;
    struct Line {
        int no;
        std::string text;
    };
    std::vector<Line> lines;
    {
        int ln = 1;
        size_t start = 0;
        while (start <= text.size()) {
            size_t nl = text.find('\n', start);
            std::string_view line = (nl == std::string_view::npos)
                                        ? text.substr(start)
                                        : text.substr(start, nl - start);
            if (auto hash = line.find('#'); hash != std::string_view::npos)
                line = line.substr(0, hash);
            lines.push_back({ln, std::string(line)});
            if (nl == std::string_view::npos) break;
            start = nl + 1;
            ++ln;
        }
    }

    std::string name;
    std::optional<int> expected_rank;
    std::string ring_text;
    int ring_line = 0;
    std::string matrix_text;
    int matrix_line = 0;

    auto first_word = [](std::string_view line) {
        line = trim(line);
        size_t end = 0;
        while (end < line.size() && line[end] != ' ' && line[end] != '\t' && line[end] != '{')
            ++end;
        return std::string(line.substr(0, end));
    };

    for (size_t li = 0; li < lines.size(); ++li) {
        std::string_view line = trim(lines[li].text);
        if (line.empty()) continue;
        std::string word = first_word(line);
        if (word == "name") {
            name = std::string(trim(line.substr(4)));
        } else if (word == "expected_rank") {
            std::string rest = std::string(trim(line.substr(13)));
            try {
                expected_rank = std::stoi(rest);
            } catch (...) {
                throw ParseError("expected_rank needs an integer", lines[li].no, 1);
            }
        } else if (word == "ring") {
            if (!ring_text.empty())
                throw ParseError("duplicate ring block", lines[li].no, 1);
            ring_line = lines[li].no;
            int depth = 0;
            bool closed = false;
            for (; li < lines.size(); ++li) {
                for (char c : lines[li].text) {
                    if (c == '{') ++depth;
                    if (c == '}') --depth;
                }
                ring_text += lines[li].text;
                ring_text += "\n";
                if (ring_text.find('{') != std::string::npos && depth == 0) {
                    closed = true;
                    break;
                }
            }
            if (!closed) throw ParseError("unterminated ring block", ring_line, 1);
        } else if (word == "matrix") {
            if (!matrix_text.empty())
                throw ParseError("duplicate matrix block", lines[li].no, 1);
            if (ring_text.empty())
                throw ParseError("the ring block must come before the matrix", lines[li].no, 1);
            matrix_line = lines[li].no;
            // the header line plus every remaining nonblank line
            for (; li < lines.size(); ++li) {
                matrix_text += lines[li].text;
                matrix_text += "\n";
            }
        } else {
            throw ParseError("unexpected directive '" + word + "'", lines[li].no, 1);
        }
    }

    if (ring_text.empty()) throw ParseError("missing ring block", 1, 1);
    if (matrix_text.empty()) throw ParseError("missing matrix block", 1, 1);

    FieldKind kind = scan_ring_field_kind(ring_text, ring_line);
    return with_field_kind(kind, [&](auto tag) -> ProblemVariant {
        using K = typename decltype(tag)::type;
        OreRing<K> ring = parse_ring<K>(ring_text, ring_line);
        OreMatrix<K> f = parse_matrix<K>(ring, matrix_text, matrix_line);
        return Problem<K>{std::move(ring), std::move(f), std::move(name), expected_rank};
    });
}

// ---------------------------------------------------------------------------
// Result documents
// ---------------------------------------------------------------------------

/// Human-readable result; every matrix block re-parses exactly.
template <Field K>
std::string render_result(const OreRing<K>& ring, const DiagResult<K>& res, int verbosity = 0) {
    std::string out;
    out += render_ring(ring) + "\n";
    out += "rank " + std::to_string(res.rank) + "\n";
    out += "U:\n" + render_matrix(res.u) + "\n";
    out += "Uinv:\n" + render_matrix(res.uinv) + "\n";
    out += "D:\n" + render_matrix(res.d) + "\n";
    out += "basis:\n";
    for (const auto& row : res.basis) out += render_row(row) + "\n";
    if (verbosity > 0) {
        out += "trace: " + std::to_string(res.trace.size()) + " steps\n";
        int n = 0;
        for (const auto& st : res.trace) {
            out += "step " + std::to_string(++n) + " [" + trace_kind_name(st.kind) + "]";
            if (st.kind == TraceKind::transvection)
                out += " T[" + std::to_string(st.i + 1) + "," + std::to_string(st.j + 1) +
                       "](" + render_ore_poly(st.m) + ")";
            else if (st.kind != TraceKind::b1_block)
                out += " P[" + std::to_string(st.i + 1) + "," + std::to_string(st.j + 1) + "]";
            if (!st.note.empty()) out += ": " + st.note;
            out += "\n";
            if (verbosity > 1 && st.kind == TraceKind::b1_block && st.block) {
                out += "E:\n" + render_matrix(st.block->first) + "\n";
                out += "Einv:\n" + render_matrix(st.block->second) + "\n";
            }
            if (verbosity > 1 && st.f_after)
                out += "F:\n" + render_matrix(*st.f_after) + "\n";
        }
    }
    return out;
}

/// Structured machine-readable result document.
template <Field K>
nlohmann::json result_to_json(const OreRing<K>& ring, const DiagResult<K>& res,
                              bool include_trace = false) {
    nlohmann::json j;
    j["format"] = "oreqs-result";
    j["ring"] = render_ring(ring);
    j["size"] = res.u.rows();
    j["rank"] = res.rank;
    j["U"] = render_matrix(res.u);
    j["Uinv"] = render_matrix(res.uinv);
    j["D"] = render_matrix(res.d);
    auto rows = nlohmann::json::array();
    for (const auto& row : res.basis) rows.push_back(render_row(row));
    j["basis"] = rows;
    if (include_trace) {
        auto steps = nlohmann::json::array();
        for (const auto& st : res.trace) {
            nlohmann::json sj;
            sj["kind"] = trace_kind_name(st.kind);
            if (st.i >= 0) sj["i"] = st.i + 1;
            if (st.j >= 0) sj["j"] = st.j + 1;
            if (st.kind == TraceKind::transvection) sj["m"] = render_ore_poly(st.m);
            if (!st.note.empty()) sj["note"] = st.note;
            steps.push_back(std::move(sj));
        }
        j["trace"] = steps;
    }
    return j;
}

template <Field K>
struct ResultDoc {
    using field_type = K;
    OreRing<K> ring;
    DiagResult<K> result;
};

using ResultVariant = std::variant<ResultDoc<Rational>, ResultDoc<GaussianRational>,
                                   ResultDoc<RatFunc>, ResultDoc<RatFuncTower>>;

/// Parses a machine-readable result document (trace is not reconstructed).
inline ResultVariant parse_result_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), 1, 1);
    }
    auto need = [&](const char* key) -> const nlohmann::json& {
        if (!j.contains(key))
            throw ParseError(std::string("result document lacks '") + key + "'", 1, 1);
        return j[key];
    };
    std::string ring_text = need("ring").get<std::string>();
    FieldKind kind = scan_ring_field_kind(ring_text);
    return with_field_kind(kind, [&](auto tag) -> ResultVariant {
        using K = typename decltype(tag)::type;
        OreRing<K> ring = parse_ring<K>(ring_text);
        OreMatrix<K> u = parse_matrix<K>(ring, need("U").get<std::string>());
        OreMatrix<K> uinv = parse_matrix<K>(ring, need("Uinv").get<std::string>());
        OreMatrix<K> d = parse_matrix<K>(ring, need("D").get<std::string>());
        int rank = need("rank").get<int>();
        std::vector<std::vector<OrePoly<K>>> basis;
        for (const auto& row_json : need("basis")) {
            std::string row_text = row_json.get<std::string>();
            std::vector<OrePoly<K>> row;
            size_t start = 0;
            while (true) {
                size_t semi = row_text.find(';', start);
                std::string_view cell{row_text.data() + start,
                                      (semi == std::string::npos ? row_text.size() : semi) -
                                          start};
                row.push_back(parse_ore_poly<K>(cell));
                if (semi == std::string::npos) break;
                start = semi + 1;
            }
            basis.push_back(std::move(row));
        }
        DiagResult<K> res{std::move(u), std::move(uinv), std::move(d), rank, std::move(basis),
                          {}};
        return ResultDoc<K>{std::move(ring), std::move(res)};
    });
}

}  // namespace oreqs
