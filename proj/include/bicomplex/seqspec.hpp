#pragma once

// Sequence-term expressions: the text form of w_n (or c_n) accepted by the
// command line tool.
//
//   expr   := term (('+' | '-') term)*
//   term   := factor (('*' | '/') factor)*
//   factor := '-' factor | power
//   power  := atom ('^' int)?
//   int    := '-'? digits
//   atom   := number | 'n' | 'i1' | 'i2' | 'j' | 'e1' | 'e2' | 'pi'
//           | ('exp' | 'log' | 'sqrt') '(' expr ')'
//           | '(' expr ')'
//           | '[' expr '|' expr ']'          (a*e1 + b*e2)
//
// Whitespace is ignored. log and sqrt use principal branches.

#include <cctype>
#include <charconv>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <type_traits>
#include <variant>
#include <vector>

#include "bicomplex/core.hpp"
#include "bicomplex/format.hpp"
#include "bicomplex/transcendental.hpp"

namespace bicomplex::seqspec {

enum class Constant { i1, i2, j, e1, e2, pi };
enum class Function { exp, log, sqrt };
enum class BinaryOp { add, sub, mul, div };

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Number {
    double value;
};
struct Index {};
struct Const {
    Constant which;
};
struct Negate {
    ExprPtr arg;
};
struct Binary {
    BinaryOp op;
    ExprPtr lhs;
    ExprPtr rhs;
};
struct Power {
    ExprPtr base;
    int exponent;
};
struct Call {
    Function fn;
    ExprPtr arg;
};
struct Idempotent {
    ExprPtr first;
    ExprPtr second;
};

struct Expr {
    std::variant<Number, Index, Const, Negate, Binary, Power, Call, Idempotent> node;
};

// ---------------------------------------------------------------------------
// Construction helpers

inline ExprPtr number(double v) { return std::make_shared<const Expr>(Expr{Number{v}}); }
inline ExprPtr index() { return std::make_shared<const Expr>(Expr{Index{}}); }
inline ExprPtr constant(Constant c) { return std::make_shared<const Expr>(Expr{Const{c}}); }
inline ExprPtr negate(ExprPtr a) { return std::make_shared<const Expr>(Expr{Negate{std::move(a)}}); }
inline ExprPtr binary(BinaryOp op, ExprPtr a, ExprPtr b) {
    return std::make_shared<const Expr>(Expr{Binary{op, std::move(a), std::move(b)}});
}
inline ExprPtr power(ExprPtr base, int k) {
    return std::make_shared<const Expr>(Expr{Power{std::move(base), k}});
}
inline ExprPtr call(Function f, ExprPtr a) {
    return std::make_shared<const Expr>(Expr{Call{f, std::move(a)}});
}
inline ExprPtr idempotent(ExprPtr a, ExprPtr b) {
    return std::make_shared<const Expr>(Expr{Idempotent{std::move(a), std::move(b)}});
}

constexpr std::string_view name(Constant c) {
    switch (c) {
    case Constant::i1: return "i1";
    case Constant::i2: return "i2";
    case Constant::j: return "j";
    case Constant::e1: return "e1";
    case Constant::e2: return "e2";
    case Constant::pi: return "pi";
    }
    return "?";
}

constexpr std::string_view name(Function f) {
    switch (f) {
    case Function::exp: return "exp";
    case Function::log: return "log";
    case Function::sqrt: return "sqrt";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Structural equality

bool equal(const Expr& a, const Expr& b);

inline bool equal(const ExprPtr& a, const ExprPtr& b) {
    if (!a || !b) return a == b;
    return equal(*a, *b);
}

inline bool equal(const Expr& a, const Expr& b) {
    if (a.node.index() != b.node.index()) return false;
    return std::visit(
        [&](const auto& x) -> bool {
            using T = std::decay_t<decltype(x)>;
            const auto& y = std::get<T>(b.node);
            if constexpr (std::is_same_v<T, Number>) return x.value == y.value;
            else if constexpr (std::is_same_v<T, Index>) return true;
            else if constexpr (std::is_same_v<T, Const>) return x.which == y.which;
            else if constexpr (std::is_same_v<T, Negate>) return equal(x.arg, y.arg);
            else if constexpr (std::is_same_v<T, Binary>)
                return x.op == y.op && equal(x.lhs, y.lhs) && equal(x.rhs, y.rhs);
            else if constexpr (std::is_same_v<T, Power>)
                return x.exponent == y.exponent && equal(x.base, y.base);
            else if constexpr (std::is_same_v<T, Call>) return x.fn == y.fn && equal(x.arg, y.arg);
            else return equal(x.first, y.first) && equal(x.second, y.second);
        },
        a.node);
}

// ---------------------------------------------------------------------------
// Printing

/// Constructor-style dump, e.g. Add(1, Div(i2, Pow(n, 2))).
inline std::string to_sexpr(const Expr& e) {
    return std::visit(
        [](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Number>) return format_number(x.value);
            else if constexpr (std::is_same_v<T, Index>) return "n";
            else if constexpr (std::is_same_v<T, Const>) return std::string(name(x.which));
            else if constexpr (std::is_same_v<T, Negate>) return "Neg(" + to_sexpr(*x.arg) + ")";
            else if constexpr (std::is_same_v<T, Binary>) {
                static constexpr const char* names[] = {"Add", "Sub", "Mul", "Div"};
                return std::string(names[static_cast<int>(x.op)]) + "(" + to_sexpr(*x.lhs) + ", " +
                       to_sexpr(*x.rhs) + ")";
            } else if constexpr (std::is_same_v<T, Power>)
                return "Pow(" + to_sexpr(*x.base) + ", " + std::to_string(x.exponent) + ")";
            else if constexpr (std::is_same_v<T, Call>)
                return "Call(" + std::string(name(x.fn)) + ", " + to_sexpr(*x.arg) + ")";
            else return "Idem(" + to_sexpr(*x.first) + ", " + to_sexpr(*x.second) + ")";
        },
        e.node);
}

namespace detail {

// Binding strength of the production a node prints as.
enum Level { sum_level = 1, product_level = 2, unary_level = 3, atom_level = 5 };

inline int level(const Expr& e) {
    return std::visit(
        [](const auto& x) -> int {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Binary>)
                return x.op == BinaryOp::add || x.op == BinaryOp::sub ? sum_level : product_level;
            else if constexpr (std::is_same_v<T, Negate>) return unary_level;
            else if constexpr (std::is_same_v<T, Power>) return unary_level + 1;
            else if constexpr (std::is_same_v<T, Number>) return x.value < 0 ? unary_level : atom_level;
            else return atom_level;
        },
        e.node);
}

} // namespace detail

/// Infix text with the minimal parentheses for parse(render(e)) to rebuild e.
/// A negative Number prints as "-x" and so reads back as Negate(Number(x)).
std::string render(const Expr& e);

inline std::string render_at(const Expr& e, int min_level) {
    std::string s = render(e);
    return detail::level(e) < min_level ? "(" + s + ")" : s;
}

inline std::string render(const Expr& e) {
    using namespace detail;
    return std::visit(
        [](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Number>) return format_number(x.value);
            else if constexpr (std::is_same_v<T, Index>) return "n";
            else if constexpr (std::is_same_v<T, Const>) return std::string(name(x.which));
            else if constexpr (std::is_same_v<T, Negate>) return "-" + render_at(*x.arg, unary_level);
            else if constexpr (std::is_same_v<T, Binary>) {
                static constexpr const char* ops[] = {" + ", " - ", "*", "/"};
                const int lhs_level = x.op == BinaryOp::add || x.op == BinaryOp::sub ? sum_level : product_level;
                return render_at(*x.lhs, lhs_level) + ops[static_cast<int>(x.op)] +
                       render_at(*x.rhs, lhs_level + 1);
            } else if constexpr (std::is_same_v<T, Power>)
                return render_at(*x.base, atom_level) + "^" + std::to_string(x.exponent);
            else if constexpr (std::is_same_v<T, Call>)
                return std::string(name(x.fn)) + "(" + render(*x.arg) + ")";
            else return "[" + render(*x.first) + " | " + render(*x.second) + "]";
        },
        e.node);
}

// ---------------------------------------------------------------------------
// Parsing

class parse_error : public error {
public:
    parse_error(std::size_t offset, std::vector<std::string> expected, std::string found)
        : error(make_message(offset, expected, found)), offset_(offset),
          expected_(std::move(expected)), found_(std::move(found)) {}

    std::size_t offset() const noexcept { return offset_; }
    const std::vector<std::string>& expected() const noexcept { return expected_; }
    const std::string& found() const noexcept { return found_; }

private:
    static std::string make_message(std::size_t offset, const std::vector<std::string>& expected,
                                    const std::string& found) {
        std::string m = "syntax error at offset " + std::to_string(offset) + ": expected ";
        for (std::size_t k = 0; k < expected.size(); ++k) m += (k ? ", " : "") + expected[k];
        return m + "; found " + found;
    }

    std::size_t offset_;
    std::vector<std::string> expected_;
    std::string found_;
};

namespace detail {

enum class Tok { number, ident, plus, minus, star, slash, caret, lparen, rparen, lbracket, bar, rbracket, end };

struct Token {
    Tok kind;
    std::size_t offset;
    std::string_view text;
    double value = 0;
};

inline std::string describe(const Token& t) {
    if (t.kind == Tok::end) return "end of input";
    return "'" + std::string(t.text) + "'";
}

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    Token next() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        const std::size_t start = pos_;
        if (pos_ == src_.size()) return {Tok::end, start, {}};
        const char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return lex_number(start);
        if (std::isalpha(static_cast<unsigned char>(c))) {
            while (pos_ < src_.size() && std::isalnum(static_cast<unsigned char>(src_[pos_]))) ++pos_;
            return {Tok::ident, start, src_.substr(start, pos_ - start)};
        }
        ++pos_;
        const auto sym = [&](Tok k) { return Token{k, start, src_.substr(start, 1)}; };
        switch (c) {
        case '+': return sym(Tok::plus);
        case '-': return sym(Tok::minus);
        case '*': return sym(Tok::star);
        case '/': return sym(Tok::slash);
        case '^': return sym(Tok::caret);
        case '(': return sym(Tok::lparen);
        case ')': return sym(Tok::rparen);
        case '[': return sym(Tok::lbracket);
        case '|': return sym(Tok::bar);
        case ']': return sym(Tok::rbracket);
        default: break;
        }
        throw parse_error(start, {"number", "identifier", "operator"},
                          "'" + std::string(src_.substr(start, 1)) + "'");
    }

private:
    Token lex_number(std::size_t start) {
        const auto digits = [&] {
            std::size_t k = 0;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_, ++k;
            return k;
        };
        std::size_t mantissa = digits();
        if (pos_ < src_.size() && src_[pos_] == '.') {
            ++pos_;
            mantissa += digits();
        }
        if (mantissa == 0) throw parse_error(start, {"digit"}, "'.'");
        if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
            // 2e1 is a number; 2e1x or 2e alone is not an exponent
            std::size_t save = pos_++;
            if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) ++pos_;
            if (digits() == 0) pos_ = save;
        }
        const std::string_view text = src_.substr(start, pos_ - start);
        double v = 0;
        const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
        if (res.ec != std::errc{} || res.ptr != text.data() + text.size() || !std::isfinite(v))
            throw parse_error(start, {"finite number"}, "'" + std::string(text) + "'");
        return {Tok::number, start, text, v};
    }

    std::string_view src_;
    std::size_t pos_ = 0;
};

class Parser {
public:
    explicit Parser(std::string_view src) : lex_(src) { advance(); }

    ExprPtr parse_all() {
        ExprPtr e = expr();
        if (cur_.kind != Tok::end) fail({"'+'", "'-'", "'*'", "'/'", "end of input"});
        return e;
    }

private:
    void advance() { cur_ = lex_.next(); }

    [[noreturn]] void fail(std::vector<std::string> expected) const {
        throw parse_error(cur_.offset, std::move(expected), describe(cur_));
    }

    void expect(Tok kind, const char* what) {
        if (cur_.kind != kind) fail({what});
        advance();
    }

    ExprPtr expr() {
        ExprPtr lhs = term();
        while (cur_.kind == Tok::plus || cur_.kind == Tok::minus) {
            const BinaryOp op = cur_.kind == Tok::plus ? BinaryOp::add : BinaryOp::sub;
            advance();
            lhs = binary(op, lhs, term());
        }
        return lhs;
    }

    ExprPtr term() {
        ExprPtr lhs = factor();
        while (cur_.kind == Tok::star || cur_.kind == Tok::slash) {
            const BinaryOp op = cur_.kind == Tok::star ? BinaryOp::mul : BinaryOp::div;
            advance();
            lhs = binary(op, lhs, factor());
        }
        return lhs;
    }

    ExprPtr factor() {
        if (cur_.kind == Tok::minus) {
            advance();
            return negate(factor());
        }
        return power_expr();
    }

    ExprPtr power_expr() {
        ExprPtr base = atom();
        if (cur_.kind != Tok::caret) return base;
        advance();
        bool neg = false;
        if (cur_.kind == Tok::minus) {
            neg = true;
            advance();
        }
        if (cur_.kind != Tok::number) fail({"integer exponent"});
        int k = 0;
        const auto res = std::from_chars(cur_.text.data(), cur_.text.data() + cur_.text.size(), k);
        if (res.ec != std::errc{} || res.ptr != cur_.text.data() + cur_.text.size())
            fail({"integer exponent"});
        advance();
        return power(base, neg ? -k : k);
    }

    ExprPtr atom() {
        switch (cur_.kind) {
        case Tok::number: {
            const double v = cur_.value;
            advance();
            return number(v);
        }
        case Tok::lparen: {
            advance();
            ExprPtr e = expr();
            expect(Tok::rparen, "')'");
            return e;
        }
        case Tok::lbracket: {
            advance();
            ExprPtr a = expr();
            expect(Tok::bar, "'|'");
            ExprPtr b = expr();
            expect(Tok::rbracket, "']'");
            return idempotent(a, b);
        }
        case Tok::ident: return identifier();
        default: break;
        }
        fail({"number", "identifier", "'('", "'['", "'-'"});
    }

    ExprPtr identifier() {
        const std::string_view id = cur_.text;
        if (id == "n") {
            advance();
            return index();
        }
        for (Constant c : {Constant::i1, Constant::i2, Constant::j, Constant::e1, Constant::e2, Constant::pi}) {
            if (id == name(c)) {
                advance();
                return constant(c);
            }
        }
        for (Function f : {Function::exp, Function::log, Function::sqrt}) {
            if (id == name(f)) {
                advance();
                expect(Tok::lparen, "'('");
                ExprPtr arg = expr();
                expect(Tok::rparen, "')'");
                return call(f, arg);
            }
        }
        fail({"n", "i1", "i2", "j", "e1", "e2", "pi", "exp", "log", "sqrt"});
    }

    Lexer lex_;
    Token cur_{Tok::end, 0, {}};
};

} // namespace detail

inline ExprPtr parse(std::string_view text) { return detail::Parser(text).parse_all(); }

// ---------------------------------------------------------------------------
// Evaluation

namespace detail {

inline Bicomplex constant_value(Constant c) {
    switch (c) {
    case Constant::i1: return Bicomplex::i1();
    case Constant::i2: return Bicomplex::i2();
    case Constant::j: return Bicomplex::j();
    case Constant::e1: return Bicomplex::e1();
    case Constant::e2: return Bicomplex::e2();
    case Constant::pi: return Bicomplex{pi};
    }
    return {};
}

inline Bicomplex int_power(Bicomplex base, int exponent) {
    long long k = exponent;
    if (k < 0) {
        base = inverse(base);
        k = -k;
    }
    Bicomplex result{1.0};
    for (; k > 0; k >>= 1) {
        if (k & 1) result *= base;
        if (k > 1) base *= base;
    }
    return result;
}

inline Bicomplex eval(const Expr& e, double n) {
    return std::visit(
        [n](const auto& x) -> Bicomplex {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Number>) return Bicomplex{x.value};
            else if constexpr (std::is_same_v<T, Index>) return Bicomplex{n};
            else if constexpr (std::is_same_v<T, Const>) return constant_value(x.which);
            else if constexpr (std::is_same_v<T, Negate>) return -eval(*x.arg, n);
            else if constexpr (std::is_same_v<T, Binary>) {
                const Bicomplex a = eval(*x.lhs, n);
                const Bicomplex b = eval(*x.rhs, n);
                switch (x.op) {
                case BinaryOp::add: return a + b;
                case BinaryOp::sub: return a - b;
                case BinaryOp::mul: return a * b;
                case BinaryOp::div: return a / b;
                }
                return {};
            } else if constexpr (std::is_same_v<T, Power>) return int_power(eval(*x.base, n), x.exponent);
            else if constexpr (std::is_same_v<T, Call>) {
                const Bicomplex a = eval(*x.arg, n);
                switch (x.fn) {
                case Function::exp: return bicomplex::exp(a);
                case Function::log: return log_principal(a);
                case Function::sqrt: return bicomplex::sqrt(a);
                }
                return {};
            } else
                return eval(*x.first, n) * Bicomplex::e1() + eval(*x.second, n) * Bicomplex::e2();
        },
        e.node);
}

} // namespace detail

/// Value of the term at index n >= 1. Errors carry n.
inline Bicomplex eval_term(const Expr& e, std::uint64_t n) {
    if (n < 1) throw precondition_error("term index must be at least 1");
    try {
        return detail::eval(e, static_cast<double>(n));
    } catch (const singular_operand& ex) {
        throw singular_operand(ex.what(), n);
    } catch (const non_finite& ex) {
        throw non_finite(ex.what(), n);
    }
}

/// Generator over e(first), e(first + 1), ...
inline auto term_generator(ExprPtr e, std::uint64_t first = 1) {
    return [e = std::move(e), n = first]() mutable { return eval_term(*e, n++); };
}

} // namespace bicomplex::seqspec
