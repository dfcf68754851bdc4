#pragma once

#include <cctype>
#include <string>

#include "hoc/ring.hpp"

namespace hoc {

// Grammar (whitespace insignificant):
//   expr   := term (('+'|'-') term)*
//   term   := coeff ('*' factor)* | factor ('*' factor)*
//   factor := var ('^' uint)? | '(' expr ')'
//   coeff  := int ('/' uint)?
namespace detail {

template <class K>
class PolyParser {
    const std::string& s_;
    std::size_t pos_ = 0;
    CtxPtr<K> ctx_;

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    [[noreturn]] void expected(const std::string& what) {
        fail(errc::syntax, "at position " + std::to_string(pos_) + ": expected " + what);
    }

    std::string read_digits() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) expected("digits");
        return s_.substr(start, pos_ - start);
    }

    Poly<K> parse_coeff() {
        skip_ws();
        std::string num;
        if (peek() == '-') {
            ++pos_;
            num = "-";
        }
        num += read_digits();
        std::string den;
        if (peek() == '/') {
            ++pos_;
            den = read_digits();
        }
        return Poly<K>::constant(ctx_, ctx_->scalar_from_strings(num, den));
    }

    Poly<K> parse_factor() {
        skip_ws();
        if (peek() == '(') {
            ++pos_;
            Poly<K> e = parse_expr();
            if (peek() != ')') expected("')'");
            ++pos_;
            return e;
        }
        if (!std::isalpha(static_cast<unsigned char>(peek())) && peek() != '_') expected("variable or '('");
        std::size_t start = pos_;
        while (pos_ < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
            ++pos_;
        std::string name = s_.substr(start, pos_ - start);
        auto idx = ctx_->var_index(name);
        if (!idx)
            fail(errc::unknown_variable,
                 name + " at position " + std::to_string(start) + " is not declared");
        std::uint64_t exp = 1;
        if (peek() == '^') {
            ++pos_;
            exp = std::stoull(read_digits());
        }
        return Poly<K>::variable(ctx_, *idx).pow(exp);
    }

    Poly<K> parse_term() {
        skip_ws();
        char c = peek();
        Poly<K> t(ctx_);
        if (c == '-' || std::isdigit(static_cast<unsigned char>(c)))
            t = parse_coeff();
        else
            t = parse_factor();
        while (peek() == '*') {
            ++pos_;
            t *= parse_factor();
        }
        return t;
    }

    Poly<K> parse_expr() {
        Poly<K> acc = parse_term();
        while (true) {
            char c = peek();
            if (c == '+') {
                ++pos_;
                acc += parse_term();
            } else if (c == '-') {
                ++pos_;
                acc -= parse_term();
            } else {
                break;
            }
        }
        return acc;
    }

public:
    PolyParser(const std::string& s, CtxPtr<K> ctx) : s_(s), ctx_(std::move(ctx)) {}

    Poly<K> run() {
        Poly<K> p = parse_expr();
        skip_ws();
        if (pos_ != s_.size()) expected("end of input");
        return p;
    }
};

} // namespace detail

template <class K>
Poly<K> parse_poly(const std::string& text, CtxPtr<K> ctx) {
    return detail::PolyParser<K>(text, std::move(ctx)).run();
}

// Canonical rendering: terms in descending monomial order; signs of trailing
// terms absorbed into the joining '+'/'-'; unit coefficients omitted on
// nontrivial monomials except a leading -1, which prints as "-1*...", the
// only grammar-conformant spelling.
template <class K>
std::string print_poly(const Poly<K>& p) {
    if (p.is_zero()) return "0";
    const auto& ctx = *p.ctx();
    std::string out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        K coeff = c;
        if (first) {
            first = false;
        } else {
            if (coeff.negative()) {
                out += " - ";
                coeff = -coeff;
            } else {
                out += " + ";
            }
        }
        bool trivial = exp_degree(e) == 0;
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += ctx.vars[i];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (trivial) {
            out += coeff.str();
        } else if (coeff.is_one()) {
            out += mono;
        } else {
            out += coeff.str() + "*" + mono;
        }
    }
    return out;
}

} // namespace hoc
