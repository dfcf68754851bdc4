#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hoc/error.hpp"
#include "hoc/scalar.hpp"

namespace hoc {

using Exp = std::vector<std::uint32_t>;

inline std::uint64_t exp_degree(const Exp& e) {
    std::uint64_t d = 0;
    for (auto x : e) d += x;
    return d;
}

// Graded reverse lexicographic order with the declared variable order.
// a < b iff deg a < deg b, or degrees tie and at the last differing
// position a has the *larger* exponent.
inline bool degrevlex_less(const Exp& a, const Exp& b) {
    std::uint64_t da = exp_degree(a), db = exp_degree(b);
    if (da != db) return da < db;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] > b[i];
    }
    return false;
}

// Block order that makes one variable dominant, used internally for
// intersection-by-elimination. Ties fall back to degrevlex.
inline bool elim_less(std::size_t dominant, const Exp& a, const Exp& b) {
    if (a[dominant] != b[dominant]) return a[dominant] < b[dominant];
    return degrevlex_less(a, b);
}

enum class MonomialOrder { degrevlex, elim_last };

inline bool mon_less(MonomialOrder ord, const Exp& a, const Exp& b) {
    if (ord == MonomialOrder::elim_last) return elim_less(a.size() - 1, a, b);
    return degrevlex_less(a, b);
}

inline bool exp_divides(const Exp& a, const Exp& b) { // a | b
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline Exp exp_sub(const Exp& a, const Exp& b) { // a - b, requires b | a
    Exp r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Exp exp_add(const Exp& a, const Exp& b) {
    Exp r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Exp exp_lcm(const Exp& a, const Exp& b) {
    Exp r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

// Ring context: the coefficient field, the declared variable list, the
// monomial order and the optional distinguished homotopy variable. All
// polynomial values reference one of these (shared, immutable).
template <class K>
struct RingCtx {
    std::vector<std::string> vars;
    MonomialOrder order = MonomialOrder::degrevlex;
    std::optional<std::size_t> homotopy_var;
    std::uint64_t p = 0; // 0 = rationals

    std::size_t nvars() const { return vars.size(); }

    std::optional<std::size_t> var_index(const std::string& name) const {
        for (std::size_t i = 0; i < vars.size(); ++i)
            if (vars[i] == name) return i;
        return std::nullopt;
    }

    K scalar(long num, unsigned long den = 1) const {
        if constexpr (std::is_same_v<K, Rational>) {
            return Rational(mpz_class(num), mpz_class(static_cast<long>(den)));
        } else {
            FpElem n(static_cast<std::uint64_t>(num < 0 ? -(num + 1) : num), p);
            if (num < 0) n = -(n + FpElem(1, p));
            FpElem d(den % p, p);
            return n * d.inv();
        }
    }

    K scalar_from_strings(const std::string& num, const std::string& den) const {
        if constexpr (std::is_same_v<K, Rational>) {
            return Rational::from_decimal_strings(num, den);
        } else {
            bool neg = !num.empty() && num[0] == '-';
            FpElem n(0, p);
            for (char c : num) {
                if (c == '-' || c == '+') continue;
                n = n * FpElem(10, p) + FpElem(static_cast<std::uint64_t>(c - '0'), p);
            }
            if (neg) n = -n;
            if (den.empty()) return n;
            FpElem d(0, p);
            for (char c : den) d = d * FpElem(10, p) + FpElem(static_cast<std::uint64_t>(c - '0'), p);
            return n * d.inv();
        }
    }

    K zero() const { return scalar(0); }
    K one() const { return scalar(1); }
    K half() const { return scalar(1, 2); }
};

template <class K>
using CtxPtr = std::shared_ptr<const RingCtx<K>>;

namespace detail {
template <class K>
inline void validate_ctx(const RingCtx<K>& c) {
    for (std::size_t i = 0; i < c.vars.size(); ++i) {
        if (c.vars[i].empty()) fail(errc::bad_input, "empty variable name");
        for (std::size_t j = i + 1; j < c.vars.size(); ++j)
            if (c.vars[i] == c.vars[j]) fail(errc::bad_input, "duplicate variable " + c.vars[i]);
    }
    if (c.homotopy_var && *c.homotopy_var >= c.vars.size())
        fail(errc::bad_input, "homotopy variable not among declared variables");
}
} // namespace detail

inline CtxPtr<Rational> make_ctx_q(std::vector<std::string> vars,
                                   std::optional<std::string> homotopy = std::nullopt) {
    auto c = std::make_shared<RingCtx<Rational>>();
    c->vars = std::move(vars);
    if (homotopy) {
        auto idx = c->var_index(*homotopy);
        if (!idx) fail(errc::bad_input, "homotopy variable " + *homotopy + " not declared");
        c->homotopy_var = idx;
    }
    detail::validate_ctx(*c);
    return c;
}

inline CtxPtr<FpElem> make_ctx_fp(std::uint64_t p, std::vector<std::string> vars,
                                  std::optional<std::string> homotopy = std::nullopt) {
    if (!is_odd_prime(p)) fail(errc::bad_input, "field characteristic must be an odd prime");
    if (p >= (1ull << 31)) fail(errc::bad_input, "prime too large (desk-scale bound 2^31)");
    auto c = std::make_shared<RingCtx<FpElem>>();
    c->vars = std::move(vars);
    c->p = p;
    if (homotopy) {
        auto idx = c->var_index(*homotopy);
        if (!idx) fail(errc::bad_input, "homotopy variable " + *homotopy + " not declared");
        c->homotopy_var = idx;
    }
    detail::validate_ctx(*c);
    return c;
}

// Sparse multivariate polynomial in canonical form: a term map sorted with
// the leading monomial first, never storing zero coefficients.
template <class K>
class Poly {
public:
    struct TermGreater {
        MonomialOrder ord;
        bool operator()(const Exp& a, const Exp& b) const { return mon_less(ord, b, a); }
    };
    using TermMap = std::map<Exp, K, TermGreater>;

private:
    CtxPtr<K> ctx_;
    TermMap terms_;

    void add_term(const Exp& e, const K& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            K s = it->second + c;
            if (s.is_zero())
                terms_.erase(it);
            else
                it->second = s;
        }
    }

public:
    explicit Poly(CtxPtr<K> ctx) : ctx_(std::move(ctx)), terms_(TermGreater{ctx_->order}) {}

    static Poly zero(CtxPtr<K> ctx) { return Poly(std::move(ctx)); }

    static Poly constant(CtxPtr<K> ctx, const K& c) {
        Poly p(std::move(ctx));
        if (!c.is_zero()) p.terms_.emplace(Exp(p.ctx_->nvars(), 0), c);
        return p;
    }

    static Poly constant(CtxPtr<K> ctx, long n) {
        K c = ctx->scalar(n);
        return constant(std::move(ctx), c);
    }

    static Poly variable(CtxPtr<K> ctx, std::size_t idx) {
        if (idx >= ctx->nvars()) fail(errc::bad_input, "variable index out of range");
        Poly p(ctx);
        Exp e(ctx->nvars(), 0);
        e[idx] = 1;
        p.terms_.emplace(std::move(e), ctx->one());
        return p;
    }

    static Poly monomial(CtxPtr<K> ctx, Exp e, const K& c) {
        Poly p(std::move(ctx));
        if (!c.is_zero()) p.terms_.emplace(std::move(e), c);
        return p;
    }

    const CtxPtr<K>& ctx() const { return ctx_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && exp_degree(terms_.begin()->first) == 0);
    }

    K constant_value() const { // value of the constant term
        Exp e(ctx_->nvars(), 0);
        auto it = terms_.find(e);
        return it == terms_.end() ? ctx_->zero() : it->second;
    }

    bool is_one() const { return is_constant() && constant_value().is_one(); }

    std::uint64_t total_degree() const { // 0 for the zero polynomial
        std::uint64_t d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, exp_degree(e));
        return d;
    }

    const Exp& leading_exp() const {
        if (is_zero()) fail(errc::bad_input, "leading term of zero polynomial");
        return terms_.begin()->first;
    }
    const K& leading_coeff() const {
        if (is_zero()) fail(errc::bad_input, "leading term of zero polynomial");
        return terms_.begin()->second;
    }

    bool operator==(const Poly& o) const {
        if (terms_.size() != o.terms_.size()) return false;
        auto a = terms_.begin();
        auto b = o.terms_.begin();
        for (; a != terms_.end(); ++a, ++b)
            if (a->first != b->first || !(a->second == b->second)) return false;
        return true;
    }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly operator-() const {
        Poly r(ctx_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }

    Poly operator+(const Poly& o) const {
        Poly r = *this;
        for (const auto& [e, c] : o.terms_) r.add_term(e, c);
        return r;
    }
    Poly operator-(const Poly& o) const {
        Poly r = *this;
        for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
        return r;
    }
    Poly operator*(const Poly& o) const {
        Poly r(ctx_);
        for (const auto& [ea, ca] : terms_)
            for (const auto& [eb, cb] : o.terms_) r.add_term(exp_add(ea, eb), ca * cb);
        return r;
    }
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly scaled(const K& c) const {
        Poly r(ctx_);
        if (c.is_zero()) return r;
        for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
        return r;
    }

    Poly mul_monomial(const Exp& e, const K& c) const {
        Poly r(ctx_);
        if (c.is_zero()) return r;
        for (const auto& [ea, ca] : terms_) r.terms_.emplace(exp_add(ea, e), ca * c);
        return r;
    }

    Poly pow(std::uint64_t k) const {
        Poly r = constant(ctx_, ctx_->one());
        Poly b = *this;
        while (k) {
            if (k & 1) r *= b;
            b = (k >>= 1) ? b * b : b;
        }
        return r;
    }

    // Simultaneous substitution of polynomials for a subset of variables.
    Poly substitute(const std::map<std::size_t, Poly>& assignment) const {
        Poly result(ctx_);
        std::map<std::pair<std::size_t, std::uint32_t>, Poly> pow_cache;
        for (const auto& [e, c] : terms_) {
            Poly term = constant(ctx_, c);
            Exp rest(ctx_->nvars(), 0);
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                auto it = assignment.find(i);
                if (it == assignment.end()) {
                    rest[i] = e[i];
                    continue;
                }
                auto key = std::make_pair(i, e[i]);
                auto pc = pow_cache.find(key);
                if (pc == pow_cache.end()) pc = pow_cache.emplace(key, it->second.pow(e[i])).first;
                term *= pc->second;
            }
            result += term.mul_monomial(rest, ctx_->one());
        }
        return result;
    }

    // Full evaluation at a scalar point (one value per variable).
    K eval_at(const std::vector<K>& point) const {
        if (point.size() != ctx_->nvars()) fail(errc::bad_input, "point arity mismatch");
        K acc = ctx_->zero();
        for (const auto& [e, c] : terms_) {
            K t = c;
            for (std::size_t i = 0; i < e.size(); ++i)
                for (std::uint32_t k = 0; k < e[i]; ++k) t = t * point[i];
            acc = acc + t;
        }
        return acc;
    }

    // Rebuild this polynomial in another context, matching variables by name.
    template <class K2>
    Poly<K2> in_ctx(const CtxPtr<K2>& target) const;
};

template <class K>
Poly<K> operator*(const K& c, const Poly<K>& p) {
    return p.scaled(c);
}

template <class K>
template <class K2>
Poly<K2> Poly<K>::in_ctx(const CtxPtr<K2>& target) const {
    static_assert(std::is_same_v<K, K2>, "field change is not supported");
    Poly<K2> r(target);
    for (const auto& [e, c] : terms_) {
        Exp e2(target->nvars(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            auto idx = target->var_index(ctx_->vars[i]);
            if (!idx) fail(errc::unknown_variable, ctx_->vars[i] + " missing in target context");
            e2[*idx] = e[i];
        }
        r = r + Poly<K2>::monomial(target, std::move(e2), c);
    }
    return r;
}

} // namespace hoc
