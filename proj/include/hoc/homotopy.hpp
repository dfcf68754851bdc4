#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hoc/orthogonal.hpp"
#include "hoc/quadric.hpp"

namespace hoc {

// A quadric point over A[T]: the defining equation holds identically in the
// homotopy variable, so evaluation at any T stays on the quadric.
template <class K>
struct Homotopy {
    QuadricPoint<K> point;

    const CtxPtr<K>& ctx() const { return point.ctx(); }
    std::size_t tvar() const { return *point.ctx()->homotopy_var; }
};

template <class K>
Homotopy<K> make_homotopy(QuadricPoint<K> point) {
    if (!point.ctx()->homotopy_var)
        fail(errc::bad_input, "homotopy requires a context with a homotopy variable");
    if (!quadric_residual(point).is_zero())
        fail(errc::not_on_quadric, "homotopy violates the defining equation");
    return Homotopy<K>{std::move(point)};
}

template <class K>
QuadricPoint<K> h_eval(const Homotopy<K>& h, const Poly<K>& t) {
    std::map<std::size_t, Poly<K>> sub{{h.tvar(), t}};
    std::vector<Poly<K>> coords;
    for (const auto& c : h.point.coords()) coords.push_back(c.substitute(sub));
    return check_point(h.point.variant, h.point.n, coords);
}

template <class K>
QuadricPoint<K> h_eval(const Homotopy<K>& h, long t) {
    return h_eval(h, Poly<K>::constant(h.ctx(), t));
}

template <class K>
QuadricPoint<K> h_start(const Homotopy<K>& h) {
    return h_eval(h, 0);
}
template <class K>
QuadricPoint<K> h_end(const Homotopy<K>& h) {
    return h_eval(h, 1);
}

template <class K>
Homotopy<K> homotopy_gamma(const Homotopy<K>& h) {
    return Homotopy<K>{gamma(h.point)};
}

// Chains: consecutive homotopies with H_i(1) = H_{i+1}(0), exactly.
template <class K>
struct Chain {
    std::vector<Homotopy<K>> homotopies;
};

struct ChainIssue {
    std::size_t index;
    std::string what;
};

struct ChainCheck {
    std::optional<ChainIssue> issue;

    bool ok() const { return !issue.has_value(); }
};

template <class K>
ChainCheck verify_chain(const Chain<K>& c, const QuadricPoint<K>& from,
                        const QuadricPoint<K>& to) {
    if (c.homotopies.empty()) return {ChainIssue{0, "chain is empty"}};
    for (std::size_t i = 0; i < c.homotopies.size(); ++i)
        if (!quadric_residual(c.homotopies[i].point).is_zero())
            return {ChainIssue{i, "entry " + std::to_string(i) + " is off the quadric"}};
    if (h_start(c.homotopies.front()) != from) return {ChainIssue{0, "H_1(0) differs from the declared start"}};
    for (std::size_t i = 0; i + 1 < c.homotopies.size(); ++i)
        if (h_end(c.homotopies[i]) != h_start(c.homotopies[i + 1]))
            return {ChainIssue{i + 1, "junction " + std::to_string(i + 1) + " mismatches"}};
    if (h_end(c.homotopies.back()) != to)
        return {ChainIssue{c.homotopies.size(), "H_m(1) differs from the declared end"}};
    return {};
}

// The explicit three-step chain from 0 to 1, generalized from the n = 2
// display by zero padding: (0; T,0..; 0..), (T; 1,0..; T(1-T),0..),
// (1; 1-T,0..; 0..).
template <class K>
Chain<K> base_point_chain(const CtxPtr<K>& ctx, std::size_t n) {
    if (!ctx->homotopy_var) fail(errc::bad_input, "base_point_chain needs a homotopy variable");
    if (n < 2) fail(errc::bad_input, "base_point_chain needs n >= 2");
    auto t = Poly<K>::variable(ctx, *ctx->homotopy_var);
    auto one = Poly<K>::constant(ctx, 1);
    auto zero = Poly<K>::zero(ctx);
    std::vector<Poly<K>> zrow(n, zero);

    auto mk = [&](Poly<K> s, Poly<K> f1, Poly<K> g1) {
        std::vector<Poly<K>> f = zrow, g = zrow;
        f[0] = std::move(f1);
        g[0] = std::move(g1);
        return make_homotopy(check_point(QuadricVariant::Q, n, std::move(s), std::move(f),
                                         std::move(g)));
    };
    Chain<K> c;
    c.homotopies.push_back(mk(zero, t, zero));
    c.homotopies.push_back(mk(t, one, t * (one - t)));
    c.homotopies.push_back(mk(one, one - t, zero));
    return c;
}

template <class K>
Chain<K> gamma_chain(const Chain<K>& c) {
    Chain<K> r;
    for (const auto& h : c.homotopies) r.homotopies.push_back(homotopy_gamma(h));
    return r;
}

template <class K>
Chain<K> chain_concat(const Chain<K>& a, const Chain<K>& b) {
    Chain<K> r = a;
    r.homotopies.insert(r.homotopies.end(), b.homotopies.begin(), b.homotopies.end());
    return r;
}

// Reversal: entries in reverse order with T replaced by 1-T.
template <class K>
Chain<K> chain_reverse(const Chain<K>& c) {
    Chain<K> r;
    for (auto it = c.homotopies.rbegin(); it != c.homotopies.rend(); ++it) {
        auto ctx = it->ctx();
        auto flip = Poly<K>::constant(ctx, 1) - Poly<K>::variable(ctx, it->tvar());
        std::map<std::size_t, Poly<K>> sub{{it->tvar(), flip}};
        std::vector<Poly<K>> coords;
        for (const auto& p : it->point.coords()) coords.push_back(p.substitute(sub));
        r.homotopies.push_back(
            Homotopy<K>{check_point(it->point.variant, it->point.n, coords)});
    }
    return r;
}

// A word with T-dependent parameters multiplying to the identity at T = 0.
template <class K>
struct TranslationFamily {
    EOWord<Poly<K>> word;
};

template <class K>
EOWord<Poly<K>> word_at(const EOWord<Poly<K>>& w, std::size_t tvar, const Poly<K>& t) {
    EOWord<Poly<K>> r;
    std::map<std::size_t, Poly<K>> sub{{tvar, t}};
    for (const auto& g : w.gens)
        r.gens.push_back(EOGen<Poly<K>>{g.family, g.i, g.j, g.lambda.substitute(sub)});
    return r;
}

template <class K>
struct TranslationCert {
    TranslationFamily<K> family;
    QuadricPoint<K> start;
    Homotopy<K> homotopy; // act(word, start), with homotopy(0) = start
};

template <class K>
TranslationCert<K> verify_translation(const TranslationFamily<K>& fam, const QuadricPoint<K>& u) {
    if (u.variant != QuadricVariant::Qprime)
        fail(errc::bad_input, "translation families act on Q' points");
    auto ctx = u.ctx();
    if (!ctx->homotopy_var) fail(errc::bad_input, "translation needs a homotopy variable");
    std::size_t tv = *ctx->homotopy_var;

    auto at0 = word_at(fam.word, tv, Poly<K>::zero(ctx));
    if (word_to_matrix(at0, u.n, ctx) != poly_identity(ctx, 2 * u.n + 1))
        fail(errc::not_identity_at_zero, "word does not evaluate to the identity at T = 0");

    auto h = make_homotopy(act_qprime(fam.word, u)); // membership re-checked here
    if (h_start(h) != u)
        fail(errc::certificate_failure, "homotopy does not start at the given point");
    return TranslationCert<K>{fam, u, std::move(h)};
}

// Chain-collapsing composition: one homotopy from u to the iterated action of
// the families' T = 1 values, listed first family acting first.
template <class K>
TranslationCert<K> compose_translations(const std::vector<TranslationFamily<K>>& fams,
                                        const QuadricPoint<K>& u) {
    TranslationFamily<K> joined;
    for (const auto& f : fams) {
        // every family must individually be the identity at T = 0
        (void)verify_translation(f, u);
        joined.word = word_concat(joined.word, f.word);
    }
    return verify_translation(joined, u);
}

} // namespace hoc
