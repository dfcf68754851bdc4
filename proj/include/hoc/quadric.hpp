#pragma once

#include <vector>

#include "hoc/groebner.hpp"
#include "hoc/ring.hpp"

namespace hoc {

enum class QuadricVariant { Q, Qprime };

// A validated solution (s; f_1..f_n; g_1..g_n) of the defining equation
//   Q:      sum f_i g_i + s(s-1) = 0
//   Q':     sum f_i g_i + s^2 - 1 = 0
// Coordinates are stored s first, matching the 0th..2n-th indexing used by
// the orthogonal generators.
template <class K>
struct QuadricPoint {
    QuadricVariant variant;
    std::size_t n;
    Poly<K> s;
    std::vector<Poly<K>> f, g;

    const CtxPtr<K>& ctx() const { return s.ctx(); }

    std::vector<Poly<K>> coords() const {
        std::vector<Poly<K>> c{s};
        for (const auto& p : f) c.push_back(p);
        for (const auto& p : g) c.push_back(p);
        return c;
    }

    bool operator==(const QuadricPoint& o) const {
        return variant == o.variant && n == o.n && s == o.s && f == o.f && g == o.g;
    }
    bool operator!=(const QuadricPoint& o) const { return !(*this == o); }
};

template <class K>
Poly<K> quadric_residual(QuadricVariant variant, const Poly<K>& s, const std::vector<Poly<K>>& f,
                         const std::vector<Poly<K>>& g) {
    auto ctx = s.ctx();
    Poly<K> acc = Poly<K>::zero(ctx);
    for (std::size_t i = 0; i < f.size(); ++i) acc += f[i] * g[i];
    if (variant == QuadricVariant::Q)
        acc += s * (s - Poly<K>::constant(ctx, 1));
    else
        acc += s * s - Poly<K>::constant(ctx, 1);
    return acc;
}

template <class K>
Poly<K> quadric_residual(const QuadricPoint<K>& v) {
    return quadric_residual(v.variant, v.s, v.f, v.g);
}

template <class K>
QuadricPoint<K> check_point(QuadricVariant variant, std::size_t n, Poly<K> s,
                            std::vector<Poly<K>> f, std::vector<Poly<K>> g) {
    if (n < 2) fail(errc::bad_input, "quadric points need n >= 2");
    if (f.size() != n || g.size() != n) fail(errc::bad_input, "coordinate arity mismatch");
    Poly<K> r = quadric_residual(variant, s, f, g);
    if (!r.is_zero())
        fail(errc::not_on_quadric, "defining equation fails, residual " + print_poly(r));
    return QuadricPoint<K>{variant, n, std::move(s), std::move(f), std::move(g)};
}

template <class K>
QuadricPoint<K> check_point(QuadricVariant variant, std::size_t n,
                            const std::vector<Poly<K>>& coords) {
    if (coords.size() != 2 * n + 1) fail(errc::bad_input, "expected 2n+1 coordinates");
    std::vector<Poly<K>> f(coords.begin() + 1, coords.begin() + 1 + n);
    std::vector<Poly<K>> g(coords.begin() + 1 + n, coords.end());
    return check_point(variant, n, coords[0], std::move(f), std::move(g));
}

// Base points: 0 and 1 on Q, u_0 = (1; 0..0; 0..0) on Q'.
template <class K>
QuadricPoint<K> base_zero(const CtxPtr<K>& ctx, std::size_t n) {
    std::vector<Poly<K>> zeros(n, Poly<K>::zero(ctx));
    return QuadricPoint<K>{QuadricVariant::Q, n, Poly<K>::zero(ctx), zeros, zeros};
}

template <class K>
QuadricPoint<K> base_one(const CtxPtr<K>& ctx, std::size_t n) {
    std::vector<Poly<K>> zeros(n, Poly<K>::zero(ctx));
    return QuadricPoint<K>{QuadricVariant::Q, n, Poly<K>::constant(ctx, 1), zeros, zeros};
}

template <class K>
QuadricPoint<K> base_u0(const CtxPtr<K>& ctx, std::size_t n) {
    std::vector<Poly<K>> zeros(n, Poly<K>::zero(ctx));
    return QuadricPoint<K>{QuadricVariant::Qprime, n, Poly<K>::constant(ctx, 1), zeros, zeros};
}

// The Q' <-> Q change of model. The affine choice fixes f and rescales g:
//   alpha(s; f; g) = ((s+1)/2; f; g/4),  beta(t; f; g) = (2t-1; f; 4g).
template <class K>
QuadricPoint<K> alpha(const QuadricPoint<K>& u) {
    if (u.variant != QuadricVariant::Qprime) fail(errc::bad_input, "alpha expects a Q' point");
    auto ctx = u.ctx();
    Poly<K> s = (u.s + Poly<K>::constant(ctx, 1)).scaled(ctx->half());
    std::vector<Poly<K>> g;
    for (const auto& p : u.g) g.push_back(p.scaled(ctx->scalar(1, 4)));
    return check_point(QuadricVariant::Q, u.n, std::move(s), u.f, std::move(g));
}

template <class K>
QuadricPoint<K> beta(const QuadricPoint<K>& v) {
    if (v.variant != QuadricVariant::Q) fail(errc::bad_input, "beta expects a Q point");
    auto ctx = v.ctx();
    Poly<K> s = v.s.scaled(ctx->scalar(2)) - Poly<K>::constant(ctx, 1);
    std::vector<Poly<K>> g;
    for (const auto& p : v.g) g.push_back(p.scaled(ctx->scalar(4)));
    return check_point(QuadricVariant::Qprime, v.n, std::move(s), v.f, std::move(g));
}

// The involution (s; f; g) -> (1-s; f; g).
template <class K>
QuadricPoint<K> gamma(const QuadricPoint<K>& v) {
    if (v.variant != QuadricVariant::Q) fail(errc::bad_input, "gamma expects a Q point");
    return QuadricPoint<K>{QuadricVariant::Q, v.n, Poly<K>::constant(v.ctx(), 1) - v.s, v.f, v.g};
}

// The ideals I(v) = (f_1..f_n, s) and J(v) = (f_1..f_n, 1-s).
template <class K>
Ideal<K> ideal_I(const QuadricPoint<K>& v, GBConfig cfg = {}) {
    if (v.variant != QuadricVariant::Q) fail(errc::bad_input, "ideal_I expects a Q point");
    std::vector<Poly<K>> g = v.f;
    g.push_back(v.s);
    return Ideal<K>(std::move(g), cfg);
}

template <class K>
Ideal<K> ideal_J(const QuadricPoint<K>& v, GBConfig cfg = {}) {
    if (v.variant != QuadricVariant::Q) fail(errc::bad_input, "ideal_J expects a Q point");
    std::vector<Poly<K>> g = v.f;
    g.push_back(Poly<K>::constant(v.ctx(), 1) - v.s);
    return Ideal<K>(std::move(g), cfg);
}

// Two-way inclusion of generator sets under GB reduction.
template <class K>
bool ideals_equal(const Ideal<K>& A, const Ideal<K>& B) {
    for (const auto& g : A.gens())
        if (!ideal_member(g, B).member()) return false;
    for (const auto& g : B.gens())
        if (!ideal_member(g, A).member()) return false;
    return true;
}

} // namespace hoc
