#pragma once

#include <random>

#include "hoc/quadric.hpp"
#include "hoc/ring.hpp"

namespace hoc {

// Deterministic sampling helpers. Every randomized operation takes an
// explicit seed; mt19937_64 gives the same stream on every platform.
using Rng = std::mt19937_64;

template <class K>
K rand_scalar(const CtxPtr<K>& ctx, Rng& rng, bool nonzero = false) {
    if constexpr (std::is_same_v<K, Rational>) {
        std::uniform_int_distribution<long> num(-9, 9);
        std::uniform_int_distribution<unsigned long> den(1, 3);
        K v = ctx->scalar(num(rng), den(rng));
        while (nonzero && v.is_zero()) v = ctx->scalar(num(rng), den(rng));
        return v;
    } else {
        std::uniform_int_distribution<std::uint64_t> d(nonzero ? 1 : 0, ctx->p - 1);
        return FpElem(d(rng), ctx->p);
    }
}

template <class K>
Poly<K> rand_poly(const CtxPtr<K>& ctx, Rng& rng, int terms = 3, int maxdeg = 2) {
    std::uniform_int_distribution<int> deg(0, maxdeg);
    Poly<K> p(ctx);
    for (int t = 0; t < terms; ++t) {
        Exp e(ctx->nvars(), 0);
        for (std::size_t i = 0; i < ctx->nvars(); ++i) e[i] = static_cast<std::uint32_t>(deg(rng));
        p += Poly<K>::monomial(ctx, e, rand_scalar(ctx, rng));
    }
    return p;
}

// Constant-coordinate Q' point: sample z, x (x_1 nonzero), y_2..y_n and
// solve y_1 = (1 - z^2 - sum_{i>=2} x_i y_i) / x_1.
template <class K>
QuadricPoint<K> rand_qprime_const(const CtxPtr<K>& ctx, std::size_t n, Rng& rng) {
    K z = rand_scalar(ctx, rng);
    std::vector<K> x(n), y(n, ctx->zero());
    x[0] = rand_scalar(ctx, rng, /*nonzero=*/true);
    for (std::size_t i = 1; i < n; ++i) {
        x[i] = rand_scalar(ctx, rng);
        y[i] = rand_scalar(ctx, rng);
    }
    K acc = ctx->one() - z * z;
    for (std::size_t i = 1; i < n; ++i) acc = acc - x[i] * y[i];
    y[0] = acc * x[0].inv();
    std::vector<Poly<K>> f, g;
    for (std::size_t i = 0; i < n; ++i) {
        f.push_back(Poly<K>::constant(ctx, x[i]));
        g.push_back(Poly<K>::constant(ctx, y[i]));
    }
    return check_point(QuadricVariant::Qprime, n, Poly<K>::constant(ctx, z), std::move(f),
                       std::move(g));
}

// Polynomial-coordinate Q point: f_1 = 1 makes the last g solvable, so all
// other coordinates may be arbitrary.
template <class K>
QuadricPoint<K> rand_q_poly(const CtxPtr<K>& ctx, std::size_t n, Rng& rng, int terms = 2,
                            int maxdeg = 1) {
    Poly<K> s = rand_poly(ctx, rng, terms, maxdeg);
    std::vector<Poly<K>> f{Poly<K>::constant(ctx, 1)}, g{Poly<K>::zero(ctx)};
    for (std::size_t i = 1; i < n; ++i) {
        f.push_back(rand_poly(ctx, rng, terms, maxdeg));
        g.push_back(rand_poly(ctx, rng, terms, maxdeg));
    }
    Poly<K> acc = s * (Poly<K>::constant(ctx, 1) - s);
    for (std::size_t i = 1; i < n; ++i) acc -= f[i] * g[i];
    g[0] = acc;
    return check_point(QuadricVariant::Q, n, std::move(s), std::move(f), std::move(g));
}

} // namespace hoc
