#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hoc/fraction.hpp"
#include "hoc/orthogonal.hpp"
#include "hoc/quadric.hpp"

namespace hoc {

// Word of elementary orthogonal generators carrying a Q' point to the base
// point u_0 = (1; 0..0; 0..0), annotated with the proof step that produced
// each generator. Over a localized context the parameters are local
// fractions; over a field they stay plain (constant) polynomials.
template <class K>
struct ReductionCert {
    QuadricPoint<K> input;
    EOWord<Fraction<K>> word;
    std::vector<std::string> steps; // aligned with word.gens
    std::optional<std::vector<K>> local_point;

    bool all_poly_lambdas() const {
        for (const auto& g : word.gens)
            if (!g.lambda.is_poly()) return false;
        return true;
    }

    EOWord<Poly<K>> poly_word() const {
        EOWord<Poly<K>> w;
        for (const auto& g : word.gens) {
            if (!g.lambda.is_poly())
                fail(errc::bad_input, "word has fraction parameters; no polynomial form");
            w.gens.push_back(EOGen<Poly<K>>{g.family, g.i, g.j, g.lambda.num()});
        }
        return w;
    }
};

namespace detail {

template <class K>
std::vector<Fraction<K>> fraction_coords(const QuadricPoint<K>& u) {
    std::vector<Fraction<K>> c;
    for (const auto& p : u.coords()) c.push_back(Fraction<K>(p));
    return c;
}

template <class K>
bool fraction_coords_equal_u0(const std::vector<Fraction<K>>& c) {
    auto ctx = c[0].ctx();
    if (c[0] != Fraction<K>::one(ctx)) return false;
    for (std::size_t k = 1; k < c.size(); ++k)
        if (!c[k].is_zero()) return false;
    return true;
}

} // namespace detail

// Constructive reduction over a localized polynomial context, following the
// proof steps: (1) make x_1 a unit, case analysis on which of y_j (j>=2),
// y_1, z is a unit; (2) eps_{0,1}(x_1^{-1}(1-z)) forces z = 1; (3) clear
// x_2..x_n; (4) y_1 = 0 is forced by the equation, clear y_2..y_n; (5)
// eps_{0,n+1}(x_1/2). Word length is at most 2n+2.
template <class K>
ReductionCert<K> reduce_to_base(const QuadricPoint<K>& u, const LocalCtx<K>& lctx) {
    if (u.variant != QuadricVariant::Qprime) fail(errc::bad_input, "reduction expects a Q' point");
    if (u.ctx()->vars != lctx.base->vars)
        fail(errc::not_local, "point context does not match the localization");
    if (!quadric_residual(u).is_zero())
        fail(errc::not_on_quadric, "input does not satisfy the Q' equation");

    const std::size_t n = u.n;
    auto ctx = u.ctx();
    auto c = detail::fraction_coords(u);

    ReductionCert<K> cert{u, {}, {}, lctx.point};
    if (detail::fraction_coords_equal_u0(c)) return cert; // already the base point

    auto is_unit = [&](const Fraction<K>& v) { return lctx.is_unit(v.num()); };
    auto emit = [&](int fam, std::size_t i, std::size_t j, const Fraction<K>& lam,
                    const std::string& step) {
        if (lam.is_zero()) return; // identity generator, not recorded
        apply_gen_action(fam, i, j, lam, c, n);
        cert.word.gens.push_back(EOGen<Fraction<K>>{fam, i, j, lam});
        cert.steps.push_back(step);
    };
    auto frac1 = Fraction<K>::one(ctx);

    // Step 1: make x_1 a unit.
    if (!is_unit(c[1])) {
        bool done = false;
        for (std::size_t j = 2; j <= n && !done; ++j) {
            if (is_unit(c[n + j])) { // y_j unit: x_1 += y_j
                emit(4, 1, n + j, frac1, "step1-case1");
                done = true;
            }
        }
        if (!done && is_unit(c[n + 1])) { // y_1 unit: x_1 += x_2, y_2 -= y_1
            emit(3, 1, 2, frac1, "step1-case2");
            if (!is_unit(c[1])) emit(4, 1, n + 2, frac1, "step1-case2");
            done = true;
        }
        if (!done && is_unit(c[0])) { // z unit: x_1 -= 2z + y_1
            emit(2, 0, n + 1, frac1, "step1-case3");
            done = true;
        }
        if (!done || !is_unit(c[1]))
            fail(errc::internal_unit_failure, "no unit coordinate where the proof guarantees one");
    }

    Fraction<K> x1inv = c[1].inv_unchecked();

    // Step 2: z = 1 via eps_{0,1}(x_1^{-1}(1-z)).
    emit(1, 0, 1, x1inv * (frac1 - c[0]), "step2");
    if (c[0] != frac1) fail(errc::certificate_failure, "step 2 did not normalize z to 1");

    // Step 3: clear x_2..x_n via eps_{i,1}(-x_1^{-1} x_i).
    x1inv = c[1].inv_unchecked();
    for (std::size_t i = 2; i <= n; ++i) emit(3, i, 1, -(x1inv * c[i]), "step3");

    // Step 4: the equation forces y_1 = 0; clear y_2..y_n via the normalized
    // family-5 generators eps_{n+1,i}(x_1^{-1} y_i).
    if (!c[n + 1].is_zero())
        fail(errc::certificate_failure, "y_1 must vanish after step 3");
    for (std::size_t i = 2; i <= n; ++i) emit(5, n + 1, i, x1inv * c[n + i], "step4");

    // Step 5: eps_{0,n+1}(x_1/2) sends (1; x_1, 0..; 0..) to u_0.
    emit(2, 0, n + 1, c[1] * Fraction<K>(Poly<K>::constant(ctx, ctx->half())), "step5");

    if (!detail::fraction_coords_equal_u0(c))
        fail(errc::certificate_failure, "reduction did not reach the base point");
    if (cert.word.size() > 2 * n + 2)
        fail(errc::certificate_failure, "word exceeds the 2n+2 bound");
    return cert;
}

// Field mode: every coordinate must be a constant; units are the nonzero
// constants. Realized as localization at the origin.
template <class K>
ReductionCert<K> reduce_to_base(const QuadricPoint<K>& u) {
    for (const auto& p : u.coords())
        if (!p.is_constant())
            fail(errc::not_local, "coordinate " + print_poly(p) + " is not a field constant");
    LocalCtx<K> origin(u.ctx(), std::vector<K>(u.ctx()->nvars(), u.ctx()->zero()));
    auto cert = reduce_to_base(u, origin);
    cert.local_point.reset();
    return cert;
}

// Replay a reduction word on fraction coordinates; the checker's view.
template <class K>
QuadricPoint<K> apply_reduction_word(const EOWord<Fraction<K>>& w, const QuadricPoint<K>& u) {
    auto c = detail::fraction_coords(u);
    for (const auto& g : w.gens) apply_gen_action(g.family, g.i, g.j, g.lambda, c, u.n);
    // a reduction word keeps denominators trivial only in field mode; callers
    // needing the exact fraction endpoint use replay_fractions instead
    std::vector<Poly<K>> coords;
    for (const auto& fr : c) {
        if (!fr.is_poly()) fail(errc::bad_input, "endpoint has fraction coordinates");
        coords.push_back(fr.num());
    }
    return check_point(QuadricVariant::Qprime, u.n, coords);
}

template <class K>
std::vector<Fraction<K>> replay_fractions(const EOWord<Fraction<K>>& w, const QuadricPoint<K>& u) {
    auto c = detail::fraction_coords(u);
    for (const auto& g : w.gens) apply_gen_action(g.family, g.i, g.j, g.lambda, c, u.n);
    return c;
}

// Transitivity over a local context: carry u to v by composing u -> u_0 with
// the formal inverse of v -> u_0.
template <class K>
ReductionCert<K> transit_word(const QuadricPoint<K>& u, const QuadricPoint<K>& v,
                              const LocalCtx<K>& lctx) {
    auto cu = reduce_to_base(u, lctx);
    auto cv = reduce_to_base(v, lctx);
    ReductionCert<K> out{u, word_concat(cu.word, word_inverse(cv.word)), {}, lctx.point};
    out.steps = cu.steps;
    for (auto it = cv.steps.rbegin(); it != cv.steps.rend(); ++it)
        out.steps.push_back(*it + " (inverted)");
    return out;
}

} // namespace hoc
