#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hoc/homotopy.hpp"
#include "hoc/orthogonal.hpp"
#include "hoc/quadric.hpp"
#include "hoc/random.hpp"

namespace hoc {

// The i<=j pairwise products generating I^2, in the fixed enumeration every
// certificate indexes into.
template <class K>
std::vector<Poly<K>> square_gens(const std::vector<Poly<K>>& gens) {
    std::vector<Poly<K>> q;
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i; j < gens.size(); ++j) q.push_back(gens[i] * gens[j]);
    return q;
}

// Certificate that one ideal generator lies in (f) + I^2.
template <class K>
struct OrientationGenCert {
    std::vector<Poly<K>> f_cofs;  // over the row
    std::vector<Poly<K>> sq_cofs; // over square_gens(ideal gens)
};

// A local orientation (I, omega) represented by a row f_1..f_n with
// certificates that f generates I modulo I^2 and that each f_i lies in I.
template <class K>
struct LocalOrientation {
    Ideal<K> ideal;
    std::vector<Poly<K>> row;
    std::vector<OrientationGenCert<K>> gen_certs; // aligned with ideal.gens()
    std::vector<MembershipCert<K>> row_certs;     // row[i] in I

    std::size_t n() const { return row.size(); }
    const CtxPtr<K>& ctx() const { return ideal.ctx(); }
};

template <class K>
LocalOrientation<K> validate_orientation(const Ideal<K>& I, const std::vector<Poly<K>>& row) {
    if (row.size() < 2) fail(errc::bad_input, "orientations need n >= 2");
    auto ctx = I.ctx();
    std::vector<Poly<K>> sq = square_gens(I.gens());
    std::vector<Poly<K>> mixed = row;
    for (const auto& q : sq) mixed.push_back(q);
    Ideal<K> S(mixed, I.config());

    LocalOrientation<K> o{I, row, {}, {}};
    for (const auto& h : I.gens()) {
        auto red = reduce_with_trace(h, S);
        if (!red.normal_form.is_zero())
            fail(errc::not_surjective_mod_square,
                 "generator " + print_poly(h) + " is not in (row) + I^2; normal form " +
                     print_poly(red.normal_form));
        OrientationGenCert<K> c;
        c.f_cofs.assign(red.cofactors.begin(), red.cofactors.begin() + row.size());
        c.sq_cofs.assign(red.cofactors.begin() + row.size(), red.cofactors.end());
        o.gen_certs.push_back(std::move(c));
    }
    for (const auto& f : row) {
        auto m = ideal_member(f, I);
        if (!m.member())
            fail(errc::not_surjective_mod_square,
                 "row entry " + print_poly(f) + " is not in the ideal");
        o.row_certs.push_back(std::move(*m.cert));
    }
    return o;
}

// eta(v) = (I(v), row f), with the validity certificate computed, not assumed.
template <class K>
LocalOrientation<K> eta(const QuadricPoint<K>& v, GBConfig cfg = {}) {
    try {
        return validate_orientation(ideal_I(v, cfg), v.f);
    } catch (const Error& e) {
        fail(errc::orientation_invalid, std::string("eta certificate failed: ") + e.what());
    }
}

namespace detail {

template <class K>
PolyMat<K> adjugate(const PolyMat<K>& m) {
    std::size_t n = m.dim();
    auto ctx = m.at(0, 0).ctx();
    PolyMat<K> adj(n, Poly<K>::zero(ctx));
    if (n == 1) {
        adj.at(0, 0) = Poly<K>::constant(ctx, 1);
        return adj;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            PolyMat<K> minor(n - 1, Poly<K>::zero(ctx));
            for (std::size_t r = 0, rr = 0; r < n; ++r) {
                if (r == i) continue;
                for (std::size_t c = 0, cc = 0; c < n; ++c) {
                    if (c == j) continue;
                    minor.at(rr, cc) = m.at(r, c);
                    ++cc;
                }
                ++rr;
            }
            Poly<K> d = det(minor);
            adj.at(j, i) = ((i + j) % 2 == 0) ? d : -d;
        }
    return adj;
}

} // namespace detail

// Nakayama witness: s in I with (1-s) I inside (f), plus the derived point.
template <class K>
struct LiftWitness {
    LocalOrientation<K> orientation;
    Poly<K> s;
    std::vector<Poly<K>> g;
    QuadricPoint<K> point;                     // (s; row; g) on Q
    std::vector<std::vector<Poly<K>>> shrink;  // (1-s) h_i = sum_j shrink[i][j] row[j]
    std::vector<Poly<K>> s_cofs;               // s = sum s_cofs[i] h_i
};

// The determinant trick. Writing h_i = sum c_ij f_j + d_i with d_i in I^2 and
// regrouping d_i = sum a_ij h_j with a_ij in I gives (Id - a) h = c f; the
// adjugate turns that into det(Id - a) h_i in (f), and s = 1 - det(Id - a).
template <class K>
LiftWitness<K> lift_orientation(const LocalOrientation<K>& o) {
    auto ctx = o.ctx();
    const auto& gens = o.ideal.gens();
    const std::size_t m = gens.size();
    const std::size_t n = o.row.size();
    if (m > 8) fail(errc::budget_exceeded, "lift supports at most 8 ideal generators");

    // a[i][j] collects the d_i = sum e_il q_l products regrouped on the first
    // factor of each q_l = h_p h_r (p <= r)
    PolyMat<K> a(m, Poly<K>::zero(ctx));
    {
        std::size_t l = 0;
        for (std::size_t p = 0; p < m; ++p)
            for (std::size_t r = p; r < m; ++r, ++l)
                for (std::size_t i = 0; i < m; ++i) {
                    const Poly<K>& e = o.gen_certs[i].sq_cofs[l];
                    if (!e.is_zero()) a.at(i, p) += e * gens[r];
                }
    }
    PolyMat<K> b = poly_identity(ctx, m) - a;
    Poly<K> d = det(b);
    Poly<K> s = Poly<K>::constant(ctx, 1) - d;

    // shrink = adj(B) * C with C the f-cofactor matrix: (1-s) h_i = sum shrink[i][j] f_j
    PolyMat<K> adj = detail::adjugate(b);
    std::vector<std::vector<Poly<K>>> shrink(m, std::vector<Poly<K>>(n, Poly<K>::zero(ctx)));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < m; ++k)
                shrink[i][j] += adj.at(i, k) * o.gen_certs[k].f_cofs[j];
    for (std::size_t i = 0; i < m; ++i) {
        Poly<K> acc = Poly<K>::zero(ctx);
        for (std::size_t j = 0; j < n; ++j) acc += shrink[i][j] * o.row[j];
        if (acc != d * gens[i])
            fail(errc::certificate_failure, "adjugate identity failed on generator " +
                                                std::to_string(i));
    }

    auto sred = reduce_with_trace(s, o.ideal);
    if (!sred.normal_form.is_zero())
        fail(errc::certificate_failure, "Nakayama witness is not in the ideal");

    // g_j = sum_i s_cofs_i shrink[i][j], so sum f_j g_j = (1-s) s exactly
    std::vector<Poly<K>> g(n, Poly<K>::zero(ctx));
    for (std::size_t i = 0; i < m; ++i)
        if (!sred.cofactors[i].is_zero())
            for (std::size_t j = 0; j < n; ++j) g[j] += sred.cofactors[i] * shrink[i][j];

    auto point = check_point(QuadricVariant::Q, n, s, o.row, g);
    if (!ideals_equal(ideal_I(point, o.ideal.config()), o.ideal))
        fail(errc::certificate_failure, "I(point) differs from the oriented ideal");
    return LiftWitness<K>{o, std::move(s), std::move(g), std::move(point), std::move(shrink),
                          std::move(sred.cofactors)};
}

// eta(gamma(point)): the involution at orientation level (J(v), same row).
template <class K>
LocalOrientation<K> orientation_gamma(const LiftWitness<K>& w) {
    auto gv = gamma(w.point);
    try {
        return validate_orientation(ideal_I(gv, w.orientation.ideal.config()), gv.f);
    } catch (const Error& e) {
        fail(errc::orientation_invalid, std::string("gamma orientation failed: ") + e.what());
    }
}

// Orientation of a product ideal restricting to both factors: rows are CRT
// lifts modulo the squared ideals, certified congruent on each side.
template <class K>
struct SumRep {
    std::string kind; // "star" | "pseudo-sum"
    LocalOrientation<K> left, right;
    ComaxCert<K> comax;    // (K, I)
    ComaxCert<K> comax_sq; // (K^2, I^2), from the cubed witness
    LocalOrientation<K> result;
    std::vector<MembershipCert<K>> cong_left;  // result.row[i] - left.row[i] in K^2
    std::vector<MembershipCert<K>> cong_right; // result.row[i] - right.row[i] in I^2
};

template <class K>
SumRep<K> star_product(const LocalOrientation<K>& a, const LocalOrientation<K>& b,
                       const std::string& kind = "star") {
    if (a.n() != b.n()) fail(errc::bad_input, "orientations have different n");
    auto w = comaximal_witness(a.ideal, b.ideal);
    if (!w.comaximal()) fail(errc::not_comaximal, "star product needs comaximal ideals");
    auto sq = comax_square(*w.cert);

    Ideal<K> ksq = ideal_square(a.ideal);
    Ideal<K> isq = ideal_square(b.ideal);
    Ideal<K> prod = ideal_combine(CombineKind::product, a.ideal, b.ideal);

    std::vector<Poly<K>> row;
    for (std::size_t i = 0; i < a.n(); ++i) row.push_back(crt_lift(sq, a.row[i], b.row[i]));

    std::vector<MembershipCert<K>> cl, cr;
    for (std::size_t i = 0; i < a.n(); ++i) {
        auto ml = ideal_member(row[i] - a.row[i], ksq);
        auto mr = ideal_member(row[i] - b.row[i], isq);
        if (!ml.member() || !mr.member())
            fail(errc::certificate_failure, "CRT congruence failed on row " + std::to_string(i));
        cl.push_back(std::move(*ml.cert));
        cr.push_back(std::move(*mr.cert));
    }

    LocalOrientation<K> result = [&] {
        try {
            return validate_orientation(prod, row);
        } catch (const Error& e) {
            fail(errc::certificate_failure,
                 std::string("product orientation failed to validate: ") + e.what());
        }
    }();
    return SumRep<K>{kind, a, b, std::move(*w.cert), std::move(sq), std::move(result),
                     std::move(cl), std::move(cr)};
}

// Representative-level addition on pi_0 classes.
template <class K>
SumRep<K> pseudo_sum(const LocalOrientation<K>& a, const LocalOrientation<K>& b) {
    return star_product(a, b, "pseudo-sum");
}

// Moving: a lift whose J-ideal is comaximal with K and of height >= n. The
// candidate rows a_i + lambda_i t^2 are searched with a seeded generator,
// zero lambdas first, coefficient pools growing with the attempt count.
template <class K>
struct MoveResult {
    LocalOrientation<K> input;
    Poly<K> nakayama_t; // the base lift's witness; rows move by multiples of t^2
    LiftWitness<K> witness;
    std::vector<Poly<K>> lambdas;
    std::uint64_t seed = 0;
    ComaxCert<K> comax_jk;
    Height height_j;
};

template <class K>
MoveResult<K> move_orientation(const LocalOrientation<K>& o, const Ideal<K>& obstacle,
                               std::uint64_t seed, std::size_t budget = 64) {
    auto ctx = o.ctx();
    const std::size_t n = o.n();
    LiftWitness<K> base = lift_orientation(o);
    Poly<K> tsq = base.s * base.s;
    Rng rng(seed);

    for (std::size_t attempt = 0; attempt < budget; ++attempt) {
        std::vector<Poly<K>> lambdas(n, Poly<K>::zero(ctx));
        if (attempt > 0) {
            int spread = 1 + static_cast<int>(attempt / 8);
            int maxdeg = attempt < 16 ? 0 : 1;
            std::uniform_int_distribution<int> coef(-spread, spread);
            for (auto& l : lambdas) {
                l = Poly<K>::constant(ctx, coef(rng));
                if (maxdeg > 0)
                    for (std::size_t v = 0; v < ctx->nvars(); ++v)
                        l += Poly<K>::variable(ctx, v).scaled(ctx->scalar(coef(rng)));
            }
        }
        LiftWitness<K> w = [&] {
            if (attempt == 0) return base;
            std::vector<Poly<K>> row;
            for (std::size_t i = 0; i < n; ++i) row.push_back(o.row[i] + lambdas[i] * tsq);
            return lift_orientation(validate_orientation(o.ideal, row));
        }();
        Ideal<K> J = ideal_J(w.point, o.ideal.config());
        auto cm = comaximal_witness(J, obstacle);
        if (!cm.comaximal()) continue;
        Height hj = height(J);
        if (!hj.at_least(n)) continue;
        return MoveResult<K>{o,       base.s, std::move(w), std::move(lambdas),
                             seed,    std::move(*cm.cert), hj};
    }
    fail(errc::search_budget_exhausted,
         "no moved lift found within " + std::to_string(budget) + " candidates");
}

// (K, omega_K) - (I, omega_I) at representative level: move the subtrahend
// off K, flip it with the involution, and star with the minuend.
template <class K>
struct DiffResult {
    MoveResult<K> move;
    LocalOrientation<K> gamma_orientation;
    SumRep<K> sum;
    std::uint64_t seed = 0;
};

template <class K>
DiffResult<K> pseudo_difference(const LocalOrientation<K>& a, const LocalOrientation<K>& b,
                                std::uint64_t seed, std::size_t budget = 64) {
    if (!height(a.ideal).at_least(a.n()))
        fail(errc::precondition, "pseudo-difference needs height(K) >= n");
    MoveResult<K> mv = move_orientation(b, a.ideal, seed, budget);
    LocalOrientation<K> go = orientation_gamma(mv.witness);
    SumRep<K> sum = star_product(a, go, "pseudo-sum");
    return DiffResult<K>{std::move(mv), std::move(go), std::move(sum), seed};
}

// Homotopy combination: deterministic algebra of the adjoint-determinant
// step. phi'_i = phi_i + lambda_i Y^2 T(1-T); mu = sum lambda_i gamma_i;
// 1 - Y' = det of the Nakayama matrix, so Y' = Y - Y T(1-T) mu; gamma' comes
// from cofactor-tracked reduction of Y'(1-Y') against (phi').
template <class K>
struct EndpointCert {
    QuadricPoint<K> h_at;               // the lifted homotopy at T = t
    SumRep<K> star;                     // (K_t, phi(t)) * (J, w)
    std::vector<MembershipCert<K>> row_cong; // h_at.f[i] - star row congruent mod (K_t J)^2
};

template <class K>
struct CombineResult {
    Homotopy<K> input;
    LocalOrientation<K> wj;
    std::vector<Poly<K>> lambdas;
    Homotopy<K> h_prime;
    ComaxCert<K> path_comax; // J(H') + J A[T] = A[T]
    SumRep<K> omega;         // (J(H'), phi') * (J[T], w)
    LiftWitness<K> lift;     // the combined homotopy
    EndpointCert<K> at0, at1;
};

template <class K>
CombineResult<K> combine_homotopy(const Homotopy<K>& H, const LocalOrientation<K>& wj,
                                  const std::vector<Poly<K>>& lambdas) {
    auto ctx = H.ctx();
    const std::size_t n = H.point.n;
    if (H.point.variant != QuadricVariant::Q) fail(errc::bad_input, "combine expects a Q homotopy");
    if (wj.n() != n) fail(errc::bad_input, "orientation n mismatch");
    if (lambdas.size() != n) fail(errc::bad_input, "need one lambda per row entry");
    std::size_t tv = H.tvar();
    for (const auto& jg : wj.ideal.gens())
        for (const auto& [e, c] : jg.terms())
            if (e[tv] > 0) fail(errc::bad_input, "J must not involve the homotopy variable");

    auto one = Poly<K>::constant(ctx, 1);
    auto t = Poly<K>::variable(ctx, tv);
    Poly<K> tt = t * (one - t);
    Poly<K> Z = H.point.s;
    Poly<K> Y = one - Z;

    // endpoint comaximality: K_0 + J = K_1 + J = A
    for (long tval : {0L, 1L}) {
        auto Kt = ideal_I(h_eval(H, tval), wj.ideal.config());
        if (!comaximal_witness(Kt, wj.ideal).comaximal())
            fail(errc::precondition, "I(H(" + std::to_string(tval) + ")) is not comaximal with J");
    }

    std::vector<Poly<K>> phi_p;
    for (std::size_t i = 0; i < n; ++i) phi_p.push_back(H.point.f[i] + lambdas[i] * Y * Y * tt);
    Poly<K> mu = Poly<K>::zero(ctx);
    for (std::size_t i = 0; i < n; ++i) mu += lambdas[i] * H.point.g[i];

    // Nakayama matrix: only the last column is nonzero; its determinant route
    PolyMat<K> nak(n + 1, Poly<K>::zero(ctx));
    for (std::size_t i = 0; i < n; ++i) nak.at(i, n) = -(lambdas[i] * Y * tt);
    nak.at(n, n) = Y - Y * tt * mu;
    Poly<K> ddet = det(poly_identity(ctx, n + 1) - nak);
    Poly<K> Y_p = one - ddet; // = Y - Y T(1-T) mu

    // gamma' by cofactor-tracked reduction; the containment is forced, so a
    // nonzero normal form is an engine failure, reported loudly
    Ideal<K> phi_ideal(phi_p, wj.ideal.config());
    auto gred = reduce_with_trace(Y_p * (one - Y_p), phi_ideal);
    if (!gred.normal_form.is_zero())
        fail(errc::certificate_failure, "gamma' containment certificate could not be produced");
    auto h_prime = make_homotopy(check_point(QuadricVariant::Q, n, Y_p, phi_p, gred.cofactors));

    // claim: J(H') + J A[T] = A[T]
    Ideal<K> jp = ideal_J(h_prime.point, wj.ideal.config());
    auto path = comaximal_witness(jp, wj.ideal);
    if (!path.comaximal())
        fail(errc::comax_fails_on_path,
             "J(H'(T)) + J A[T] is not the unit ideal for these lambdas");

    auto kp_orient = validate_orientation(jp, phi_p);
    SumRep<K> omega = star_product(kp_orient, wj);
    LiftWitness<K> lifted = lift_orientation(omega.result);
    Homotopy<K> h_cal = make_homotopy(lifted.point);

    auto endpoint = [&](long tval) {
        auto h_at = h_eval(h_cal, tval);
        auto Ht = h_eval(H, tval);
        SumRep<K> st = star_product(eta(Ht, wj.ideal.config()), wj);
        if (!ideals_equal(ideal_I(h_at, wj.ideal.config()), st.result.ideal))
            fail(errc::certificate_failure,
                 "endpoint ideal differs from the star product at T = " + std::to_string(tval));
        Ideal<K> modsq = ideal_square(st.result.ideal);
        std::vector<MembershipCert<K>> cong;
        for (std::size_t i = 0; i < n; ++i) {
            auto m = ideal_member(h_at.f[i] - st.result.row[i], modsq);
            if (!m.member())
                fail(errc::certificate_failure,
                     "endpoint row is not congruent to the star product at T = " +
                         std::to_string(tval));
            cong.push_back(std::move(*m.cert));
        }
        return EndpointCert<K>{std::move(h_at), std::move(st), std::move(cong)};
    };
    auto e0 = endpoint(0);
    auto e1 = endpoint(1);

    return CombineResult<K>{H,
                            wj,
                            lambdas,
                            std::move(h_prime),
                            std::move(*path.cert),
                            std::move(omega),
                            std::move(lifted),
                            std::move(e0),
                            std::move(e1)};
}

} // namespace hoc
