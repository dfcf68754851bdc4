#pragma once

#include <string>

#include "hoc/serialize.hpp"

namespace hoc {

// Independent verification: every claim is recomputed from the serialized
// certificate alone, with plain ring arithmetic for recombinations and fresh
// GB reductions for ideal-theoretic claims. Nothing cached by the
// constructors is trusted.

struct CheckOutcome {
    bool ok = true;
    std::string detail = "ok";
};

namespace check_impl {

class Checker {
    CheckOutcome out_;

public:
    bool require(bool cond, const std::string& what) {
        if (out_.ok && !cond) out_ = {false, what};
        return cond;
    }
    bool ok() const { return out_.ok; }
    const CheckOutcome& outcome() const { return out_; }
};

template <class K>
Poly<K> combine_rows(const std::vector<Poly<K>>& cofs, const std::vector<Poly<K>>& gens,
                     const CtxPtr<K>& ctx) {
    Poly<K> acc = Poly<K>::zero(ctx);
    for (std::size_t i = 0; i < std::min(cofs.size(), gens.size()); ++i) acc += cofs[i] * gens[i];
    return acc;
}

template <class K>
void check_membership(Checker& c, const MembershipCert<K>& m, const std::vector<Poly<K>>& gens,
                      const CtxPtr<K>& ctx, const std::string& where) {
    c.require(m.cofactors.size() == gens.size(), where + ": cofactor arity");
    c.require(combine_rows(m.cofactors, gens, ctx) == m.element,
              where + ": cofactors do not recombine");
}

template <class K>
void check_comax(Checker& c, const ComaxCert<K>& w, const CtxPtr<K>& ctx,
                 const std::string& where) {
    c.require(combine_rows(w.cof_a, w.gens_i, ctx) == w.a, where + ": a does not recombine");
    c.require(combine_rows(w.cof_b, w.gens_j, ctx) == w.b, where + ": b does not recombine");
    c.require(w.a + w.b == Poly<K>::constant(ctx, 1), where + ": a + b differs from 1");
}

template <class K>
void check_orientation(Checker& c, const LocalOrientation<K>& o, const CtxPtr<K>& ctx,
                       const std::string& where) {
    if (!c.require(o.row.size() >= 2, where + ": orientation needs n >= 2")) return;
    auto sq = square_gens(o.ideal.gens());
    if (!c.require(o.gen_certs.size() == o.ideal.gens().size(), where + ": gen cert arity")) return;
    for (std::size_t i = 0; i < o.ideal.gens().size(); ++i) {
        Poly<K> acc = combine_rows(o.gen_certs[i].f_cofs, o.row, ctx) +
                      combine_rows(o.gen_certs[i].sq_cofs, sq, ctx);
        c.require(acc == o.ideal.gens()[i],
                  where + ": generator " + std::to_string(i) + " fails (row) + I^2");
    }
    if (!c.require(o.row_certs.size() == o.row.size(), where + ": row cert arity")) return;
    for (std::size_t i = 0; i < o.row.size(); ++i) {
        c.require(o.row_certs[i].element == o.row[i], where + ": row cert element mismatch");
        check_membership(c, o.row_certs[i], o.ideal.gens(), ctx, where + " row " + std::to_string(i));
    }
}

template <class K>
void check_lift(Checker& c, const LiftWitness<K>& w, const CtxPtr<K>& ctx,
                const std::string& where) {
    check_orientation(c, w.orientation, ctx, where + " orientation");
    c.require(w.point.s == w.s && w.point.f == w.orientation.row && w.point.g == w.g,
              where + ": point fields diverge from the witness");
    c.require(quadric_residual(w.point).is_zero(), where + ": point is off the quadric");
    auto one_minus_s = Poly<K>::constant(ctx, 1) - w.s;
    const auto& gens = w.orientation.ideal.gens();
    if (!c.require(w.shrink.size() == gens.size(), where + ": shrink arity")) return;
    for (std::size_t i = 0; i < gens.size(); ++i)
        c.require(combine_rows(w.shrink[i], w.orientation.row, ctx) == one_minus_s * gens[i],
                  where + ": (1-s) I in (row) fails at generator " + std::to_string(i));
    c.require(combine_rows(w.s_cofs, gens, ctx) == w.s, where + ": s is not certified in I");
    // eta match: I(point) equals the oriented ideal, fresh two-way reduction
    std::vector<Poly<K>> ipoint = w.point.f;
    ipoint.push_back(w.point.s);
    c.require(ideals_equal(Ideal<K>(ipoint), Ideal<K>(gens)), where + ": I(point) differs from I");
}

template <class K>
void check_sum(Checker& c, const SumRep<K>& s, const CtxPtr<K>& ctx, const std::string& where) {
    check_orientation(c, s.left, ctx, where + " left");
    check_orientation(c, s.right, ctx, where + " right");
    c.require(s.comax.gens_i == s.left.ideal.gens() && s.comax.gens_j == s.right.ideal.gens(),
              where + ": comax certificate is over different ideals");
    check_comax(c, s.comax, ctx, where + " comax");
    c.require(s.comax_sq.gens_i == square_gens(s.comax.gens_i) &&
                  s.comax_sq.gens_j == square_gens(s.comax.gens_j),
              where + ": squared comax gens are not the pair products");
    check_comax(c, s.comax_sq, ctx, where + " squared comax");
    auto prod = ideal_combine(CombineKind::product, s.left.ideal, s.right.ideal);
    c.require(s.result.ideal.gens() == prod.gens(), where + ": result ideal is not the product");
    check_orientation(c, s.result, ctx, where + " result");
    auto ksq = ideal_square(s.left.ideal).gens();
    auto isq = ideal_square(s.right.ideal).gens();
    if (!c.require(s.cong_left.size() == s.result.row.size() &&
                       s.cong_right.size() == s.result.row.size(),
                   where + ": congruence arity"))
        return;
    for (std::size_t i = 0; i < s.result.row.size(); ++i) {
        c.require(s.cong_left[i].element == s.result.row[i] - s.left.row[i],
                  where + ": left congruence element mismatch");
        check_membership(c, s.cong_left[i], ksq, ctx, where + " left congruence");
        c.require(s.cong_right[i].element == s.result.row[i] - s.right.row[i],
                  where + ": right congruence element mismatch");
        check_membership(c, s.cong_right[i], isq, ctx, where + " right congruence");
    }
}

template <class K>
void check_reduction(Checker& c, const ReductionCert<K>& cert, const CtxPtr<K>& ctx) {
    c.require(cert.input.variant == QuadricVariant::Qprime, "input is not a Q' point");
    c.require(quadric_residual(cert.input).is_zero(), "input is off the quadric");
    c.require(cert.word.size() <= 2 * cert.input.n + 2, "word exceeds the 2n+2 bound");
    if (cert.local_point)
        c.require(cert.local_point->size() == ctx->nvars(), "local point arity");
    if (!c.ok()) return;
    LocalCtx<K> lctx(ctx, cert.local_point ? *cert.local_point
                                           : std::vector<K>(ctx->nvars(), ctx->zero()));
    for (const auto& g : cert.word.gens) {
        try {
            check_gen_indices(g.family, g.i, g.j, cert.input.n);
        } catch (const Error& e) {
            c.require(false, e.what());
            return;
        }
        c.require(lctx.is_unit(g.lambda.den()), "generator denominator is not a local unit");
    }
    if (!c.ok()) return;
    auto coords = replay_fractions(cert.word, cert.input);
    c.require(coords[0] == Fraction<K>::one(ctx), "word does not send z to 1");
    for (std::size_t k = 1; k < coords.size(); ++k)
        c.require(coords[k].is_zero(), "word leaves coordinate " + std::to_string(k) + " nonzero");
}

template <class K>
void check_chain_cert(Checker& c, const json& data, const CtxPtr<K>& ctx) {
    auto chain = chain_from_json<K>(data, ctx);
    auto from = point_from_json<K>(data.at("from"), ctx, false);
    auto to = point_from_json<K>(data.at("to"), ctx, false);
    auto r = verify_chain(chain, from, to);
    c.require(r.ok(), r.ok() ? "ok" : r.issue->what);
}

template <class K>
void check_translation(Checker& c, const json& data, const CtxPtr<K>& ctx) {
    auto word = poly_word_from_json<K>(data.at("word"), ctx);
    auto start = point_from_json<K>(data.at("start"), ctx, false);
    auto hpoint = point_from_json<K>(data.at("homotopy"), ctx, false);
    if (!c.require(ctx->homotopy_var.has_value(), "context lacks a homotopy variable")) return;
    c.require(quadric_residual(start).is_zero(), "start point is off the quadric");
    c.require(quadric_residual(hpoint).is_zero(), "homotopy is off the quadric");
    auto at0 = word_at(word, *ctx->homotopy_var, Poly<K>::zero(ctx));
    c.require(word_to_matrix(at0, start.n, ctx) == poly_identity(ctx, 2 * start.n + 1),
              "word is not the identity at T = 0");
    if (!c.ok()) return;
    c.require(act_qprime(word, start) == hpoint, "homotopy differs from the word action");
}

template <class K>
void check_move(Checker& c, const MoveResult<K>& m, const CtxPtr<K>& ctx) {
    check_orientation(c, m.input, ctx, "input");
    check_lift(c, m.witness, ctx, "witness");
    c.require(m.witness.orientation.ideal.gens() == m.input.ideal.gens(),
              "witness is over a different ideal");
    // the moved row differs from the input row by lambda_i t^2 with t in I
    if (c.require(m.lambdas.size() == m.input.row.size(), "lambda arity")) {
        Poly<K> tsq = m.nakayama_t * m.nakayama_t;
        for (std::size_t i = 0; i < m.input.row.size(); ++i)
            c.require(m.witness.orientation.row[i] == m.input.row[i] + m.lambdas[i] * tsq,
                      "row " + std::to_string(i) + " is not input + lambda t^2");
        c.require(ideal_member(m.nakayama_t, Ideal<K>(m.input.ideal.gens())).member(),
                  "modifier t is not in the ideal");
    }
    std::vector<Poly<K>> jgens = m.witness.point.f;
    jgens.push_back(Poly<K>::constant(ctx, 1) - m.witness.point.s);
    c.require(m.comax_jk.gens_i == jgens, "comax certificate is not over J(point)");
    check_comax(c, m.comax_jk, ctx, "J + K");
    Height h = height(Ideal<K>(jgens));
    c.require(h == m.height_j, "height claim differs from recomputation");
    c.require(h.at_least(m.input.row.size()), "height(J) is below n");
}

template <class K>
void check_diff(Checker& c, const DiffResult<K>& d, const CtxPtr<K>& ctx) {
    check_move(c, d.move, ctx);
    std::vector<Poly<K>> jgens = d.move.witness.point.f;
    jgens.push_back(Poly<K>::constant(ctx, 1) - d.move.witness.point.s);
    c.require(d.gamma_orientation.ideal.gens() == jgens,
              "gamma orientation is not over J(witness)");
    c.require(d.gamma_orientation.row == d.move.witness.orientation.row,
              "gamma orientation changed the row");
    check_orientation(c, d.gamma_orientation, ctx, "gamma orientation");
    check_sum(c, d.sum, ctx, "sum");
    c.require(d.sum.right.ideal.gens() == d.gamma_orientation.ideal.gens(),
              "sum right side is not the gamma orientation");
}

template <class K>
void check_combine(Checker& c, const json& data, const CtxPtr<K>& ctx) {
    if (!c.require(ctx->homotopy_var.has_value(), "context lacks a homotopy variable")) return;
    auto input = point_from_json<K>(data.at("input"), ctx, false);
    auto wj = orientation_from_json<K>(data.at("wj"), ctx);
    auto lambdas = polys_from_json<K>(data.at("lambdas"), ctx);
    auto h_prime = point_from_json<K>(data.at("h_prime"), ctx, false);
    auto path = comax_from_json<K>(data.at("path_comax"), ctx);
    auto omega = sum_from_json<K>(data.at("omega"), ctx);
    auto lift = lift_from_json<K>(data.at("lift"), ctx);

    c.require(quadric_residual(input).is_zero(), "input homotopy is off the quadric");
    check_orientation(c, wj, ctx, "wj");
    if (!c.require(lambdas.size() == input.n, "lambda arity")) return;

    auto one = Poly<K>::constant(ctx, 1);
    auto t = Poly<K>::variable(ctx, *ctx->homotopy_var);
    Poly<K> tt = t * (one - t);
    Poly<K> Y = one - input.s;
    Poly<K> mu = Poly<K>::zero(ctx);
    for (std::size_t i = 0; i < input.n; ++i) mu += lambdas[i] * input.g[i];
    for (std::size_t i = 0; i < input.n; ++i)
        c.require(h_prime.f[i] == input.f[i] + lambdas[i] * Y * Y * tt,
                  "phi' row " + std::to_string(i) + " differs from the stated formula");
    c.require(h_prime.s == Y - Y * tt * mu, "Y' differs from the adjoint-determinant value");
    c.require(quadric_residual(h_prime).is_zero(), "H' is off the quadric");

    std::vector<Poly<K>> jp = h_prime.f;
    jp.push_back(one - h_prime.s);
    c.require(path.gens_i == jp, "path comax is not over J(H')");
    c.require(path.gens_j == wj.ideal.gens(), "path comax is not against J");
    check_comax(c, path, ctx, "path");

    c.require(omega.left.ideal.gens() == jp && omega.left.row == h_prime.f,
              "omega left side is not (J(H'), phi')");
    c.require(omega.right.ideal.gens() == wj.ideal.gens() && omega.right.row == wj.row,
              "omega right side is not (J, w)");
    check_sum(c, omega, ctx, "omega");
    check_lift(c, lift, ctx, "lift");
    c.require(lift.orientation.ideal.gens() == omega.result.ideal.gens() &&
                  lift.orientation.row == omega.result.row,
              "lift is not over the omega orientation");

    auto h_cal = Homotopy<K>{lift.point};
    for (long tv : {0L, 1L}) {
        auto e = endpoint_from_json<K>(data.at(tv == 0 ? "at0" : "at1"), ctx);
        std::string where = "endpoint T=" + std::to_string(tv);
        c.require(e.h_at == h_eval(h_cal, tv), where + ": stated point differs from evaluation");
        auto Ht = h_eval(Homotopy<K>{input}, tv);
        std::vector<Poly<K>> kt = Ht.f;
        kt.push_back(Ht.s);
        c.require(e.star.left.ideal.gens() == kt && e.star.left.row == Ht.f,
                  where + ": star left side is not eta(H(t))");
        c.require(e.star.right.ideal.gens() == wj.ideal.gens() && e.star.right.row == wj.row,
                  where + ": star right side is not (J, w)");
        check_sum(c, e.star, ctx, where + " star");
        if (!c.ok()) return;
        std::vector<Poly<K>> ih = e.h_at.f;
        ih.push_back(e.h_at.s);
        c.require(ideals_equal(Ideal<K>(ih), Ideal<K>(e.star.result.ideal.gens())),
                  where + ": eta ideal differs from the star product");
        auto modsq = ideal_square(Ideal<K>(e.star.result.ideal.gens())).gens();
        if (!c.require(e.row_cong.size() == input.n, where + ": congruence arity")) return;
        for (std::size_t i = 0; i < input.n; ++i) {
            c.require(e.row_cong[i].element == e.h_at.f[i] - e.star.result.row[i],
                      where + ": congruence element mismatch");
            check_membership(c, e.row_cong[i], modsq, ctx, where + " congruence");
        }
    }
}

} // namespace check_impl

template <class K>
CheckOutcome verify_certificate_data(const std::string& type, const json& data,
                                     const CtxPtr<K>& ctx) {
    check_impl::Checker c;
    try {
        if (type == "point") {
            auto p = point_from_json<K>(data, ctx, false);
            c.require(quadric_residual(p).is_zero(),
                      "defining equation fails, residual " + print_poly(quadric_residual(p)));
        } else if (type == "gamma") {
            auto in = point_from_json<K>(data.at("input"), ctx, false);
            auto out = point_from_json<K>(data.at("output"), ctx, false);
            c.require(quadric_residual(in).is_zero(), "input is off the quadric");
            c.require(quadric_residual(out).is_zero(), "output is off the quadric");
            c.require(out.s == Poly<K>::constant(ctx, 1) - in.s && out.f == in.f && out.g == in.g,
                      "output is not the involution of the input");
        } else if (type == "membership") {
            auto gens = polys_from_json<K>(data.at("gens"), ctx);
            auto cert = membership_from_json<K>(data, ctx);
            check_impl::check_membership(c, cert, gens, ctx, "membership");
        } else if (type == "comax") {
            check_impl::check_comax(c, comax_from_json<K>(data, ctx), ctx, "comax");
        } else if (type == "reduction") {
            check_impl::check_reduction(c, reduction_from_json<K>(data, ctx), ctx);
        } else if (type == "chain") {
            check_impl::check_chain_cert<K>(c, data, ctx);
        } else if (type == "translation") {
            check_impl::check_translation<K>(c, data, ctx);
        } else if (type == "orientation") {
            check_impl::check_orientation(c, orientation_from_json<K>(data, ctx), ctx, "orientation");
        } else if (type == "lift") {
            check_impl::check_lift(c, lift_from_json<K>(data, ctx), ctx, "lift");
        } else if (type == "sum") {
            check_impl::check_sum(c, sum_from_json<K>(data, ctx), ctx, "sum");
        } else if (type == "move") {
            check_impl::check_move(c, move_from_json<K>(data, ctx), ctx);
        } else if (type == "diff") {
            check_impl::check_diff(c, diff_from_json<K>(data, ctx), ctx);
        } else if (type == "combine") {
            check_impl::check_combine<K>(c, data, ctx);
        } else {
            c.require(false, "unknown certificate type " + type);
        }
    } catch (const Error& e) {
        c.require(false, e.what());
    } catch (const json::exception& e) {
        c.require(false, std::string("malformed certificate: ") + e.what());
    }
    return c.outcome();
}

inline CheckOutcome verify_certificate_json(const json& env) {
    if (!env.contains("type") || !env.contains("ctx") || !env.contains("data"))
        return {false, "certificate envelope needs type, ctx and data"};
    std::string type = env.at("type").get<std::string>();
    try {
        return with_ctx_json(env.at("ctx"), [&](auto ctx) {
            return verify_certificate_data(type, env.at("data"), ctx);
        });
    } catch (const Error& e) {
        return {false, e.what()};
    } catch (const json::exception& e) {
        return {false, std::string("malformed certificate: ") + e.what()};
    }
}

} // namespace hoc
