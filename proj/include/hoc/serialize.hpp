#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "hoc/homotopy.hpp"
#include "hoc/orientation.hpp"
#include "hoc/reduce_local.hpp"

namespace hoc {

using json = nlohmann::json;

// Wire formats, schema_version "1". Polynomials travel as grammar strings,
// fractions as {"num","den"} when the denominator is nontrivial. nlohmann's
// object keys are sorted, so output is byte-deterministic.

inline constexpr const char* kSchemaVersion = "1";

template <class K>
json ctx_to_json(const CtxPtr<K>& ctx) {
    json j;
    j["field"] = std::is_same_v<K, Rational> ? "q" : "fp";
    if (!std::is_same_v<K, Rational>) j["p"] = ctx->p;
    j["vars"] = ctx->vars;
    j["order"] = "degrevlex";
    if (ctx->homotopy_var) j["homotopy_var"] = ctx->vars[*ctx->homotopy_var];
    return j;
}

inline std::string json_field(const json& j, const char* key) {
    if (!j.contains(key)) fail(errc::bad_input, std::string("missing field '") + key + "'");
    return j.at(key).get<std::string>();
}

template <class K>
Poly<K> poly_from_json(const json& j, const CtxPtr<K>& ctx) {
    return parse_poly<K>(j.get<std::string>(), ctx);
}

template <class K>
json poly_to_json(const Poly<K>& p) {
    return print_poly(p);
}

template <class K>
std::vector<Poly<K>> polys_from_json(const json& j, const CtxPtr<K>& ctx) {
    std::vector<Poly<K>> v;
    for (const auto& e : j) v.push_back(poly_from_json<K>(e, ctx));
    return v;
}

template <class K>
json polys_to_json(const std::vector<Poly<K>>& v) {
    json j = json::array();
    for (const auto& p : v) j.push_back(print_poly(p));
    return j;
}

template <class K>
json fraction_to_json(const Fraction<K>& f) {
    if (f.is_poly()) return print_poly(f.num());
    return json{{"num", print_poly(f.num())}, {"den", print_poly(f.den())}};
}

template <class K>
Fraction<K> fraction_from_json(const json& j, const CtxPtr<K>& ctx) {
    if (j.is_string()) return Fraction<K>(poly_from_json<K>(j, ctx));
    return Fraction<K>(parse_poly<K>(json_field(j, "num"), ctx),
                       parse_poly<K>(json_field(j, "den"), ctx));
}

template <class K>
json point_to_json(const QuadricPoint<K>& v) {
    return json{{"variant", v.variant == QuadricVariant::Q ? "Q" : "Qprime"},
                {"n", v.n},
                {"s", print_poly(v.s)},
                {"f", polys_to_json(v.f)},
                {"g", polys_to_json(v.g)}};
}

template <class K>
QuadricPoint<K> point_from_json(const json& j, const CtxPtr<K>& ctx, bool revalidate = true) {
    std::string variant = json_field(j, "variant");
    if (variant != "Q" && variant != "Qprime") fail(errc::bad_input, "variant must be Q or Qprime");
    QuadricVariant v = variant == "Q" ? QuadricVariant::Q : QuadricVariant::Qprime;
    std::size_t n = j.at("n").get<std::size_t>();
    auto s = parse_poly<K>(json_field(j, "s"), ctx);
    auto f = polys_from_json<K>(j.at("f"), ctx);
    auto g = polys_from_json<K>(j.at("g"), ctx);
    if (revalidate) return check_point(v, n, s, f, g);
    if (f.size() != n || g.size() != n) fail(errc::bad_input, "coordinate arity mismatch");
    return QuadricPoint<K>{v, n, std::move(s), std::move(f), std::move(g)};
}

template <class K, class L>
json word_to_json(const EOWord<L>& w) {
    json j = json::array();
    for (const auto& g : w.gens) {
        json e{{"family", g.family}, {"i", g.i}, {"j", g.j}};
        if constexpr (std::is_same_v<L, Poly<K>>)
            e["lambda"] = print_poly(g.lambda);
        else
            e["lambda"] = fraction_to_json(g.lambda);
        j.push_back(std::move(e));
    }
    return j;
}

template <class K>
EOWord<Fraction<K>> word_from_json(const json& j, const CtxPtr<K>& ctx) {
    EOWord<Fraction<K>> w;
    for (const auto& e : j)
        w.gens.push_back(EOGen<Fraction<K>>{e.at("family").get<int>(),
                                            e.at("i").get<std::size_t>(),
                                            e.at("j").get<std::size_t>(),
                                            fraction_from_json<K>(e.at("lambda"), ctx)});
    return w;
}

template <class K>
EOWord<Poly<K>> poly_word_from_json(const json& j, const CtxPtr<K>& ctx) {
    EOWord<Poly<K>> w;
    for (const auto& e : j)
        w.gens.push_back(EOGen<Poly<K>>{e.at("family").get<int>(), e.at("i").get<std::size_t>(),
                                        e.at("j").get<std::size_t>(),
                                        parse_poly<K>(json_field(e, "lambda"), ctx)});
    return w;
}

template <class K>
json membership_to_json(const MembershipCert<K>& c) {
    return json{{"element", print_poly(c.element)}, {"cofactors", polys_to_json(c.cofactors)}};
}

template <class K>
MembershipCert<K> membership_from_json(const json& j, const CtxPtr<K>& ctx) {
    return MembershipCert<K>{parse_poly<K>(json_field(j, "element"), ctx),
                             polys_from_json<K>(j.at("cofactors"), ctx)};
}

template <class K>
json comax_to_json(const ComaxCert<K>& c) {
    return json{{"gens_i", polys_to_json(c.gens_i)}, {"gens_j", polys_to_json(c.gens_j)},
                {"a", print_poly(c.a)},              {"b", print_poly(c.b)},
                {"cof_a", polys_to_json(c.cof_a)},   {"cof_b", polys_to_json(c.cof_b)}};
}

template <class K>
ComaxCert<K> comax_from_json(const json& j, const CtxPtr<K>& ctx) {
    return ComaxCert<K>{polys_from_json<K>(j.at("gens_i"), ctx),
                        polys_from_json<K>(j.at("gens_j"), ctx),
                        parse_poly<K>(json_field(j, "a"), ctx),
                        parse_poly<K>(json_field(j, "b"), ctx),
                        polys_from_json<K>(j.at("cof_a"), ctx),
                        polys_from_json<K>(j.at("cof_b"), ctx)};
}

template <class K>
json orientation_to_json(const LocalOrientation<K>& o) {
    json certs = json::array();
    for (const auto& c : o.gen_certs)
        certs.push_back(
            json{{"f_cofs", polys_to_json(c.f_cofs)}, {"sq_cofs", polys_to_json(c.sq_cofs)}});
    json rcerts = json::array();
    for (const auto& c : o.row_certs) rcerts.push_back(membership_to_json(c));
    return json{{"ideal", polys_to_json(o.ideal.gens())},
                {"row", polys_to_json(o.row)},
                {"n", o.n()},
                {"gen_certs", std::move(certs)},
                {"row_certs", std::move(rcerts)}};
}

template <class K>
LocalOrientation<K> orientation_from_json(const json& j, const CtxPtr<K>& ctx) {
    Ideal<K> ideal(polys_from_json<K>(j.at("ideal"), ctx));
    auto row = polys_from_json<K>(j.at("row"), ctx);
    LocalOrientation<K> o{std::move(ideal), std::move(row), {}, {}};
    for (const auto& c : j.at("gen_certs"))
        o.gen_certs.push_back(OrientationGenCert<K>{polys_from_json<K>(c.at("f_cofs"), ctx),
                                                    polys_from_json<K>(c.at("sq_cofs"), ctx)});
    for (const auto& c : j.at("row_certs")) o.row_certs.push_back(membership_from_json<K>(c, ctx));
    return o;
}

template <class K>
json lift_to_json(const LiftWitness<K>& w) {
    json shrink = json::array();
    for (const auto& r : w.shrink) shrink.push_back(polys_to_json(r));
    return json{{"orientation", orientation_to_json(w.orientation)},
                {"s", print_poly(w.s)},
                {"g", polys_to_json(w.g)},
                {"point", point_to_json(w.point)},
                {"shrink", std::move(shrink)},
                {"s_cofs", polys_to_json(w.s_cofs)}};
}

template <class K>
LiftWitness<K> lift_from_json(const json& j, const CtxPtr<K>& ctx) {
    std::vector<std::vector<Poly<K>>> shrink;
    for (const auto& r : j.at("shrink")) shrink.push_back(polys_from_json<K>(r, ctx));
    return LiftWitness<K>{orientation_from_json<K>(j.at("orientation"), ctx),
                          parse_poly<K>(json_field(j, "s"), ctx),
                          polys_from_json<K>(j.at("g"), ctx),
                          point_from_json<K>(j.at("point"), ctx, /*revalidate=*/false),
                          std::move(shrink),
                          polys_from_json<K>(j.at("s_cofs"), ctx)};
}

template <class K>
json sum_to_json(const SumRep<K>& s) {
    json cl = json::array(), cr = json::array();
    for (const auto& c : s.cong_left) cl.push_back(membership_to_json(c));
    for (const auto& c : s.cong_right) cr.push_back(membership_to_json(c));
    return json{{"kind", s.kind},
                {"left", orientation_to_json(s.left)},
                {"right", orientation_to_json(s.right)},
                {"comax", comax_to_json(s.comax)},
                {"comax_sq", comax_to_json(s.comax_sq)},
                {"result", orientation_to_json(s.result)},
                {"cong_left", std::move(cl)},
                {"cong_right", std::move(cr)}};
}

template <class K>
SumRep<K> sum_from_json(const json& j, const CtxPtr<K>& ctx) {
    SumRep<K> s{json_field(j, "kind"),
                orientation_from_json<K>(j.at("left"), ctx),
                orientation_from_json<K>(j.at("right"), ctx),
                comax_from_json<K>(j.at("comax"), ctx),
                comax_from_json<K>(j.at("comax_sq"), ctx),
                orientation_from_json<K>(j.at("result"), ctx),
                {},
                {}};
    for (const auto& c : j.at("cong_left")) s.cong_left.push_back(membership_from_json<K>(c, ctx));
    for (const auto& c : j.at("cong_right")) s.cong_right.push_back(membership_from_json<K>(c, ctx));
    return s;
}

template <class K>
json reduction_to_json(const ReductionCert<K>& c) {
    json j{{"input", point_to_json(c.input)},
           {"word", word_to_json<K>(c.word)},
           {"steps", c.steps}};
    if (c.local_point) {
        json pt = json::array();
        for (const auto& v : *c.local_point) pt.push_back(v.str());
        j["local_point"] = std::move(pt);
    }
    return j;
}

template <class K>
ReductionCert<K> reduction_from_json(const json& j, const CtxPtr<K>& ctx) {
    ReductionCert<K> c{point_from_json<K>(j.at("input"), ctx, /*revalidate=*/false),
                       word_from_json<K>(j.at("word"), ctx),
                       j.at("steps").get<std::vector<std::string>>(),
                       std::nullopt};
    if (j.contains("local_point")) {
        std::vector<K> pt;
        for (const auto& e : j.at("local_point"))
            pt.push_back(parse_poly<K>(e.template get<std::string>(), ctx).constant_value());
        c.local_point = std::move(pt);
    }
    return c;
}

template <class K>
json chain_to_json(const Chain<K>& c) {
    json hs = json::array();
    for (const auto& h : c.homotopies) hs.push_back(point_to_json(h.point));
    return json{{"homotopies", std::move(hs)}};
}

template <class K>
Chain<K> chain_from_json(const json& j, const CtxPtr<K>& ctx) {
    Chain<K> c;
    for (const auto& e : j.at("homotopies"))
        c.homotopies.push_back(Homotopy<K>{point_from_json<K>(e, ctx, /*revalidate=*/false)});
    return c;
}

template <class K>
json move_to_json(const MoveResult<K>& m) {
    return json{{"input", orientation_to_json(m.input)},
                {"nakayama_t", print_poly(m.nakayama_t)},
                {"witness", lift_to_json(m.witness)},
                {"lambdas", polys_to_json(m.lambdas)},
                {"seed", m.seed},
                {"comax_jk", comax_to_json(m.comax_jk)},
                {"height_j", m.height_j.infinite ? json("inf") : json(m.height_j.value)}};
}

template <class K>
MoveResult<K> move_from_json(const json& j, const CtxPtr<K>& ctx) {
    Height h = j.at("height_j").is_string() ? height_infinite()
                                            : height_of(j.at("height_j").get<std::size_t>());
    return MoveResult<K>{orientation_from_json<K>(j.at("input"), ctx),
                         parse_poly<K>(json_field(j, "nakayama_t"), ctx),
                         lift_from_json<K>(j.at("witness"), ctx),
                         polys_from_json<K>(j.at("lambdas"), ctx),
                         j.at("seed").get<std::uint64_t>(),
                         comax_from_json<K>(j.at("comax_jk"), ctx),
                         h};
}

template <class K>
json diff_to_json(const DiffResult<K>& d) {
    return json{{"move", move_to_json(d.move)},
                {"gamma_orientation", orientation_to_json(d.gamma_orientation)},
                {"sum", sum_to_json(d.sum)},
                {"seed", d.seed}};
}

template <class K>
DiffResult<K> diff_from_json(const json& j, const CtxPtr<K>& ctx) {
    return DiffResult<K>{move_from_json<K>(j.at("move"), ctx),
                         orientation_from_json<K>(j.at("gamma_orientation"), ctx),
                         sum_from_json<K>(j.at("sum"), ctx), j.at("seed").get<std::uint64_t>()};
}

template <class K>
json endpoint_to_json(const EndpointCert<K>& e) {
    json cong = json::array();
    for (const auto& c : e.row_cong) cong.push_back(membership_to_json(c));
    return json{{"h_at", point_to_json(e.h_at)},
                {"star", sum_to_json(e.star)},
                {"row_cong", std::move(cong)}};
}

template <class K>
EndpointCert<K> endpoint_from_json(const json& j, const CtxPtr<K>& ctx) {
    EndpointCert<K> e{point_from_json<K>(j.at("h_at"), ctx, /*revalidate=*/false),
                      sum_from_json<K>(j.at("star"), ctx),
                      {}};
    for (const auto& c : j.at("row_cong")) e.row_cong.push_back(membership_from_json<K>(c, ctx));
    return e;
}

template <class K>
json combine_to_json(const CombineResult<K>& c) {
    return json{{"input", point_to_json(c.input.point)},
                {"wj", orientation_to_json(c.wj)},
                {"lambdas", polys_to_json(c.lambdas)},
                {"h_prime", point_to_json(c.h_prime.point)},
                {"path_comax", comax_to_json(c.path_comax)},
                {"omega", sum_to_json(c.omega)},
                {"lift", lift_to_json(c.lift)},
                {"at0", endpoint_to_json(c.at0)},
                {"at1", endpoint_to_json(c.at1)}};
}

template <class K>
json translation_to_json(const TranslationCert<K>& t) {
    json j = json::array();
    for (const auto& g : t.family.word.gens)
        j.push_back(json{{"family", g.family}, {"i", g.i}, {"j", g.j},
                         {"lambda", print_poly(g.lambda)}});
    return json{{"word", std::move(j)},
                {"start", point_to_json(t.start)},
                {"homotopy", point_to_json(t.homotopy.point)}};
}

// Certificate envelope: type + context + the conventions every certificate
// records (left action, the fixed alpha, the monomial order).
template <class K>
json envelope(const std::string& type, const CtxPtr<K>& ctx, json data) {
    return json{{"schema_version", kSchemaVersion},
                {"type", type},
                {"ctx", ctx_to_json(ctx)},
                {"conventions",
                 json{{"action", "left"},
                      {"alpha", "((s+1)/2; f; g/4)"},
                      {"monomial_order", "degrevlex"}}},
                {"data", std::move(data)}};
}

// Field dispatch from a ctx JSON object.
template <class F>
auto with_ctx_json(const json& jctx, F&& fn) {
    if (!jctx.contains("field")) fail(errc::bad_input, "ctx needs a 'field'");
    std::string field = jctx.at("field").get<std::string>();
    std::vector<std::string> vars;
    if (jctx.contains("vars")) vars = jctx.at("vars").get<std::vector<std::string>>();
    std::optional<std::string> hvar;
    if (jctx.contains("homotopy_var")) hvar = jctx.at("homotopy_var").get<std::string>();
    if (jctx.contains("order") && jctx.at("order").get<std::string>() != "degrevlex")
        fail(errc::bad_input, "only the degrevlex order is supported");
    if (field == "q") return fn(make_ctx_q(vars, hvar));
    if (field == "fp") {
        if (!jctx.contains("p")) fail(errc::bad_input, "prime field ctx needs 'p'");
        return fn(make_ctx_fp(jctx.at("p").get<std::uint64_t>(), vars, hvar));
    }
    fail(errc::bad_input, "field must be 'q' or 'fp'");
}

} // namespace hoc
