#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hoc/orientation.hpp"

using namespace hoc;
using Q = Rational;

namespace {
auto cxy = make_ctx_q({"x", "y"});
auto cxyt = make_ctx_q({"x", "y", "T"}, std::optional<std::string>("T"));

Poly<Q> pp(const std::string& s) { return parse_poly<Q>(s, cxy); }
Poly<Q> pt(const std::string& s) { return parse_poly<Q>(s, cxyt); }

Ideal<Q> ideal(std::initializer_list<std::string> gens) {
    std::vector<Poly<Q>> g;
    for (const auto& s : gens) g.push_back(pp(s));
    return Ideal<Q>(std::move(g));
}

std::vector<Poly<Q>> row(std::initializer_list<std::string> ss) {
    std::vector<Poly<Q>> v;
    for (const auto& s : ss) v.push_back(pp(s));
    return v;
}

// independent recombination of an orientation certificate
bool orientation_recombines(const LocalOrientation<Q>& o) {
    auto sq = square_gens(o.ideal.gens());
    for (std::size_t i = 0; i < o.ideal.gens().size(); ++i) {
        Poly<Q> acc = Poly<Q>::zero(o.ctx());
        for (std::size_t j = 0; j < o.row.size(); ++j)
            acc += o.gen_certs[i].f_cofs[j] * o.row[j];
        for (std::size_t l = 0; l < sq.size(); ++l) acc += o.gen_certs[i].sq_cofs[l] * sq[l];
        if (acc != o.ideal.gens()[i]) return false;
    }
    return true;
}
} // namespace

TEST_CASE("validate_orientation fixtures") {
    auto o1 = validate_orientation(ideal({"x", "y"}), row({"x", "y"}));
    CHECK(orientation_recombines(o1));

    auto o2 = validate_orientation(ideal({"x", "y"}), row({"x + x^2", "y + y^2"}));
    CHECK(orientation_recombines(o2));

    try {
        validate_orientation(ideal({"x", "y"}), row({"x", "x"}));
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == errc::not_surjective_mod_square);
    }
}

TEST_CASE("lift of the exact row is the tautological point") {
    auto w = lift_orientation(validate_orientation(ideal({"x", "y"}), row({"x", "y"})));
    CHECK(w.s.is_zero());
    CHECK(w.g[0].is_zero());
    CHECK(w.g[1].is_zero());
    CHECK(w.point == check_point<Q>(QuadricVariant::Q, 2, row({"0", "x", "y", "0", "0"})));
}

TEST_CASE("lift of the perturbed row via the determinant trick") {
    auto o = validate_orientation(ideal({"x", "y"}), row({"x + x^2", "y + y^2"}));
    auto w = lift_orientation(o);
    CHECK(w.s == pp("0 - x - y - x*y"));
    CHECK(quadric_residual(w.point).is_zero());

    // (1-s) h_i recombines through the shrink matrix, exactly
    auto one_minus_s = pp("1") - w.s;
    for (std::size_t i = 0; i < 2; ++i) {
        Poly<Q> acc = Poly<Q>::zero(cxy);
        for (std::size_t j = 0; j < 2; ++j) acc += w.shrink[i][j] * o.row[j];
        CHECK(acc == one_minus_s * o.ideal.gens()[i]);
    }

    // eta(point) equals the input orientation: same ideal, same row
    auto back = eta(w.point);
    CHECK(ideals_equal(back.ideal, o.ideal));
    CHECK(back.row == o.row);
}

TEST_CASE("lift of a unit-ideal orientation") {
    auto o = validate_orientation(Ideal<Q>({pp("1")}), row({"1", "0"}));
    auto w = lift_orientation(o);
    CHECK(quadric_residual(w.point).is_zero());
    CHECK(ideals_equal(ideal_I(w.point), Ideal<Q>({pp("1")})));
}

TEST_CASE("eta fixtures") {
    auto v = check_point<Q>(QuadricVariant::Q, 2, row({"0", "x", "y", "0", "0"}));
    auto o = eta(v);
    CHECK(o.row == row({"x", "y"}));
    CHECK(orientation_recombines(o));

    auto one = eta(base_one(cxy, 2));
    CHECK(one.ideal.is_unit_ideal());
}

TEST_CASE("orientation gamma") {
    // J of the tautological point is the unit ideal
    auto w0 = lift_orientation(validate_orientation(ideal({"x", "y"}), row({"x", "y"})));
    auto g0 = orientation_gamma(w0);
    CHECK(g0.ideal.is_unit_ideal());

    // the perturbed fixture: J = (f_1, f_2, (1+x)(1+y)) with the same row
    auto o = validate_orientation(ideal({"x", "y"}), row({"x + x^2", "y + y^2"}));
    auto w = lift_orientation(o);
    auto g = orientation_gamma(w);
    CHECK(g.row == o.row);
    CHECK(ideals_equal(g.ideal, Ideal<Q>({pp("x + x^2"), pp("y + y^2"), pp("(1+x)*(1+y)")})));

    // gamma twice returns to an orientation with the same ideal and row
    auto gg = orientation_gamma(lift_orientation(g));
    CHECK(ideals_equal(gg.ideal, o.ideal));
    CHECK(gg.row == o.row);
}

TEST_CASE("star product fixtures") {
    auto a = validate_orientation(ideal({"x", "y"}), row({"x", "y"}));
    auto unit = validate_orientation(Ideal<Q>({pp("1")}), row({"1", "0"}));
    auto s1 = star_product(a, unit);
    // output row congruent to a's row mod K^2
    auto ksq = ideal_square(a.ideal);
    for (std::size_t i = 0; i < 2; ++i)
        CHECK(ideal_member(s1.result.row[i] - a.row[i], ksq).member());

    auto b = validate_orientation(ideal({"x-1", "y"}), row({"x-1", "y"}));
    auto s2 = star_product(a, b);
    auto isq = ideal_square(b.ideal);
    CHECK(ideal_member(s2.result.row[0] - pp("x"), ksq).member());
    CHECK(ideal_member(s2.result.row[0] - pp("x-1"), isq).member());
    CHECK(ideal_member(s2.result.row[1] - pp("y"), ksq).member());
    CHECK(ideal_member(s2.result.row[1] - pp("y"), isq).member());
    CHECK(orientation_recombines(s2.result));

    // commutativity up to congruence mod (KI)^2
    auto s2r = star_product(b, a);
    auto prod_sq = ideal_square(ideal_combine(CombineKind::product, a.ideal, b.ideal));
    for (std::size_t i = 0; i < 2; ++i)
        CHECK(ideal_member(s2.result.row[i] - s2r.result.row[i], prod_sq).member());

    // pseudo-sum is the same computation with provenance
    auto ps = pseudo_sum(a, b);
    CHECK(ps.kind == "pseudo-sum");
    CHECK(ps.result.row == s2.result.row);

    // non-comaximal pairs are rejected
    CHECK_THROWS_AS(star_product(a, a), Error);
}

TEST_CASE("move_orientation fixtures") {
    auto o = validate_orientation(ideal({"x", "y"}), row({"x", "y"}));
    auto K = ideal({"x-1", "y-1"});
    auto mv = move_orientation(o, K, 7);
    CHECK(mv.witness.point == check_point<Q>(QuadricVariant::Q, 2, row({"0", "x", "y", "0", "0"})));
    CHECK(ideal_J(mv.witness.point).is_unit_ideal());
    CHECK(mv.height_j.infinite);
    CHECK(mv.comax_jk.a + mv.comax_jk.b == pp("1"));

    // unit obstacle: the base lift works immediately
    auto mv2 = move_orientation(o, Ideal<Q>({pp("1")}), 7);
    CHECK(mv2.lambdas == row({"0", "0"}));

    // fuzz: moved lifts always verify their two GB checks
    Rng rng(40);
    for (int it = 0; it < 10; ++it) {
        std::uniform_int_distribution<int> c(2, 5);
        int ax = c(rng), by = c(rng);
        auto ob = Ideal<Q>({pp("x - " + std::to_string(ax)), pp("y - " + std::to_string(by))});
        auto m = move_orientation(o, ob, 1000 + it);
        CHECK(comaximal_witness(ideal_J(m.witness.point), ob).comaximal());
        CHECK(height(ideal_J(m.witness.point)).at_least(2));
        CHECK(quadric_residual(m.witness.point).is_zero());
    }
}

TEST_CASE("pseudo difference") {
    auto a = validate_orientation(ideal({"x", "y"}), row({"x", "y"}));
    auto unit = validate_orientation(Ideal<Q>({pp("1")}), row({"1", "0"}));

    // subtracting the trivial class: result congruent to a mod K^2
    auto d1 = pseudo_difference(a, unit, 3);
    auto ksq = ideal_square(a.ideal);
    for (std::size_t i = 0; i < 2; ++i)
        CHECK(ideal_member(d1.sum.result.row[i] - a.row[i], ksq).member());

    // a minus a: certificates valid; no pi_0 claim is made
    auto d2 = pseudo_difference(a, a, 5);
    CHECK(orientation_recombines(d2.sum.result));
    CHECK(comaximal_witness(d2.move.witness.orientation.ideal, a.ideal).comaximal() ==
          false); // (x,y) vs (x,y): the *moved* J is what is comaximal
    CHECK(comaximal_witness(Ideal<Q>(d2.sum.right.ideal.gens()), a.ideal).comaximal());

    // different seeds may choose different J; both carry valid certificates
    auto d3 = pseudo_difference(a, a, 6);
    CHECK(orientation_recombines(d3.sum.result));

    // height precondition
    auto shallow = validate_orientation(ideal({"x"}), row({"x", "0"}));
    CHECK_THROWS_AS(pseudo_difference(shallow, unit, 1), Error);
}

TEST_CASE("combine_homotopy: trivial and constant fixtures") {
    // constant homotopy at (0; x, y; 0, 0) in the T-context
    auto s0 = pt("0");
    std::vector<Poly<Q>> f0 = {pt("x"), pt("y")};
    std::vector<Poly<Q>> g0 = {pt("0"), pt("0")};
    auto H = make_homotopy(check_point(QuadricVariant::Q, 2, s0, f0, g0));

    // J = unit ideal, lambdas = 0: endpoints congruent to eta(H(t))
    auto unit = validate_orientation(Ideal<Q>({pt("1")}), {pt("1"), pt("0")});
    auto r0 = combine_homotopy(H, unit, {pt("0"), pt("0")});
    auto k0 = eta(h_eval(H, 0L));
    auto modsq = ideal_square(ideal_combine(CombineKind::product, k0.ideal, unit.ideal));
    for (std::size_t i = 0; i < 2; ++i)
        CHECK(ideal_member(r0.at0.h_at.f[i] - k0.row[i], modsq).member());

    // J = (x-1, y-1): both endpoints certified equal to (K J, omega_K * omega_J)
    auto wj = validate_orientation(Ideal<Q>({pt("x - 1"), pt("y - 1")}),
                                   {pt("x - 1"), pt("y - 1")});
    auto r = combine_homotopy(H, wj, {pt("0"), pt("0")});
    CHECK(quadric_residual(r.lift.point).is_zero());
    CHECK(ideals_equal(r.at0.star.result.ideal,
                       ideal_combine(CombineKind::product, Ideal<Q>({pt("x"), pt("y")}),
                                     Ideal<Q>({pt("x - 1"), pt("y - 1")}))));
    CHECK(ideals_equal(ideal_I(r.at1.h_at), r.at1.star.result.ideal));
}

TEST_CASE("combine_homotopy: base-chain entry with compatible J") {
    auto c = base_point_chain(cxyt, 2);
    const auto& H2 = c.homotopies[1]; // (T; 1, 0; T(1-T), 0)
    auto wj = validate_orientation(Ideal<Q>({pt("x - 1"), pt("y - 1")}),
                                   {pt("x - 1"), pt("y - 1")});
    auto r = combine_homotopy(H2, wj, {pt("1"), pt("1")});
    CHECK(quadric_residual(r.h_prime.point).is_zero());
    CHECK(quadric_residual(r.lift.point).is_zero());
    // gamma' extraction recombined: the h_prime membership is the identity in T
    CHECK(h_start(make_homotopy(r.lift.point)).n == 2);
}

TEST_CASE("combine_homotopy: proper T-dependent fixture") {
    // H(T) = (0; x + T y, y; 0, 0), K_t proper for every t
    auto H = make_homotopy(check_point<Q>(
        QuadricVariant::Q, 2, {pt("0"), pt("x + T*y"), pt("y"), pt("0"), pt("0")}));
    auto wj = validate_orientation(Ideal<Q>({pt("x - 1"), pt("y - 1")}),
                                   {pt("x - 1"), pt("y - 1")});
    auto r = combine_homotopy(H, wj, {pt("1"), pt("0")});
    CHECK(quadric_residual(r.h_prime.point).is_zero());
    CHECK(quadric_residual(r.lift.point).is_zero());

    // endpoint 1: K_1 = (x + y, y) = (x, y); the lift restricts to the star row
    auto star1 = r.at1.star;
    auto modsq = ideal_square(star1.result.ideal);
    for (std::size_t i = 0; i < 2; ++i)
        CHECK(ideal_member(r.at1.h_at.f[i] - star1.result.row[i], modsq).member());
}

TEST_CASE("combine_homotopy rejects non-comaximal endpoints") {
    auto H = make_homotopy(check_point<Q>(
        QuadricVariant::Q, 2, {pt("0"), pt("x"), pt("y"), pt("0"), pt("0")}));
    // J = (x, y) collides with K_t = (x, y)
    auto wj = validate_orientation(Ideal<Q>({pt("x"), pt("y")}), {pt("x"), pt("y")});
    try {
        combine_homotopy(H, wj, {pt("0"), pt("0")});
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == errc::precondition);
    }
}
