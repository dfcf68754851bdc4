#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hoc/random.hpp"
#include "hoc/reduce_local.hpp"

using namespace hoc;
using Q = Rational;

namespace {
auto cq = make_ctx_q({});

template <class K>
bool verifies(const ReductionCert<K>& cert) {
    auto c = replay_fractions(cert.word, cert.input);
    auto one = Fraction<K>::one(cert.input.ctx());
    if (c[0] != one) return false;
    for (std::size_t k = 1; k < c.size(); ++k)
        if (!c[k].is_zero()) return false;
    return cert.word.size() <= 2 * cert.input.n + 2;
}
} // namespace

TEST_CASE("the base point reduces by the empty word") {
    auto cert = reduce_to_base(base_u0(cq, 2));
    CHECK(cert.word.size() == 0);
    CHECK(verifies(cert));
}

TEST_CASE("fixture (0;1,0;1,0) reduces by [eps_{0,1}(1), eps_{0,3}(1/2)]") {
    auto one = Poly<Q>::constant(cq, 1);
    auto zero = Poly<Q>::zero(cq);
    auto u = check_point<Q>(QuadricVariant::Qprime, 2, {zero, one, zero, one, zero});
    auto cert = reduce_to_base(u);
    REQUIRE(cert.word.size() == 2);
    CHECK(cert.word.gens[0].family == 1);
    CHECK(cert.word.gens[0].i == 0);
    CHECK(cert.word.gens[0].j == 1);
    CHECK(cert.word.gens[0].lambda.num() == one);
    CHECK(cert.word.gens[1].family == 2);
    CHECK(cert.word.gens[1].i == 0);
    CHECK(cert.word.gens[1].j == 3);
    CHECK(cert.word.gens[1].lambda.num() == Poly<Q>::constant(cq, cq->half()));
    CHECK(cert.steps == std::vector<std::string>{"step2", "step5"});
    CHECK(verifies(cert));

    // the word is also a valid matrix word carrying u to u_0
    auto w = cert.poly_word();
    CHECK(act_qprime(w, u) == base_u0(cq, 2));
    CHECK(is_orthogonal(word_to_matrix(w, 2, cq), 2, cq).ok);
}

TEST_CASE("random field points reduce with the checker confirming, over Q and F_p") {
    Rng rng(2024);
    for (std::size_t n : {2u, 3u}) {
        for (int it = 0; it < 100; ++it) {
            auto u = rand_qprime_const(cq, n, rng);
            auto cert = reduce_to_base(u);
            CHECK(verifies(cert));
            CHECK(act_qprime(cert.poly_word(), u) == base_u0(cq, n));
        }
    }
    auto cf = make_ctx_fp(10007, {});
    for (std::size_t n : {2u, 3u}) {
        for (int it = 0; it < 100; ++it) {
            auto u = rand_qprime_const(cf, n, rng);
            auto cert = reduce_to_base(u);
            CHECK(verifies(cert));
        }
    }
}

TEST_CASE("points exercising every step-1 case") {
    auto mk = [&](std::initializer_list<std::string> ss) {
        std::vector<Poly<Q>> c;
        for (const auto& s : ss) c.push_back(parse_poly<Q>(s, cq));
        return check_point<Q>(QuadricVariant::Qprime, 2, c);
    };
    // x_1 = 0, y_2 unit (case 1): x_2 y_2 + z^2 = 1
    auto a = mk({"0", "0", "1", "0", "1"});
    auto ca = reduce_to_base(a);
    CHECK(verifies(ca));
    CHECK(ca.steps.front() == "step1-case1");

    // x_1 = 0, y_2 = 0, y_1 unit (case 2)
    auto b = mk({"1", "0", "0", "5", "0"});
    auto cb = reduce_to_base(b);
    CHECK(verifies(cb));
    CHECK(cb.steps.front() == "step1-case2");

    // all y = 0, z unit (case 3)
    auto ccase = mk({"1", "0", "3", "0", "0"});
    auto cc = reduce_to_base(ccase);
    CHECK(verifies(cc));
    CHECK(cc.steps.front() == "step1-case3");
}

TEST_CASE("reduction over a localized polynomial context emits fraction parameters") {
    auto ctx = make_ctx_q({"x"});
    LocalCtx<Q> at_origin(ctx, {ctx->zero()});
    auto zero = Poly<Q>::zero(ctx);
    // z = x (non-unit), x_1 = 1+x (unit), y_1 = 1-x solves the Q' equation
    auto u = check_point<Q>(QuadricVariant::Qprime, 2,
                            {parse_poly<Q>("x", ctx), parse_poly<Q>("1 + x", ctx), zero,
                             parse_poly<Q>("1 - x", ctx), zero});
    auto cert = reduce_to_base(u, at_origin);
    CHECK(verifies(cert));
    CHECK(!cert.all_poly_lambdas()); // x_1^{-1}(1-z) is a genuine fraction here
    CHECK(cert.word.size() <= 6);

    // transitivity: the composed word carries u to another reduced point
    auto w = check_point<Q>(QuadricVariant::Qprime, 2,
                            {zero, Poly<Q>::constant(ctx, 1), zero, Poly<Q>::constant(ctx, 1),
                             zero});
    auto tw = transit_word(u, w, at_origin);
    auto endpoint = replay_fractions(tw.word, u);
    CHECK(endpoint[0] == Fraction<Q>(w.s));
    for (std::size_t k = 0; k < 2; ++k) {
        CHECK(endpoint[1 + k] == Fraction<Q>(w.f[k]));
        CHECK(endpoint[3 + k] == Fraction<Q>(w.g[k]));
    }
}

TEST_CASE("errors: not on quadric, not local") {
    auto one = Poly<Q>::constant(cq, 1);
    QuadricPoint<Q> bad{QuadricVariant::Qprime, 2, one, {one, one}, {one, one}};
    CHECK_THROWS_AS(reduce_to_base(bad), Error);

    auto ctx = make_ctx_q({"x"});
    auto x = Poly<Q>::variable(ctx, 0);
    // (x; 1, 0; 1-x^2, 0) is on Q' but x is not a constant: field mode rejects
    auto u = check_point<Q>(QuadricVariant::Qprime, 2,
                            {x, Poly<Q>::constant(ctx, 1), Poly<Q>::zero(ctx),
                             parse_poly<Q>("1 - x^2", ctx), Poly<Q>::zero(ctx)});
    try {
        reduce_to_base(u);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == errc::not_local);
    }
}
