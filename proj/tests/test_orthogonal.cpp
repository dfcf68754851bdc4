#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hoc/orthogonal.hpp"
#include "hoc/random.hpp"

using namespace hoc;
using Q = Rational;

namespace {
auto cl = make_ctx_q({"L"}); // symbolic generator parameter

Poly<Q> pl(const std::string& s) { return parse_poly<Q>(s, cl); }

// entry-for-entry comparison against a 5x5 table of expression strings
bool matches(const PolyMat<Q>& m, const std::vector<std::vector<std::string>>& table) {
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j)
            if (m.at(i, j) != pl(table[i][j])) return false;
    return true;
}

EOGen<Poly<Q>> gen(int fam, std::size_t i, std::size_t j, const Poly<Q>& l) {
    return EOGen<Poly<Q>>{fam, i, j, l};
}
} // namespace

TEST_CASE("gram matrix") {
    auto b = gram_matrix(cl, 2);
    CHECK(b.at(0, 0) == pl("1"));
    CHECK(b.at(1, 3) == pl("1/2"));
    CHECK(b.at(3, 1) == pl("1/2"));
    CHECK(b.at(2, 4) == pl("1/2"));
    CHECK(b.at(1, 2).is_zero());
    CHECK(b == b.transposed());

    // permuted to (x; y; z) order the blocks are (1/2)[[0,I,0],[I,0,0],[0,0,2]]
    std::size_t n = 2;
    std::vector<std::size_t> perm{1, 2, 3, 4, 0}; // (x1 x2 y1 y2 z) from (z x1 x2 y1 y2)
    PolyMat<Q> p(5, Poly<Q>::zero(cl));
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j) p.at(i, j) = b.at(perm[i], perm[j]);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            CHECK(p.at(i, n + j) == (i == j ? pl("1/2") : pl("0")));
            CHECK(p.at(n + i, j) == (i == j ? pl("1/2") : pl("0")));
            CHECK(p.at(i, j).is_zero());
            CHECK(p.at(n + i, n + j).is_zero());
        }
    CHECK(p.at(4, 4) == pl("1"));

    // v^t B v equals the split form, symbolically
    auto cv = make_ctx_q({"s", "f1", "f2", "g1", "g2"});
    auto bb = gram_matrix(cv, 2);
    std::vector<Poly<Q>> v;
    for (std::size_t i = 0; i < 5; ++i) v.push_back(Poly<Q>::variable(cv, i));
    auto bv = bb.apply(v);
    Poly<Q> form = Poly<Q>::zero(cv);
    for (std::size_t i = 0; i < 5; ++i) form += v[i] * bv[i];
    CHECK(form == parse_poly<Q>("f1*g1 + f2*g2 + s^2", cv));
}

TEST_CASE("the five displayed n=2 generator matrices, entry for entry") {
    auto l = pl("L");

    CHECK(matches(make_generator<Q>(gen(1, 0, 1, l), 2),
                  {{"1", "L", "0", "0", "0"},
                   {"0", "1", "0", "0", "0"},
                   {"0", "0", "1", "0", "0"},
                   {"-2*L", "-1*L^2", "0", "1", "0"},
                   {"0", "0", "0", "0", "1"}}));

    CHECK(matches(make_generator<Q>(gen(2, 0, 3, l), 2),
                  {{"1", "0", "0", "L", "0"},
                   {"-2*L", "1", "0", "-1*L^2", "0"},
                   {"0", "0", "1", "0", "0"},
                   {"0", "0", "0", "1", "0"},
                   {"0", "0", "0", "0", "1"}}));

    CHECK(matches(make_generator<Q>(gen(3, 1, 2, l), 2),
                  {{"1", "0", "0", "0", "0"},
                   {"0", "1", "L", "0", "0"},
                   {"0", "0", "1", "0", "0"},
                   {"0", "0", "0", "1", "0"},
                   {"0", "0", "0", "-1*L", "1"}}));

    CHECK(matches(make_generator<Q>(gen(4, 1, 4, l), 2),
                  {{"1", "0", "0", "0", "0"},
                   {"0", "1", "0", "0", "L"},
                   {"0", "0", "1", "-1*L", "0"},
                   {"0", "0", "0", "1", "0"},
                   {"0", "0", "0", "0", "1"}}));

    CHECK(matches(make_generator<Q>(gen(5, 3, 2, l), 2),
                  {{"1", "0", "0", "0", "0"},
                   {"0", "1", "0", "0", "0"},
                   {"0", "0", "1", "0", "0"},
                   {"0", "0", "L", "1", "0"},
                   {"0", "-1*L", "0", "0", "1"}}));
}

TEST_CASE("illegal indices are rejected, including the denormalized 4/5 forms") {
    auto l = pl("L");
    CHECK_THROWS_AS(make_generator<Q>(gen(1, 0, 3, l), 2), Error); // j out of x-range
    CHECK_THROWS_AS(make_generator<Q>(gen(3, 1, 1, l), 2), Error); // i == j
    CHECK_THROWS_AS(make_generator<Q>(gen(4, 2, 3, l), 2), Error); // i >= j-n
    CHECK_THROWS_AS(make_generator<Q>(gen(5, 4, 1, l), 2), Error); // i-n >= j
    CHECK_THROWS_AS(make_generator<Q>(gen(4, 1, 3, l), 2), Error); // i == j-n
}

TEST_CASE("every family is orthogonal for random polynomial parameters") {
    Rng rng(101);
    auto fp = make_ctx_fp(10007, {"L"});
    for (std::size_t n : {2u, 3u, 4u}) {
        std::vector<EOGen<Poly<Q>>> gens;
        std::vector<EOGen<Poly<FpElem>>> fgens;
        for (int it = 0; it < 25; ++it) {
            auto lam = rand_poly(cl, rng, 2, 2);
            auto flam = rand_poly(fp, rng, 2, 2);
            std::uniform_int_distribution<std::size_t> xi(1, n);
            std::size_t a = xi(rng), b = xi(rng);
            while (b == a) b = xi(rng);
            std::size_t lo = std::min(a, b), hi = std::max(a, b);
            gens.push_back(gen(1, 0, a, lam));
            gens.push_back(gen(2, 0, n + a, lam));
            gens.push_back(gen(3, a, b, lam));
            gens.push_back(gen(4, lo, n + hi, lam));
            gens.push_back(gen(5, n + lo, hi, lam));
            fgens.push_back({1, 0, a, flam});
            fgens.push_back({4, lo, n + hi, flam});
        }
        for (const auto& g : gens) {
            auto m = make_generator<Q>(g, n);
            CHECK(is_orthogonal(m, n, cl).ok);
            CHECK(det(m) == Poly<Q>::constant(cl, 1));
        }
        for (const auto& g : fgens) {
            auto m = make_generator<FpElem>(g, n);
            CHECK(is_orthogonal(m, n, fp).ok);
        }
    }
}

TEST_CASE("is_orthogonal fixtures") {
    CHECK(is_orthogonal(poly_identity(cl, 5), 2, cl).ok);
    auto e = make_generator<Q>(gen(2, 0, 3, Poly<Q>::constant(cl, Rational(mpz_class(1), mpz_class(2)))), 2);
    CHECK(is_orthogonal(e, 2, cl).ok);

    auto bad = poly_identity(cl, 5);
    bad.at(0, 0) = pl("2");
    auto r = is_orthogonal(bad, 2, cl);
    CHECK(!r.ok);
    CHECK(!r.residual.at(0, 0).is_zero());
}

TEST_CASE("word_to_matrix composes as a left action") {
    auto l = pl("L");
    EOWord<Poly<Q>> empty;
    CHECK(word_to_matrix(empty, 2, cl) == poly_identity(cl, 5));

    EOWord<Poly<Q>> single{{gen(1, 0, 1, l)}};
    CHECK(word_to_matrix(single, 2, cl) == make_generator<Q>(gen(1, 0, 1, l), 2));

    // two-step word: first-listed generator acts first
    EOWord<Poly<Q>> w{{gen(1, 0, 1, l), gen(3, 1, 2, l)}};
    auto expect = make_generator<Q>(gen(3, 1, 2, l), 2) * make_generator<Q>(gen(1, 0, 1, l), 2);
    CHECK(word_to_matrix(w, 2, cl) == expect);

    // word followed by its formal inverse collapses to the identity
    Rng rng(33);
    for (int it = 0; it < 20; ++it) {
        EOWord<Poly<Q>> rw;
        std::uniform_int_distribution<int> fam(1, 5);
        std::uniform_int_distribution<std::size_t> xi(1, 2);
        for (int k = 0; k < 4; ++k) {
            int f = fam(rng);
            std::size_t a = xi(rng);
            auto lam = rand_poly(cl, rng, 2, 1);
            switch (f) {
                case 1: rw.gens.push_back(gen(1, 0, a, lam)); break;
                case 2: rw.gens.push_back(gen(2, 0, 2 + a, lam)); break;
                case 3: rw.gens.push_back(gen(3, a, a == 1 ? 2 : 1, lam)); break;
                case 4: rw.gens.push_back(gen(4, 1, 4, lam)); break;
                case 5: rw.gens.push_back(gen(5, 3, 2, lam)); break;
            }
        }
        auto round = word_concat(rw, word_inverse(rw));
        CHECK(word_to_matrix(round, 2, cl) == poly_identity(cl, 5));
    }
}

TEST_CASE("action fixtures on Q' and Q") {
    auto one = Poly<Q>::constant(cl, 1);
    auto half = Poly<Q>::constant(cl, Rational(mpz_class(1), mpz_class(2)));

    auto u = check_point<Q>(QuadricVariant::Qprime, 2,
                            {Poly<Q>::zero(cl), one, Poly<Q>::zero(cl), one, Poly<Q>::zero(cl)});
    EOWord<Poly<Q>> w1{{gen(1, 0, 1, one)}};
    auto u1 = act_qprime(w1, u);
    CHECK(u1 == check_point<Q>(QuadricVariant::Qprime, 2,
                               {one, one, Poly<Q>::zero(cl), Poly<Q>::zero(cl), Poly<Q>::zero(cl)}));

    EOWord<Poly<Q>> w2{{gen(2, 0, 3, half)}};
    CHECK(act_qprime(w2, u1) == base_u0(cl, 2));

    CHECK(act_qprime(poly_identity(cl, 5), u) == u);

    // transported action: act_q(e01(1), alpha(u)) = alpha(e01(1) u)
    auto v = alpha(u);
    CHECK(act_q(word_to_matrix(w1, 2, cl), v) == alpha(u1));
    CHECK(act_q(poly_identity(cl, 5), v) == v);
}

TEST_CASE("action is a group action and preserves the equation on random data") {
    Rng rng(55);
    for (int it = 0; it < 100; ++it) {
        auto u = rand_qprime_const(cl, 2, rng);
        EOWord<Poly<Q>> w;
        std::uniform_int_distribution<int> fam(1, 5);
        for (int k = 0; k < 3; ++k) {
            auto lam = rand_poly(cl, rng, 2, 1);
            switch (fam(rng)) {
                case 1: w.gens.push_back(gen(1, 0, 1, lam)); break;
                case 2: w.gens.push_back(gen(2, 0, 4, lam)); break;
                case 3: w.gens.push_back(gen(3, 2, 1, lam)); break;
                case 4: w.gens.push_back(gen(4, 1, 4, lam)); break;
                case 5: w.gens.push_back(gen(5, 3, 2, lam)); break;
            }
        }
        // generator-action fold equals the matrix action
        auto by_word = act_qprime(w, u);
        auto by_matrix = act_qprime(word_to_matrix(w, 2, cl), u);
        CHECK(by_word == by_matrix);
        CHECK(quadric_residual(by_word).is_zero());

        // act(M2, act(M1, u)) = act(M2 M1, u)
        EOWord<Poly<Q>> w1{{w.gens[0]}}, w2{{w.gens[1], w.gens[2]}};
        auto lhs = act_qprime(w2, act_qprime(w1, u));
        auto rhs = act_qprime(word_to_matrix(w2, 2, cl) * word_to_matrix(w1, 2, cl), u);
        CHECK(lhs == rhs);

        auto vq = act_q(w, alpha(u));
        CHECK(quadric_residual(vq).is_zero());
    }
}
