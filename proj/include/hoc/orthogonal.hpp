#pragma once

#include <map>
#include <vector>

#include "hoc/fraction.hpp"
#include "hoc/quadric.hpp"

namespace hoc {

// Dense square matrix over an exact scalar (polynomials, or local fractions
// in the reduction over localized contexts).
template <class S>
class Mat {
    std::size_t n_;
    std::vector<S> e_;

public:
    Mat(std::size_t n, const S& fill) : n_(n), e_(n * n, fill) {}

    static Mat identity(std::size_t n, const S& zero, const S& one) {
        Mat m(n, zero);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = one;
        return m;
    }

    std::size_t dim() const { return n_; }
    S& at(std::size_t r, std::size_t c) { return e_[r * n_ + c]; }
    const S& at(std::size_t r, std::size_t c) const { return e_[r * n_ + c]; }

    bool operator==(const Mat& o) const { return n_ == o.n_ && e_ == o.e_; }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    Mat operator*(const Mat& o) const {
        Mat r(n_, e_[0] - e_[0]); // zero of the scalar type
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t k = 0; k < n_; ++k) {
                const S& a = at(i, k);
                for (std::size_t j = 0; j < n_; ++j) r.at(i, j) = r.at(i, j) + a * o.at(k, j);
            }
        return r;
    }

    Mat operator-(const Mat& o) const {
        Mat r = *this;
        for (std::size_t i = 0; i < n_ * n_; ++i) r.e_[i] = r.e_[i] - o.e_[i];
        return r;
    }

    Mat transposed() const {
        Mat r = *this;
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) r.at(i, j) = at(j, i);
        return r;
    }

    std::vector<S> apply(const std::vector<S>& v) const {
        std::vector<S> r(n_, e_[0] - e_[0]);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) r[i] = r[i] + at(i, j) * v[j];
        return r;
    }
};

template <class K>
using PolyMat = Mat<Poly<K>>;

template <class K>
PolyMat<K> poly_identity(const CtxPtr<K>& ctx, std::size_t n) {
    return PolyMat<K>::identity(n, Poly<K>::zero(ctx), Poly<K>::constant(ctx, 1));
}

// Gram matrix of q_{2n+1} = sum x_i y_i + z^2 in the artifact's coordinate
// order (z; x; y): 1 at (0,0) and 1/2 on the x_i <-> y_i cross positions.
// Permuting to the (x; y; z) order gives the block form (1/2)[[0,I,0],[I,0,0],[0,0,2]].
template <class K>
PolyMat<K> gram_matrix(const CtxPtr<K>& ctx, std::size_t n) {
    if (n < 1) fail(errc::bad_input, "gram_matrix needs n >= 1");
    PolyMat<K> b(2 * n + 1, Poly<K>::zero(ctx));
    b.at(0, 0) = Poly<K>::constant(ctx, 1);
    auto half = Poly<K>::constant(ctx, ctx->half());
    for (std::size_t i = 1; i <= n; ++i) {
        b.at(i, n + i) = half;
        b.at(n + i, i) = half;
    }
    return b;
}

// One elementary orthogonal generator. Families follow the five displayed
// shapes; families 1-2 pivot on the z coordinate (i is fixed to 0), families
// 4-5 only exist in normalized index order (the transposed ones coincide
// with these up to the sign of lambda and are rejected, not aliased).
template <class L>
struct EOGen {
    int family = 0;
    std::size_t i = 0, j = 0;
    L lambda;
};

inline void check_gen_indices(int family, std::size_t i, std::size_t j, std::size_t n) {
    auto bad = [&](const std::string& msg) {
        fail(errc::illegal_indices, "family " + std::to_string(family) + " eps_{" +
                                        std::to_string(i) + "," + std::to_string(j) + "}: " + msg);
    };
    switch (family) {
        case 1:
            if (i != 0 || j < 1 || j > n) bad("need i = 0, 1 <= j <= n");
            break;
        case 2:
            if (i != 0 || j < n + 1 || j > 2 * n) bad("need i = 0, n+1 <= j <= 2n");
            break;
        case 3:
            if (i < 1 || i > n || j < 1 || j > n || i == j) bad("need 1 <= i,j <= n, i != j");
            break;
        case 4:
            if (i < 1 || i > n || j < n + 1 || j > 2 * n || i >= j - n)
                bad("need 1 <= i <= n < j <= 2n with i < j-n");
            break;
        case 5:
            if (i < n + 1 || i > 2 * n || j < 1 || j > n || i - n >= j)
                bad("need n+1 <= i <= 2n, 1 <= j <= n with i-n < j");
            break;
        default:
            bad("unknown family");
    }
}

// The displayed coordinate action as a left action on the column (z; x; y).
// Works over any exact scalar carrying the point's coordinates.
template <class S>
void apply_gen_action(int family, std::size_t i, std::size_t j, const S& lam, std::vector<S>& c,
                      std::size_t n) {
    check_gen_indices(family, i, j, n);
    S two_lam = lam + lam;
    switch (family) {
        case 1: { // z += l*x_j ; y_j -= 2lz + l^2 x_j
            S z = c[0], xj = c[j];
            c[0] = z + lam * xj;
            c[n + j] = c[n + j] - two_lam * z - lam * lam * xj;
            break;
        }
        case 2: { // q = j-n: z += l*y_q ; x_q -= 2lz + l^2 y_q
            std::size_t q = j - n;
            S z = c[0], yq = c[n + q];
            c[0] = z + lam * yq;
            c[q] = c[q] - two_lam * z - lam * lam * yq;
            break;
        }
        case 3: { // x_i += l*x_j ; y_j -= l*y_i
            S xj = c[j], yi = c[n + i];
            c[i] = c[i] + lam * xj;
            c[n + j] = c[n + j] - lam * yi;
            break;
        }
        case 4: { // q = j-n: x_i += l*y_q ; x_q -= l*y_i
            std::size_t q = j - n;
            S yq = c[n + q], yi = c[n + i];
            c[i] = c[i] + lam * yq;
            c[q] = c[q] - lam * yi;
            break;
        }
        case 5: { // p = i-n: y_p += l*x_j ; y_j -= l*x_p
            std::size_t p = i - n;
            S xj = c[j], xp = c[p];
            c[n + p] = c[n + p] + lam * xj;
            c[n + j] = c[n + j] - lam * xp;
            break;
        }
    }
}

template <class K>
PolyMat<K> make_generator(const EOGen<Poly<K>>& g, std::size_t n) {
    check_gen_indices(g.family, g.i, g.j, n);
    auto ctx = g.lambda.ctx();
    PolyMat<K> m = poly_identity(ctx, 2 * n + 1);
    const Poly<K>& l = g.lambda;
    Poly<K> two_l = l.scaled(ctx->scalar(2));
    switch (g.family) {
        case 1:
            m.at(0, g.j) = l;
            m.at(n + g.j, 0) = -two_l;
            m.at(n + g.j, g.j) = -(l * l);
            break;
        case 2: {
            std::size_t q = g.j - n;
            m.at(0, n + q) = l;
            m.at(q, 0) = -two_l;
            m.at(q, n + q) = -(l * l);
            break;
        }
        case 3:
            m.at(g.i, g.j) = l;
            m.at(n + g.j, n + g.i) = -l;
            break;
        case 4: {
            std::size_t q = g.j - n;
            m.at(g.i, n + q) = l;
            m.at(q, n + g.i) = -l;
            break;
        }
        case 5: {
            std::size_t p = g.i - n;
            m.at(n + p, g.j) = l;
            m.at(n + g.j, p) = -l;
            break;
        }
    }
    return m;
}

// Inverse generator: same position, negated parameter (families 1-2 included;
// the tests confirm the product is the identity).
template <class L>
EOGen<L> gen_inverse(const EOGen<L>& g) {
    return EOGen<L>{g.family, g.i, g.j, -g.lambda};
}

// Word in the elementary orthogonal group. Generators are listed in
// application order: gens[0] acts on the point first.
template <class L>
struct EOWord {
    std::vector<EOGen<L>> gens;

    std::size_t size() const { return gens.size(); }
};

template <class L>
EOWord<L> word_inverse(const EOWord<L>& w) {
    EOWord<L> r;
    for (auto it = w.gens.rbegin(); it != w.gens.rend(); ++it) r.gens.push_back(gen_inverse(*it));
    return r;
}

template <class L>
EOWord<L> word_concat(const EOWord<L>& a, const EOWord<L>& b) {
    EOWord<L> r = a;
    r.gens.insert(r.gens.end(), b.gens.begin(), b.gens.end());
    return r;
}

// Composite matrix of the word as a left action on columns: the product is
// taken with the first-applied generator rightmost, so the leftmost factor
// acts last.
template <class K>
PolyMat<K> word_to_matrix(const EOWord<Poly<K>>& w, std::size_t n, const CtxPtr<K>& ctx) {
    PolyMat<K> m = poly_identity(ctx, 2 * n + 1);
    for (const auto& g : w.gens) m = make_generator<K>(g, n) * m;
    return m;
}

template <class K>
struct OrthoCheck {
    bool ok;
    PolyMat<K> residual; // M^t B M - B when not orthogonal

    explicit operator bool() const { return ok; }
};

template <class K>
OrthoCheck<K> is_orthogonal(const PolyMat<K>& m, std::size_t n, const CtxPtr<K>& ctx) {
    if (m.dim() != 2 * n + 1) fail(errc::bad_input, "matrix size must be 2n+1");
    PolyMat<K> b = gram_matrix(ctx, n);
    PolyMat<K> r = m.transposed() * b * m - b;
    for (std::size_t i = 0; i < r.dim(); ++i)
        for (std::size_t j = 0; j < r.dim(); ++j)
            if (!r.at(i, j).is_zero()) return {false, r};
    return {true, r};
}

// Left action on Q': coordinates transform by the matrix (or by the listed
// generator actions); the defining equation is re-checked afterwards.
template <class K>
QuadricPoint<K> act_qprime(const PolyMat<K>& m, const QuadricPoint<K>& u) {
    if (u.variant != QuadricVariant::Qprime) fail(errc::bad_input, "action expects a Q' point");
    if (m.dim() != 2 * u.n + 1) fail(errc::bad_input, "matrix size mismatch");
    return check_point(QuadricVariant::Qprime, u.n, m.apply(u.coords()));
}

template <class K>
QuadricPoint<K> act_qprime(const EOWord<Poly<K>>& w, const QuadricPoint<K>& u) {
    if (u.variant != QuadricVariant::Qprime) fail(errc::bad_input, "action expects a Q' point");
    auto coords = u.coords();
    for (const auto& g : w.gens) apply_gen_action(g.family, g.i, g.j, g.lambda, coords, u.n);
    return check_point(QuadricVariant::Qprime, u.n, coords);
}

// Transported action on Q via the change of model.
template <class M, class K>
QuadricPoint<K> act_q(const M& m, const QuadricPoint<K>& v) {
    return alpha(act_qprime(m, beta(v)));
}

// Exact determinant by expansion over column subsets (memoized); fine for
// the 2n+1 <= 9 sizes the invariants ask about.
template <class K>
Poly<K> det(const PolyMat<K>& m) {
    std::size_t n = m.dim();
    if (n > 16) fail(errc::budget_exceeded, "determinant supports dimension <= 16");
    auto ctx_of = m.at(0, 0).ctx();
    std::map<std::uint32_t, Poly<K>> memo;
    memo.emplace(0, Poly<K>::constant(ctx_of, 1));
    // dp over masks: value = det of rows 0..popcount-1 on columns in mask
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::size_t row = static_cast<std::size_t>(__builtin_popcount(mask)) - 1;
        Poly<K> acc = Poly<K>::zero(ctx_of);
        std::size_t pos = 0;
        for (std::size_t c = 0; c < n; ++c) {
            if (!(mask & (1u << c))) continue;
            const Poly<K>& entry = m.at(row, c);
            if (!entry.is_zero()) {
                const Poly<K>& sub = memo.at(mask & ~(1u << c));
                Poly<K> term = entry * sub;
                if ((row + pos) % 2 == 1) term = -term;
                acc += term;
            }
            ++pos;
        }
        memo.emplace(mask, std::move(acc));
    }
    return memo.at((1u << n) - 1);
}

} // namespace hoc
