#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <vector>

#include "hoc/parse.hpp"
#include "hoc/ring.hpp"

namespace hoc {

// Desk-scale guarantee: Buchberger refuses to process more than max_pairs
// S-pairs or to store basis elements above max_degree.
struct GBConfig {
    std::size_t max_pairs = 100000;
    std::uint64_t max_degree = 60;
};

// A Groebner basis together with the trace matrix writing every basis
// element as an exact combination of the original generators.
template <class K>
struct GroebnerData {
    std::vector<Poly<K>> basis;              // reduced, monic, sorted by leading monomial
    std::vector<std::vector<Poly<K>>> trace; // basis[k] = sum_j trace[k][j] * gens[j]
    bool is_unit = false;
};

template <class K>
struct MembershipCert {
    Poly<K> element;
    std::vector<Poly<K>> cofactors; // aligned with the ideal's generators
};

template <class K>
struct ReduceResult {
    Poly<K> normal_form;
    std::vector<Poly<K>> cofactors; // p = sum cof*gen + normal_form, exactly
};

namespace detail {

// Divide the leading term of rem by basis elements, first match wins.
// Exact at every step: p == sum(cofs*basis) + done + rem.
template <class K>
void reduce_step_loop(Poly<K>& rem, Poly<K>& done, const std::vector<Poly<K>>& basis,
                      std::vector<Poly<K>>& cofs) {
    const auto& ctx = rem.ctx();
    while (!rem.is_zero()) {
        bool hit = false;
        for (std::size_t k = 0; k < basis.size(); ++k) {
            if (basis[k].is_zero()) continue;
            if (!exp_divides(basis[k].leading_exp(), rem.leading_exp())) continue;
            Exp q = exp_sub(rem.leading_exp(), basis[k].leading_exp());
            K c = rem.leading_coeff() * basis[k].leading_coeff().inv();
            rem -= basis[k].mul_monomial(q, c);
            cofs[k] += Poly<K>::monomial(ctx, q, c);
            hit = true;
            break;
        }
        if (!hit) {
            auto lead = Poly<K>::monomial(ctx, rem.leading_exp(), rem.leading_coeff());
            done += lead;
            rem -= lead;
        }
    }
}

template <class K>
ReduceResult<K> reduce_by_basis(const Poly<K>& p, const std::vector<Poly<K>>& basis) {
    ReduceResult<K> r{Poly<K>::zero(p.ctx()), std::vector<Poly<K>>(basis.size(), Poly<K>::zero(p.ctx()))};
    Poly<K> rem = p;
    reduce_step_loop(rem, r.normal_form, basis, r.cofactors);
    return r;
}

template <class K>
GroebnerData<K> buchberger(const std::vector<Poly<K>>& gens, const GBConfig& cfg) {
    if (gens.empty()) return {};
    auto ctx = gens.front().ctx();
    auto zero_row = [&] { return std::vector<Poly<K>>(gens.size(), Poly<K>::zero(ctx)); };

    std::vector<Poly<K>> basis;
    std::vector<std::vector<Poly<K>>> trace;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (gens[i].is_zero()) continue;
        basis.push_back(gens[i]);
        auto row = zero_row();
        row[i] = Poly<K>::constant(ctx, 1);
        trace.push_back(std::move(row));
    }

    struct Pair {
        Exp lcm;
        std::size_t i, j;
    };
    auto pair_less = [&](const Pair& a, const Pair& b) {
        if (a.lcm != b.lcm) return mon_less(ctx->order, a.lcm, b.lcm);
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    };
    std::set<Pair, decltype(pair_less)> queue(pair_less);

    auto push_pairs = [&](std::size_t k) {
        for (std::size_t i = 0; i < k; ++i) {
            Exp l = exp_lcm(basis[i].leading_exp(), basis[k].leading_exp());
            if (l == exp_add(basis[i].leading_exp(), basis[k].leading_exp())) continue; // coprime leads
            queue.insert(Pair{std::move(l), i, k});
        }
    };
    for (std::size_t k = 0; k < basis.size(); ++k) push_pairs(k);

    std::size_t processed = 0;
    while (!queue.empty()) {
        if (++processed > cfg.max_pairs)
            fail(errc::budget_exceeded, "S-pair budget (" + std::to_string(cfg.max_pairs) + ") hit");
        Pair pr = *queue.begin();
        queue.erase(queue.begin());
        const Poly<K>&f = basis[pr.i], &g = basis[pr.j];
        // S(f,g) = (lcm/lt f) f - (lcm/lt g) g
        Exp qf = exp_sub(pr.lcm, f.leading_exp());
        Exp qg = exp_sub(pr.lcm, g.leading_exp());
        K cf = f.leading_coeff().inv();
        K cg = g.leading_coeff().inv();
        Poly<K> s = f.mul_monomial(qf, cf) - g.mul_monomial(qg, cg);

        std::vector<Poly<K>> cofs(basis.size(), Poly<K>::zero(ctx));
        Poly<K> nf = Poly<K>::zero(ctx);
        reduce_step_loop(s, nf, basis, cofs);
        if (nf.is_zero()) continue;
        if (nf.total_degree() > cfg.max_degree)
            fail(errc::budget_exceeded, "degree budget (" + std::to_string(cfg.max_degree) + ") hit");

        // trace(nf) = trace(S) - sum cofs*trace
        auto row = zero_row();
        for (std::size_t j = 0; j < gens.size(); ++j) {
            row[j] = trace[pr.i][j].mul_monomial(qf, cf) - trace[pr.j][j].mul_monomial(qg, cg);
            for (std::size_t k = 0; k < basis.size(); ++k)
                if (!cofs[k].is_zero()) row[j] -= cofs[k] * trace[k][j];
        }
        basis.push_back(std::move(nf));
        trace.push_back(std::move(row));
        push_pairs(basis.size() - 1);
    }

    // minimalize: drop elements whose lead is divisible by another's
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            if (!exp_divides(basis[j].leading_exp(), basis[i].leading_exp())) continue;
            if (basis[j].leading_exp() == basis[i].leading_exp())
                redundant = j < i; // equal leads: keep the earlier
            else
                redundant = true;
        }
        if (!redundant) keep.push_back(i);
    }
    std::vector<Poly<K>> mbasis;
    std::vector<std::vector<Poly<K>>> mtrace;
    for (auto i : keep) {
        mbasis.push_back(basis[i]);
        mtrace.push_back(trace[i]);
    }

    // tail-reduce each element against the others and make it monic
    for (std::size_t i = 0; i < mbasis.size(); ++i) {
        std::vector<Poly<K>> others;
        std::vector<std::size_t> omap;
        for (std::size_t j = 0; j < mbasis.size(); ++j)
            if (j != i) {
                others.push_back(mbasis[j]);
                omap.push_back(j);
            }
        auto red = reduce_by_basis(mbasis[i], others);
        for (std::size_t k = 0; k < others.size(); ++k)
            if (!red.cofactors[k].is_zero())
                for (std::size_t j = 0; j < gens.size(); ++j)
                    mtrace[i][j] -= red.cofactors[k] * mtrace[omap[k]][j];
        mbasis[i] = red.normal_form;
        K lc = mbasis[i].leading_coeff();
        if (!lc.is_one()) {
            K inv = lc.inv();
            mbasis[i] = mbasis[i].scaled(inv);
            for (auto& t : mtrace[i]) t = t.scaled(inv);
        }
    }

    // canonical order: ascending leading monomial
    std::vector<std::size_t> idx(mbasis.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return mon_less(ctx->order, mbasis[a].leading_exp(), mbasis[b].leading_exp());
    });
    GroebnerData<K> out;
    for (auto i : idx) {
        out.basis.push_back(std::move(mbasis[i]));
        out.trace.push_back(std::move(mtrace[i]));
    }
    out.is_unit = out.basis.size() == 1 && out.basis[0].is_one();
    return out;
}

} // namespace detail

// Finitely generated ideal with a write-once Groebner cache. Values are
// immutable; copies share the cache.
template <class K>
class Ideal {
    std::vector<Poly<K>> gens_;
    GBConfig cfg_;

    struct Cache {
        std::once_flag once;
        std::optional<GroebnerData<K>> data;
    };
    std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();

public:
    explicit Ideal(std::vector<Poly<K>> gens, GBConfig cfg = {})
        : gens_(std::move(gens)), cfg_(cfg) {
        if (gens_.empty()) fail(errc::bad_input, "ideal needs at least one generator (use 0)");
    }

    const std::vector<Poly<K>>& gens() const { return gens_; }
    const CtxPtr<K>& ctx() const { return gens_.front().ctx(); }
    const GBConfig& config() const { return cfg_; }

    const GroebnerData<K>& gb() const {
        std::call_once(cache_->once, [&] { cache_->data = detail::buchberger(gens_, cfg_); });
        return *cache_->data;
    }

    bool is_unit_ideal() const { return gb().is_unit; }
    bool is_zero_ideal() const { return gb().basis.empty(); }
};

// Unique degrevlex normal form plus an exact certificate for p - nf.
template <class K>
ReduceResult<K> reduce_with_trace(const Poly<K>& p, const Ideal<K>& I) {
    const auto& g = I.gb();
    auto red = detail::reduce_by_basis(p, g.basis);
    ReduceResult<K> out{red.normal_form,
                        std::vector<Poly<K>>(I.gens().size(), Poly<K>::zero(p.ctx()))};
    for (std::size_t k = 0; k < g.basis.size(); ++k) {
        if (red.cofactors[k].is_zero()) continue;
        for (std::size_t j = 0; j < I.gens().size(); ++j)
            out.cofactors[j] += red.cofactors[k] * g.trace[k][j];
    }
    return out;
}

template <class K>
struct MembershipResult {
    std::optional<MembershipCert<K>> cert;
    Poly<K> normal_form;

    bool member() const { return cert.has_value(); }
};

template <class K>
MembershipResult<K> ideal_member(const Poly<K>& p, const Ideal<K>& I) {
    auto red = reduce_with_trace(p, I);
    if (!red.normal_form.is_zero()) return {std::nullopt, red.normal_form};
    return {MembershipCert<K>{p, std::move(red.cofactors)}, red.normal_form};
}

enum class CombineKind { sum, product, square, intersection };

namespace detail {
template <class K>
std::string fresh_var(const RingCtx<K>& ctx) {
    std::string name = "_e";
    int k = 0;
    while (ctx.var_index(name)) name = "_e" + std::to_string(k++);
    return name;
}

// derived generator lists drop zeros and repeats
template <class K>
void push_distinct(std::vector<Poly<K>>& v, Poly<K> p) {
    if (p.is_zero()) return;
    for (const auto& q : v)
        if (q == p) return;
    v.push_back(std::move(p));
}
} // namespace detail

template <class K>
Ideal<K> ideal_combine(CombineKind kind, const Ideal<K>& I, const Ideal<K>& J) {
    auto ctx = I.ctx();
    switch (kind) {
        case CombineKind::sum: {
            std::vector<Poly<K>> g = I.gens();
            for (const auto& h : J.gens()) g.push_back(h);
            return Ideal<K>(std::move(g), I.config());
        }
        case CombineKind::product: {
            std::vector<Poly<K>> g;
            for (const auto& a : I.gens())
                for (const auto& b : J.gens()) detail::push_distinct(g, a * b);
            if (g.empty()) g.push_back(Poly<K>::zero(ctx));
            return Ideal<K>(std::move(g), I.config());
        }
        case CombineKind::square: {
            // i <= j pairs of I's generators
            std::vector<Poly<K>> g;
            for (std::size_t i = 0; i < I.gens().size(); ++i)
                for (std::size_t j = i; j < I.gens().size(); ++j)
                    detail::push_distinct(g, I.gens()[i] * I.gens()[j]);
            if (g.empty()) g.push_back(Poly<K>::zero(ctx));
            return Ideal<K>(std::move(g), I.config());
        }
        case CombineKind::intersection: {
            // single auxiliary variable, eliminated with a block order
            auto ext = std::make_shared<RingCtx<K>>(*ctx);
            ext->vars.push_back(detail::fresh_var(*ctx));
            ext->order = MonomialOrder::elim_last;
            CtxPtr<K> ectx = ext;
            auto t = Poly<K>::variable(ectx, ectx->nvars() - 1);
            auto one_minus_t = Poly<K>::constant(ectx, 1) - t;
            std::vector<Poly<K>> g;
            for (const auto& f : I.gens()) g.push_back(t * f.in_ctx(ectx));
            for (const auto& f : J.gens()) g.push_back(one_minus_t * f.in_ctx(ectx));
            Ideal<K> ext_ideal(std::move(g), I.config());
            std::vector<Poly<K>> kept;
            for (const auto& b : ext_ideal.gb().basis) {
                bool uses_t = false;
                for (const auto& [e, c] : b.terms())
                    if (e.back() > 0) uses_t = true;
                if (!uses_t) kept.push_back(b.in_ctx(ctx));
            }
            if (kept.empty()) kept.push_back(Poly<K>::zero(ctx));
            return Ideal<K>(std::move(kept), I.config());
        }
    }
    fail(errc::bad_input, "unknown combine kind");
}

template <class K>
Ideal<K> ideal_square(const Ideal<K>& I) {
    return ideal_combine(CombineKind::square, I, I);
}

// Witness a + b = 1 with a in I, b in J, both sides certified.
template <class K>
struct ComaxCert {
    std::vector<Poly<K>> gens_i, gens_j;
    Poly<K> a, b;
    std::vector<Poly<K>> cof_a, cof_b; // a = sum cof_a*gens_i, b = sum cof_b*gens_j
};

template <class K>
struct ComaxResult {
    std::optional<ComaxCert<K>> cert;
    std::vector<Poly<K>> evidence_gb; // reduced GB of I+J when not comaximal

    bool comaximal() const { return cert.has_value(); }
};

template <class K>
ComaxResult<K> comaximal_witness(const Ideal<K>& I, const Ideal<K>& J) {
    auto ctx = I.ctx();
    Ideal<K> sum = ideal_combine(CombineKind::sum, I, J);
    auto red = reduce_with_trace(Poly<K>::constant(ctx, 1), sum);
    if (!red.normal_form.is_zero()) return {std::nullopt, sum.gb().basis};

    std::size_t ni = I.gens().size();
    ComaxCert<K> c{I.gens(), J.gens(), Poly<K>::zero(ctx), Poly<K>::zero(ctx), {}, {}};
    for (std::size_t k = 0; k < ni; ++k) {
        c.cof_a.push_back(red.cofactors[k]);
        c.a += red.cofactors[k] * I.gens()[k];
    }
    for (std::size_t k = 0; k < J.gens().size(); ++k) {
        c.cof_b.push_back(red.cofactors[ni + k]);
        c.b += red.cofactors[ni + k] * J.gens()[k];
    }
    if (c.a + c.b != Poly<K>::constant(ctx, 1))
        fail(errc::certificate_failure, "comaximal witness does not recombine to 1");
    return {std::move(c), {}};
}

// From 1 = a + b derive 1 = (a^3 + 3a^2 b) + (3a b^2 + b^3) with the first
// part in I^2 and the second in J^2; cofactors are written over the i<=j
// product generators, avoiding any further basis computation.
template <class K>
ComaxCert<K> comax_square(const ComaxCert<K>& c) {
    auto ctx = c.a.ctx();
    auto two = Poly<K>::constant(ctx, 2);
    auto three = Poly<K>::constant(ctx, 3);
    ComaxCert<K> out{{}, {}, Poly<K>::zero(ctx), Poly<K>::zero(ctx), {}, {}};
    auto square_side = [&](const std::vector<Poly<K>>& gens, const std::vector<Poly<K>>& cof,
                           const Poly<K>& mult, std::vector<Poly<K>>& out_gens,
                           std::vector<Poly<K>>& out_cof) {
        for (std::size_t i = 0; i < gens.size(); ++i)
            for (std::size_t j = i; j < gens.size(); ++j) {
                out_gens.push_back(gens[i] * gens[j]);
                Poly<K> uc = cof[i] * cof[j] * mult;
                out_cof.push_back(i == j ? uc : two * uc);
            }
    };
    Poly<K> ma = c.a + three * c.b; // a' = a^2 (a + 3b)
    Poly<K> mb = c.b + three * c.a; // b' = b^2 (b + 3a)
    square_side(c.gens_i, c.cof_a, ma, out.gens_i, out.cof_a);
    square_side(c.gens_j, c.cof_b, mb, out.gens_j, out.cof_b);
    out.a = c.a * c.a * ma;
    out.b = c.b * c.b * mb;
    if (out.a + out.b != Poly<K>::constant(ctx, 1))
        fail(errc::certificate_failure, "squared comaximal witness does not recombine to 1");
    return out;
}

// r = rI*b + rJ*a, normal-formed modulo I*J (= I cap J by comaximality).
template <class K>
Poly<K> crt_lift(const ComaxCert<K>& c, const Poly<K>& rI, const Poly<K>& rJ) {
    Poly<K> raw = rI * c.b + rJ * c.a;
    Ideal<K> modulus =
        ideal_combine(CombineKind::product, Ideal<K>(c.gens_i), Ideal<K>(c.gens_j));
    return reduce_with_trace(raw, modulus).normal_form;
}

template <class K>
Poly<K> crt_lift(const Ideal<K>& I, const Ideal<K>& J, const Poly<K>& rI, const Poly<K>& rJ) {
    auto w = comaximal_witness(I, J);
    if (!w.comaximal()) fail(errc::not_comaximal, "crt_lift requires comaximal ideals");
    return crt_lift(*w.cert, rI, rJ);
}

struct Height {
    bool infinite = false;
    std::size_t value = 0;

    bool at_least(std::size_t n) const { return infinite || value >= n; }
    bool operator==(const Height& o) const = default;
};

inline Height height_infinite() { return {true, 0}; }
inline Height height_of(std::size_t v) { return {false, v}; }

// height = nvars - dim, where dim is the maximal number of variables avoiding
// every leading-monomial support (staircase dimension); Infinite iff 1 in I.
template <class K>
Height height(const Ideal<K>& I) {
    if (I.is_unit_ideal()) return height_infinite();
    std::size_t n = I.ctx()->nvars();
    if (n > 20) fail(errc::budget_exceeded, "height supports at most 20 variables");
    std::vector<std::uint32_t> supports;
    for (const auto& b : I.gb().basis) {
        std::uint32_t m = 0;
        const Exp& e = b.leading_exp();
        for (std::size_t i = 0; i < n; ++i)
            if (e[i] > 0) m |= (1u << i);
        supports.push_back(m);
    }
    std::size_t dim = 0;
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
        bool independent = true;
        for (auto m : supports)
            if ((m & ~s) == 0) {
                independent = false;
                break;
            }
        if (independent) dim = std::max<std::size_t>(dim, __builtin_popcount(s));
    }
    return height_of(n - dim);
}

} // namespace hoc
