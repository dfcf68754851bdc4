#pragma once

#include <vector>

#include "hoc/parse.hpp"
#include "hoc/ring.hpp"

namespace hoc {

// Localization of a polynomial ring at a rational point: the maximal ideal
// is the functions vanishing there, units are detected by evaluation.
template <class K>
struct LocalCtx {
    CtxPtr<K> base;
    std::vector<K> point;

    LocalCtx(CtxPtr<K> b, std::vector<K> pt) : base(std::move(b)), point(std::move(pt)) {
        if (point.size() != base->nvars()) fail(errc::bad_input, "point arity mismatch");
    }

    bool is_unit(const Poly<K>& f) const { return !f.eval_at(point).is_zero(); }
};

// num/den with den a unit in the localization. Denominators that are
// nonzero constants get folded into the numerator, so field-valued
// computations stay plain polynomials.
template <class K>
class Fraction {
    Poly<K> num_;
    Poly<K> den_;

    void normalize() {
        if (num_.is_zero()) {
            den_ = Poly<K>::constant(num_.ctx(), num_.ctx()->one());
            return;
        }
        if (den_.is_constant()) {
            K c = den_.constant_value();
            if (!c.is_one()) num_ = num_.scaled(c.inv());
            den_ = Poly<K>::constant(num_.ctx(), num_.ctx()->one());
        }
    }

public:
    explicit Fraction(Poly<K> num) : num_(std::move(num)), den_(Poly<K>::constant(num_.ctx(), 1)) {}
    Fraction(Poly<K> num, Poly<K> den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) fail(errc::not_a_unit, "zero denominator");
        normalize();
    }

    static Fraction zero(const CtxPtr<K>& ctx) { return Fraction(Poly<K>::zero(ctx)); }
    static Fraction one(const CtxPtr<K>& ctx) { return Fraction(Poly<K>::constant(ctx, 1)); }

    const Poly<K>& num() const { return num_; }
    const Poly<K>& den() const { return den_; }
    const CtxPtr<K>& ctx() const { return num_.ctx(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_poly() const { return den_.is_one(); }

    Fraction operator-() const { return Fraction(-num_, den_); }
    Fraction operator+(const Fraction& o) const {
        return Fraction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    Fraction operator-(const Fraction& o) const {
        return Fraction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    Fraction operator*(const Fraction& o) const { return Fraction(num_ * o.num_, den_ * o.den_); }

    // Exact equality in the localization (cross-multiplication).
    bool operator==(const Fraction& o) const { return num_ * o.den_ == o.num_ * den_; }
    bool operator!=(const Fraction& o) const { return !(*this == o); }

    Fraction inv_unchecked() const {
        if (num_.is_zero()) fail(errc::not_a_unit, "inverse of zero");
        return Fraction(den_, num_);
    }
};

// 1/f in the localization; f must not vanish at the point.
template <class K>
Fraction<K> local_invert(const Poly<K>& f, const LocalCtx<K>& lctx) {
    if (!lctx.is_unit(f))
        fail(errc::not_a_unit, print_poly(f) + " vanishes at the localization point");
    return Fraction<K>(Poly<K>::constant(f.ctx(), 1), f);
}

template <class K>
Fraction<K> local_invert(const Fraction<K>& f, const LocalCtx<K>& lctx) {
    if (!lctx.is_unit(f.num()))
        fail(errc::not_a_unit, "numerator vanishes at the localization point");
    return f.inv_unchecked();
}

} // namespace hoc
