#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "hoc/error.hpp"

namespace hoc {

// Exact rational scalar over GMP. Value-semantic and always canonical
// (gmp keeps num/den coprime with positive denominator).
class Rational {
    mpq_class v_;

public:
    Rational() : v_(0) {}
    explicit Rational(long n) : v_(n) {}
    explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }
    Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
        if (den == 0) fail(errc::bad_input, "zero denominator");
        v_.canonicalize();
    }

    static Rational from_decimal_strings(const std::string& num, const std::string& den) {
        return Rational(mpz_class(num), den.empty() ? mpz_class(1) : mpz_class(den));
    }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }

    Rational inv() const {
        if (is_zero()) fail(errc::not_a_unit, "division by zero");
        return Rational(mpq_class(1 / v_));
    }

    bool negative() const { return v_ < 0; }
    Rational abs() const { return negative() ? -*this : *this; }

    // Canonical rendering: "7", "-3/2".
    std::string str() const { return v_.get_str(); }
};

// Prime-field scalar. Each value carries its modulus so that values are
// self-contained; mixing moduli is a programming error.
class FpElem {
    std::uint64_t v_ = 0;
    std::uint64_t p_ = 0;

    static std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
    }

    void check(const FpElem& o) const {
        if (p_ != o.p_) fail(errc::bad_input, "mixed prime-field moduli");
    }

public:
    FpElem() = default;
    FpElem(std::uint64_t v, std::uint64_t p) : v_(v % p), p_(p) {}

    std::uint64_t value() const { return v_; }
    std::uint64_t modulus() const { return p_; }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    FpElem operator-() const { return FpElem(v_ == 0 ? 0 : p_ - v_, p_); }
    FpElem operator+(const FpElem& o) const {
        check(o);
        std::uint64_t s = v_ + o.v_;
        if (s >= p_) s -= p_;
        return FpElem(s, p_);
    }
    FpElem operator-(const FpElem& o) const {
        check(o);
        return *this + (-o);
    }
    FpElem operator*(const FpElem& o) const {
        check(o);
        return FpElem(mulmod(v_, o.v_, p_), p_);
    }
    bool operator==(const FpElem& o) const { return v_ == o.v_ && p_ == o.p_; }
    bool operator!=(const FpElem& o) const { return !(*this == o); }

    FpElem inv() const {
        if (v_ == 0) fail(errc::not_a_unit, "inverse of zero in F_p");
        // extended Euclid on (v, p)
        std::int64_t t = 0, newt = 1;
        std::int64_t r = static_cast<std::int64_t>(p_), newr = static_cast<std::int64_t>(v_);
        while (newr != 0) {
            std::int64_t q = r / newr;
            std::int64_t tmp = t - q * newt;
            t = newt;
            newt = tmp;
            tmp = r - q * newr;
            r = newr;
            newr = tmp;
        }
        if (t < 0) t += static_cast<std::int64_t>(p_);
        return FpElem(static_cast<std::uint64_t>(t), p_);
    }

    bool negative() const { return false; }
    FpElem abs() const { return *this; }

    std::string str() const { return std::to_string(v_); }
};

inline bool is_odd_prime(std::uint64_t p) {
    if (p < 3 || p % 2 == 0) return false;
    for (std::uint64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

} // namespace hoc
