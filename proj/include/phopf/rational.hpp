#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "phopf/error.hpp"

namespace phopf {

// Exact arithmetic throughout; no floating point anywhere in the library.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_zero(const Rational& r) { return r.is_zero(); }

inline std::string to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

// Coefficients of the prime-field mode. Values carry their modulus so the
// field can be chosen at run time.
class Fp {
public:
    Fp() : v_(0), p_(0) {}
    Fp(long long v, long long p) : p_(p) {
        if (p < 2) throw Error("prime-field modulus must be >= 2");
        v_ = v % p;
        if (v_ < 0) v_ += p;
    }

    long long value() const { return v_; }
    long long modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }

    friend Fp operator+(const Fp& a, const Fp& b) { return Fp(a.v_ + b.v_, a.common(b)); }
    friend Fp operator-(const Fp& a, const Fp& b) { return Fp(a.v_ - b.v_, a.common(b)); }
    friend Fp operator*(const Fp& a, const Fp& b) { return Fp(a.v_ * b.v_, a.common(b)); }
    friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }
    Fp operator-() const { return Fp(-v_, p_); }
    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }

    Fp inverse() const {
        if (v_ == 0) throw Error("division by zero in F_p");
        // p is prime in every use of this mode
        long long r = 1, b = v_, e = p_ - 2;
        while (e > 0) {
            if (e & 1) r = (r * b) % p_;
            b = (b * b) % p_;
            e >>= 1;
        }
        return Fp(r, p_);
    }

    friend bool operator==(const Fp& a, const Fp& b) { return a.v_ == b.v_ && a.p_ == b.p_; }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

private:
    long long common(const Fp& o) const {
        if (p_ != 0 && o.p_ != 0 && p_ != o.p_) throw Error("mixed prime-field moduli");
        return p_ != 0 ? p_ : o.p_;
    }
    long long v_;
    long long p_;
};

inline bool is_zero(const Fp& x) { return x.is_zero(); }
inline std::string to_string(const Fp& x) { return std::to_string(x.value()); }

// Field scalars constructed from small integers. `p` is the coefficient
// characteristic carried by the generator set (0 selects the rationals).
template <class K>
struct FieldOps;

template <>
struct FieldOps<Rational> {
    static Rational make(long long /*p*/, long long n) { return Rational(n); }
};

template <>
struct FieldOps<Fp> {
    static Fp make(long long p, long long n) { return Fp(n, p); }
};

}  // namespace phopf
