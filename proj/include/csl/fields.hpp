#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <type_traits>

#include "csl/errors.hpp"

namespace csl {

using Int = mpz_class;
using Rat = mpq_class;

/// Exact rational with explicit numerator/denominator (canonicalized).
inline Rat ratio(const Int& num, const Int& den) {
    if (den == 0) throw ZeroDivisor("ratio: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

/// Prime field F_p with compile-time modulus. Small p only; arithmetic in
/// int64 with reduction after every op.
template <unsigned P>
class GFp {
    static_assert(P >= 2 && P < 46341, "modulus out of range");
    std::int64_t v_ = 0;

    static std::int64_t reduce(std::int64_t x) {
        x %= static_cast<std::int64_t>(P);
        return x < 0 ? x + static_cast<std::int64_t>(P) : x;
    }

  public:
    GFp() = default;
    GFp(long x) : v_(reduce(x)) {}  // NOLINT: implicit by design, mirrors mpq_class
    GFp(int x) : v_(reduce(x)) {}

    static constexpr unsigned characteristic() { return P; }
    std::int64_t value() const { return v_; }

    friend GFp operator+(GFp a, GFp b) { return GFp(a.v_ + b.v_); }
    friend GFp operator-(GFp a, GFp b) { return GFp(a.v_ - b.v_); }
    friend GFp operator*(GFp a, GFp b) { return GFp(a.v_ * b.v_); }
    GFp operator-() const { return GFp(-v_); }

    GFp inverse() const {
        if (v_ == 0) throw ZeroDivisor("GFp: inverse of zero");
        // extended Euclid on (v, P)
        std::int64_t a = v_, b = P, x0 = 1, x1 = 0;
        while (b != 0) {
            std::int64_t q = a / b;
            std::int64_t t = a - q * b; a = b; b = t;
            t = x0 - q * x1; x0 = x1; x1 = t;
        }
        return GFp(x0);
    }
    friend GFp operator/(GFp a, GFp b) { return a * b.inverse(); }

    GFp& operator+=(GFp o) { return *this = *this + o; }
    GFp& operator-=(GFp o) { return *this = *this - o; }
    GFp& operator*=(GFp o) { return *this = *this * o; }
    GFp& operator/=(GFp o) { return *this = *this / o; }

    friend bool operator==(GFp a, GFp b) { return a.v_ == b.v_; }
    friend bool operator!=(GFp a, GFp b) { return a.v_ != b.v_; }
};

template <class F>
inline bool is_zero(const F& x) { return x == F(0); }

inline std::string field_str(const Rat& x) { return x.get_str(); }
template <unsigned P>
inline std::string field_str(const GFp<P>& x) { return std::to_string(x.value()); }

inline std::string field_name(const Rat&) { return "Q"; }
template <unsigned P>
inline std::string field_name(const GFp<P>&) { return "F_" + std::to_string(P); }

/// Parse "a" or "a/b" (rationals) resp. "a" (prime fields).
inline Rat field_parse_rat(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    return ratio(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

template <class F>
struct FieldIO;

template <>
struct FieldIO<Rat> {
    static Rat parse(const std::string& s) { return field_parse_rat(s); }
    static Rat from_long(long x) { return Rat(x); }
};
template <unsigned P>
struct FieldIO<GFp<P>> {
    static GFp<P> parse(const std::string& s) { return GFp<P>(std::stol(s)); }
    static GFp<P> from_long(long x) { return GFp<P>(x); }
};

}  // namespace csl
