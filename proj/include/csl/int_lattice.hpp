#pragma once

#include <string>
#include <utility>
#include <vector>

#include "csl/errors.hpp"
#include "csl/fields.hpp"

namespace csl {

/// 2x2 integer matrix. HNF output is column-style: generator columns
/// (m00, m10) = (a, 0) and (m01, m11) = (b, c) with a, c > 0 and 0 <= b < a.
struct IntMat2 {
    Int m00, m01, m10, m11;

    Int det() const { return m00 * m11 - m01 * m10; }
    friend bool operator==(const IntMat2& x, const IntMat2& y) {
        return x.m00 == y.m00 && x.m01 == y.m01 && x.m10 == y.m10 && x.m11 == y.m11;
    }
    std::string str() const {
        return "[" + m00.get_str() + "," + m01.get_str() + ";" + m10.get_str() + "," +
               m11.get_str() + "]";
    }
};

using IntPair = std::pair<Int, Int>;

/// Hermite normal form of the lattice spanned by the given vectors.
/// Throws RankDeficient when the span has rank < 2.
inline IntMat2 hnf2(const std::vector<IntPair>& gens) {
    if (gens.empty()) throw RankDeficient("hnf2: no generators");
    // Fold extended gcd over second coordinates to get w = (wx, wy) in the
    // lattice with wy = gcd of all y's.
    Int wx = 0, wy = 0;
    for (const auto& [gx, gy] : gens) {
        if (gy == 0) continue;
        if (wy == 0) {
            wx = gx;
            wy = gy;
            if (wy < 0) { wx = -wx; wy = -wy; }
            continue;
        }
        Int g, s, t;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), wy.get_mpz_t(), gy.get_mpz_t());
        wx = s * wx + t * gx;
        wy = g;
    }
    if (wy == 0) throw RankDeficient("hnf2: all generators on the x-axis");
    // Residuals have zero second coordinate; their x-gcd is the first diagonal.
    Int a = 0;
    for (const auto& [gx, gy] : gens) {
        const Int r = gx - (gy / wy) * wx;
        mpz_gcd(a.get_mpz_t(), a.get_mpz_t(), r.get_mpz_t());
    }
    if (a == 0) throw RankDeficient("hnf2: rank 1 span");
    Int b;
    mpz_fdiv_r(b.get_mpz_t(), wx.get_mpz_t(), a.get_mpz_t());
    return IntMat2{a, b, 0, wy};
}

/// Membership of (x, y) in the lattice given by an HNF matrix.
inline bool hnf_contains(const IntMat2& h, const Int& x, const Int& y) {
    if (y % h.m11 != 0) return false;
    return (x - (y / h.m11) * h.m01) % h.m00 == 0;
}

/// HNF of rational generators: returns (H, den) with lattice = H / den.
/// The pair is normalized so that gcd(content(H), den) = 1.
inline std::pair<IntMat2, Int> hnf2_rational(const std::vector<std::pair<Rat, Rat>>& gens) {
    Int lcm = 1;
    for (const auto& [x, y] : gens) {
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den().get_mpz_t());
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), y.get_den().get_mpz_t());
    }
    std::vector<IntPair> scaled;
    scaled.reserve(gens.size());
    for (const auto& [x, y] : gens) {
        scaled.emplace_back(Int(x * lcm), Int(y * lcm));
    }
    IntMat2 h = hnf2(scaled);
    Int content = h.m00;
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), h.m01.get_mpz_t());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), h.m11.get_mpz_t());
    Int g;
    mpz_gcd(g.get_mpz_t(), content.get_mpz_t(), lcm.get_mpz_t());
    if (g > 1) {
        h.m00 /= g;
        h.m01 /= g;
        h.m11 /= g;
        lcm /= g;
    }
    return {h, lcm};
}

}  // namespace csl
