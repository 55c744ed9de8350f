#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"

#include "csl/errors.hpp"

namespace csl {

/// Finite commutative semigroup given by its multiplication table.
/// Validated at construction: entries in range, commutative, associative.
struct FiniteSemigroup {
    std::size_t n = 0;
    std::vector<std::string> labels;
    std::vector<std::vector<int>> table;

    int at(int i, int j) const { return table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
};

inline FiniteSemigroup build_semigroup(std::vector<std::string> labels,
                                       std::vector<std::vector<int>> table) {
    const std::size_t n = table.size();
    if (n == 0) throw BadTable("empty table");
    if (labels.empty()) {
        for (std::size_t i = 0; i < n; ++i) labels.push_back("s" + std::to_string(i));
    }
    if (labels.size() != n) throw BadTable("label count != table size");
    for (const auto& row : table) {
        if (row.size() != n) throw BadTable("table is not square");
        for (int e : row) {
            if (e < 0 || static_cast<std::size_t>(e) >= n) throw BadTable("table entry out of range");
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (table[i][j] != table[j][i]) {
                throw NotCommutative("xy != yx at (" + labels[i] + "," + labels[j] + ")");
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const int ij = table[i][j];
            for (std::size_t k = 0; k < n; ++k) {
                if (table[static_cast<std::size_t>(ij)][k] !=
                    table[i][static_cast<std::size_t>(table[j][k])]) {
                    throw NotAssociative("(xy)z != x(yz) at (" + labels[i] + "," + labels[j] + "," +
                                         labels[k] + ")");
                }
            }
        }
    }
    return FiniteSemigroup{n, std::move(labels), std::move(table)};
}

/// Plain associativity/commutativity test, no exceptions. Used by the
/// exhaustive table sweeps.
inline bool table_is_comm_assoc(const std::vector<std::vector<int>>& t) {
    const std::size_t n = t.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (t[i][j] != t[j][i]) return false;
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const auto ij = static_cast<std::size_t>(t[i][j]);
            for (std::size_t k = 0; k < n; ++k) {
                if (t[ij][k] != t[i][static_cast<std::size_t>(t[j][k])]) return false;
            }
        }
    }
    return true;
}

/// For each element x, a witness a with x^2 a = x, if one exists.
inline std::vector<std::optional<int>> regular_witnesses(const FiniteSemigroup& s) {
    std::vector<std::optional<int>> out(s.n);
    for (std::size_t x = 0; x < s.n; ++x) {
        const int xx = s.table[x][x];
        for (std::size_t a = 0; a < s.n; ++a) {
            if (s.table[static_cast<std::size_t>(xx)][a] == static_cast<int>(x)) {
                out[x] = static_cast<int>(a);
                break;
            }
        }
    }
    return out;
}

inline std::vector<int> regular_elements(const FiniteSemigroup& s) {
    std::vector<int> out;
    const auto w = regular_witnesses(s);
    for (std::size_t x = 0; x < s.n; ++x) {
        if (w[x]) out.push_back(static_cast<int>(x));
    }
    return out;
}

/// Verdict plus a witness index on the negative side.
struct SemigroupVerdict {
    bool holds = false;
    std::optional<int> witness;  // non-regular resp. non-idempotent element
};

inline SemigroupVerdict is_clifford(const FiniteSemigroup& s) {
    const auto w = regular_witnesses(s);
    for (std::size_t x = 0; x < s.n; ++x) {
        if (!w[x]) return {false, static_cast<int>(x)};
    }
    return {true, std::nullopt};
}

inline SemigroupVerdict is_boolean(const FiniteSemigroup& s) {
    for (std::size_t x = 0; x < s.n; ++x) {
        if (s.table[x][x] != static_cast<int>(x)) return {false, static_cast<int>(x)};
    }
    return {true, std::nullopt};
}

struct CliffordDecomposition {
    std::vector<int> idempotents;
    std::map<int, std::vector<int>> groups;  // idempotent -> elements of G_e
    std::vector<int> unassigned;             // elements in no constituent group
};

/// Constituent groups: G_e = {x : xe = x and exists y with xy = e, ye = y},
/// the largest subgroup with identity e. Group axioms and pairwise
/// disjointness are re-verified on the computed sets.
inline CliffordDecomposition clifford_decomposition(const FiniteSemigroup& s) {
    CliffordDecomposition d;
    for (std::size_t e = 0; e < s.n; ++e) {
        if (s.table[e][e] == static_cast<int>(e)) d.idempotents.push_back(static_cast<int>(e));
    }
    std::vector<int> owner(s.n, -1);
    for (int e : d.idempotents) {
        std::vector<int> g;
        for (std::size_t x = 0; x < s.n; ++x) {
            if (s.at(static_cast<int>(x), e) != static_cast<int>(x)) continue;
            for (std::size_t y = 0; y < s.n; ++y) {
                if (s.at(static_cast<int>(x), static_cast<int>(y)) == e &&
                    s.at(static_cast<int>(y), e) == static_cast<int>(y)) {
                    g.push_back(static_cast<int>(x));
                    break;
                }
            }
        }
        for (int x : g) {
            if (owner[static_cast<std::size_t>(x)] != -1) {
                throw InternalInvariant("constituent groups not disjoint");
            }
            owner[static_cast<std::size_t>(x)] = e;
        }
        // group axioms on g
        for (int x : g) {
            if (std::find(g.begin(), g.end(), s.at(x, e)) == g.end() || s.at(x, e) != x) {
                throw InternalInvariant("identity law fails in constituent group");
            }
            bool has_inverse = false;
            for (int y : g) {
                if (s.at(x, y) == e) { has_inverse = true; break; }
            }
            if (!has_inverse) throw InternalInvariant("inverse missing in constituent group");
            for (int y : g) {
                if (std::find(g.begin(), g.end(), s.at(x, y)) == g.end()) {
                    throw InternalInvariant("constituent group not closed");
                }
            }
        }
        d.groups[e] = std::move(g);
    }
    for (std::size_t x = 0; x < s.n; ++x) {
        if (owner[x] == -1) d.unassigned.push_back(static_cast<int>(x));
    }
    return d;
}

// ---- JSON ingest/emit ------------------------------------------------------

inline FiniteSemigroup semigroup_from_json(const nlohmann::json& j) {
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    auto table = j.at("table").get<std::vector<std::vector<int>>>();
    return build_semigroup(std::move(labels), std::move(table));
}

inline nlohmann::json decomposition_to_json(const FiniteSemigroup& s) {
    const auto d = clifford_decomposition(s);
    const auto cl = is_clifford(s);
    const auto bo = is_boolean(s);
    nlohmann::json out;
    out["clifford"] = cl.holds;
    out["boolean"] = bo.holds;
    if (!cl.holds) out["non_regular_witness"] = s.labels[static_cast<std::size_t>(*cl.witness)];
    std::vector<std::string> idem;
    for (int e : d.idempotents) idem.push_back(s.labels[static_cast<std::size_t>(e)]);
    out["idempotents"] = idem;
    nlohmann::json groups = nlohmann::json::object();
    for (const auto& [e, members] : d.groups) {
        std::vector<std::string> names;
        for (int x : members) names.push_back(s.labels[static_cast<std::size_t>(x)]);
        groups[s.labels[static_cast<std::size_t>(e)]] = names;
    }
    out["groups"] = groups;
    std::vector<std::string> un;
    for (int x : d.unassigned) un.push_back(s.labels[static_cast<std::size_t>(x)]);
    out["unassigned"] = un;
    return out;
}

// ---- table generation (property-test support) ------------------------------

/// Visit every commutative associative table of the given size. The callback
/// receives a validated table. Sizes beyond 4 are rejected (the sweep is
/// exponential).
inline void for_each_comm_assoc_table(std::size_t n,
                                      const std::function<void(const std::vector<std::vector<int>>&)>& fn) {
    if (n == 0 || n > 4) throw BadTable("exhaustive sweep supports sizes 1..4");
    const std::size_t cells = n * (n + 1) / 2;
    std::vector<int> choice(cells, 0);
    std::vector<std::vector<int>> t(n, std::vector<int>(n, 0));
    while (true) {
        std::size_t idx = 0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i; j < n; ++j) {
                t[i][j] = t[j][i] = choice[idx++];
            }
        }
        if (table_is_comm_assoc(t)) fn(t);
        std::size_t pos = 0;
        while (pos < cells) {
            if (++choice[pos] < static_cast<int>(n)) break;
            choice[pos++] = 0;
        }
        if (pos == cells) break;
    }
}

/// Random size-5 commutative associative tables, built from seeded recipes:
/// monogenic semigroups, C5, a group with zero adjoined, identity/zero
/// adjunction to a random size-4 table, and inflation of a size-4 table.
class RandomSemigroupGen {
    std::mt19937_64 rng_;
    std::vector<std::vector<std::vector<int>>> pool4_;  // all comm assoc tables of size 4

  public:
    explicit RandomSemigroupGen(std::uint64_t seed) : rng_(seed) {
        for_each_comm_assoc_table(4, [&](const std::vector<std::vector<int>>& t) {
            pool4_.push_back(t);
        });
    }

    std::vector<std::vector<int>> next5() {
        std::vector<std::vector<int>> t;
        switch (rng_() % 6) {
            case 0: t = monogenic(1 + static_cast<int>(rng_() % 5)); break;
            case 1: t = cyclic(5); break;
            case 2: t = group_with_zero(rng_() % 2 == 0); break;
            case 3: t = adjoin_identity(random4()); break;
            case 4: t = adjoin_zero(random4()); break;
            default: t = inflate(random4(), static_cast<int>(rng_() % 4)); break;
        }
        return relabel(t);
    }

  private:
    const std::vector<std::vector<int>>& random4() { return pool4_[rng_() % pool4_.size()]; }

    static std::vector<std::vector<int>> cyclic(int n) {
        std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = (i + j) % n;
        }
        return t;
    }

    /// Monogenic of size 5: powers x^1..x^5 with x^{m+r} = x^m, m + r = 6.
    static std::vector<std::vector<int>> monogenic(int index) {
        const int m = index, r = 6 - index;
        std::vector<std::vector<int>> t(5, std::vector<int>(5));
        for (int i = 1; i <= 5; ++i) {
            for (int j = 1; j <= 5; ++j) {
                int e = i + j;
                while (e >= m + r) e -= r;
                t[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = e - 1;
            }
        }
        return t;
    }

    /// C4 + 0 or (C2 x C2) + 0; element 4 is the zero.
    static std::vector<std::vector<int>> group_with_zero(bool klein) {
        std::vector<std::vector<int>> t(5, std::vector<int>(5, 4));
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < 4; ++j) {
                t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = klein ? (i ^ j) : (i + j) % 4;
            }
        }
        return t;
    }

    static std::vector<std::vector<int>> adjoin_identity(std::vector<std::vector<int>> t) {
        const int n = static_cast<int>(t.size());
        for (auto& row : t) row.push_back(0);
        t.emplace_back(static_cast<std::size_t>(n) + 1, 0);
        for (int i = 0; i <= n; ++i) {
            t[static_cast<std::size_t>(i)][static_cast<std::size_t>(n)] = i;
            t[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)] = i;
        }
        return t;
    }

    static std::vector<std::vector<int>> adjoin_zero(std::vector<std::vector<int>> t) {
        const int n = static_cast<int>(t.size());
        for (auto& row : t) row.push_back(n);
        t.emplace_back(static_cast<std::size_t>(n) + 1, n);
        return t;
    }

    /// Duplicate element z as a new element that multiplies exactly like z;
    /// the copy is never a product, so it is typically non-regular.
    static std::vector<std::vector<int>> inflate(std::vector<std::vector<int>> t, int z) {
        const int n = static_cast<int>(t.size());
        for (int i = 0; i < n; ++i) {
            t[static_cast<std::size_t>(i)].push_back(t[static_cast<std::size_t>(i)][static_cast<std::size_t>(z)]);
        }
        std::vector<int> row = t[static_cast<std::size_t>(z)];
        t.push_back(row);
        return t;
    }

    std::vector<std::vector<int>> relabel(const std::vector<std::vector<int>>& t) {
        const std::size_t n = t.size();
        std::vector<int> perm(n);
        for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<int>(i);
        std::shuffle(perm.begin(), perm.end(), rng_);
        std::vector<std::vector<int>> out(n, std::vector<int>(n));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                out[static_cast<std::size_t>(perm[i])][static_cast<std::size_t>(perm[j])] =
                    perm[static_cast<std::size_t>(t[i][j])];
            }
        }
        return out;
    }
};

}  // namespace csl
