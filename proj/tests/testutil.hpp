#pragma once

#include <algorithm>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "nsatz/multiset.hpp"
#include "nsatz/poly.hpp"
#include "nsatz/ring.hpp"

namespace nsatz::testutil {

using Rng = std::mt19937_64;

inline int rand_int(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

/// A random element with small numerator/denominator, nonzero on request.
inline RingValue random_value(Rng& rng, const RingSpec& ring, bool nonzero = false) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        RingValue v = ring.zero();
        switch (ring.kind()) {
            case RingKind::Integers: v = ring.from_integer(rand_int(rng, -9, 9)); break;
            case RingKind::Rationals:
                v = ring.from_fraction(rand_int(rng, -9, 9), rand_int(rng, 1, 6));
                break;
            case RingKind::PrimeField:
            case RingKind::ResidueRing: {
                long n = ring.modulus().get_si();
                v = ring.from_integer(rand_int(rng, 0, static_cast<int>(n - 1)));
                break;
            }
        }
        if (!nonzero || !v.is_zero()) return v;
    }
    return ring.one();
}

/// Random unit-difference multiset: greedily grows the support from shuffled
/// candidates, so rings like Z/12 naturally stay within their small feasible
/// supports. Multiplicities are uniform in [1, max_mult].
inline Multiset random_multiset(Rng& rng, const RingSpec& ring, int target_support, int max_mult) {
    std::vector<RingValue> candidates;
    if (ring.is_modular()) {
        long n = ring.modulus().get_si();
        for (long v = 0; v < n; ++v) candidates.push_back(ring.from_integer(v));
    } else if (ring.kind() == RingKind::Integers) {
        // Only adjacent integers have unit differences in Z.
        int base = rand_int(rng, -5, 5);
        candidates.push_back(ring.from_integer(base));
        candidates.push_back(ring.from_integer(base + 1));
    } else {
        for (int v = -6; v <= 6; ++v) candidates.push_back(ring.from_integer(v));
        candidates.push_back(ring.from_fraction(1, 2));
        candidates.push_back(ring.from_fraction(-3, 2));
    }
    std::shuffle(candidates.begin(), candidates.end(), rng);

    std::vector<RingValue> support;
    for (const auto& c : candidates) {
        if (static_cast<int>(support.size()) == target_support) break;
        bool ok = true;
        for (const auto& s : support)
            if (c == s || !is_unit(c - s)) ok = false;
        if (ok) support.push_back(c);
    }
    std::vector<Multiset::Entry> entries;
    for (const auto& s : support) entries.push_back({s, rand_int(rng, 1, max_mult)});
    return Multiset::create(ring, std::move(entries));
}

/// Random polynomial with total degree <= max_deg.
inline MultivarPoly random_poly(Rng& rng, const RingSpec& ring, int nvars, int max_deg,
                                int terms) {
    MultivarPoly p(ring, nvars);
    for (int t = 0; t < terms; ++t) {
        ExpVec e(nvars, 0);
        int budget = rand_int(rng, 0, max_deg);
        for (int i = 0; i < nvars; ++i) {
            e[i] = rand_int(rng, 0, budget);
            budget -= e[i];
        }
        p.add_term(e, random_value(rng, ring));
    }
    return p;
}

inline std::vector<RingValue> random_point(Rng& rng, const RingSpec& ring, int nvars) {
    std::vector<RingValue> s;
    for (int i = 0; i < nvars; ++i) s.push_back(random_value(rng, ring));
    return s;
}

/// Rebuilds sum_u coeffs[u] * (x - s)^u symbolically.
inline MultivarPoly reassemble_expansion(const ExpansionTable& table, const RingSpec& ring) {
    const int n = static_cast<int>(table.base_point().size());
    MultivarPoly acc(ring, n);
    for (const auto& [u, c] : table.coeffs()) {
        MultivarPoly term = MultivarPoly::constant(c, n);
        for (int i = 0; i < n; ++i) {
            if (u[i] == 0) continue;
            MultivarPoly shifted = MultivarPoly::variable(ring, n, i + 1) -
                                   MultivarPoly::constant(table.base_point()[i], n);
            term *= shifted.pow(static_cast<unsigned long>(u[i]));
        }
        acc += term;
    }
    return acc;
}

/// Test oracle: univariate long division by a monic divisor (exact in any
/// commutative ring). Returns the remainder.
inline MultivarPoly monic_division_remainder(const MultivarPoly& f, const MultivarPoly& g) {
    if (f.nvars() != 1 || g.nvars() != 1) throw std::logic_error("univariate oracle only");
    int dg = g.degree_in(1).value();
    if (g.coefficient_of({dg}) != f.ring().one()) throw std::logic_error("divisor must be monic");
    MultivarPoly r = f;
    while (!r.is_zero() && r.degree_in(1) >= Degree(dg)) {
        int dr = r.degree_in(1).value();
        MultivarPoly shift = MultivarPoly::monomial(r.coefficient_of({dr}), {dr - dg});
        r -= shift * g;
    }
    return r;
}

/// Test oracle over Q: solves for the coefficients of the degree < d(S)
/// polynomial with prescribed expansion values by Gaussian elimination on
/// the moment matrix  M[(s,u)][j] = C(j,u) s^(j-u).
inline std::optional<MultivarPoly> solve_interpolation_q(const Multiset& ms,
                                                         const std::vector<std::vector<RingValue>>& values) {
    const RingSpec& ring = ms.ring();
    if (ring.kind() != RingKind::Rationals) throw std::logic_error("oracle is Q-only");
    const int d = ms.size();

    std::vector<std::vector<RingValue>> m; // rows: [d coefficients | rhs]
    for (std::size_t i = 0; i < ms.entries().size(); ++i) {
        const auto& entry = ms.entries()[i];
        for (int u = 0; u < entry.mult; ++u) {
            std::vector<RingValue> row;
            for (int j = 0; j < d; ++j) {
                if (u > j) {
                    row.push_back(ring.zero());
                    continue;
                }
                RingValue c = binomial_in_ring(ring, j, u);
                c *= pow(entry.element, static_cast<unsigned long>(j - u));
                row.push_back(c);
            }
            row.push_back(values[i][u]);
            m.push_back(std::move(row));
        }
    }

    for (int col = 0; col < d; ++col) {
        int pivot = -1;
        for (int row = col; row < d; ++row)
            if (!m[row][col].is_zero()) {
                pivot = row;
                break;
            }
        if (pivot < 0) return std::nullopt;
        std::swap(m[col], m[pivot]);
        RingValue inv = invert(m[col][col]);
        for (int j = col; j <= d; ++j) m[col][j] *= inv;
        for (int row = 0; row < d; ++row) {
            if (row == col || m[row][col].is_zero()) continue;
            RingValue factor = m[row][col];
            for (int j = col; j <= d; ++j) m[row][j] -= factor * m[col][j];
        }
    }

    MultivarPoly result(ring, 1);
    for (int j = 0; j < d; ++j) result.add_term({j}, m[j][d]);
    return result;
}

} // namespace nsatz::testutil
