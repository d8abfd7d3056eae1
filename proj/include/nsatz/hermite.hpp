#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "nsatz/multiset.hpp"
#include "nsatz/poly.hpp"

namespace nsatz {

struct DivisibilityStatus {
    bool divisible;
    /// First (entry order, then ascending order u) pair with f_u(s) != 0.
    std::optional<std::pair<RingValue, int>> first_failure;
};

/// True iff f_u(s) = 0 for every s in the support and 0 <= u < m(s); for a
/// unit-difference multiset this is equivalent to the vanishing polynomial
/// of ms dividing f. Works entirely through expansion coefficients, no ring
/// division.
DivisibilityStatus divisibility_status(const MultivarPoly& f, const Multiset& ms);

/// The basis polynomial h^(s0,u0): degree < d(S), expansion coefficients
/// equal to the Kronecker delta on admissible pairs, i.e. h_u(s) = 1 at
/// (s0,u0) and 0 at every other (s, u < m(s)).
MultivarPoly base_polynomial(const Multiset& ms, const RingValue& s0, int u0);

/// All basis polynomials at once, indexed [entry][order]. Shares the
/// auxiliary-polynomial work across the downward induction per entry.
std::vector<std::vector<MultivarPoly>> base_polynomial_family(const Multiset& ms);

/// Prescribed values y_{s,u}, one per admissible pair (s, u < m(s)),
/// aligned with the multiset's entry order.
class InterpolationData {
  public:
    static InterpolationData create(Multiset ms, std::vector<std::vector<RingValue>> values);

    const Multiset& multiset() const { return ms_; }
    const std::vector<std::vector<RingValue>>& values() const { return values_; }

  private:
    InterpolationData(Multiset ms, std::vector<std::vector<RingValue>> values)
        : ms_(std::move(ms)), values_(std::move(values)) {}

    Multiset ms_;
    std::vector<std::vector<RingValue>> values_;
};

/// The unique polynomial of degree < d(S) with f_u(s) = y_{s,u} for every
/// admissible pair, assembled as sum y_{s,u} h^(s,u).
MultivarPoly hermite_interpolate(const InterpolationData& data);

/// Coefficient functionals alpha(s,u): the x^t coefficients of the basis
/// polynomials, t = d(S) - 1. They satisfy the moment identities
///   sum_{s,u} alpha(s,u) C(l,u) s^(l-u) = 0 for l < t, and 1 for l = t
/// (verified after construction; l > t is undetermined).
class AlphaTable {
  public:
    static AlphaTable build(const Multiset& ms);

    const Multiset& multiset() const { return ms_; }
    const std::vector<std::vector<RingValue>>& alphas() const { return alphas_; }
    const RingValue& alpha(int entry, int u) const { return alphas_.at(entry).at(u); }
    int t() const { return t_; }

    /// The Lemma-style moment sum for exponent l.
    RingValue moment_sum(int l) const;

  private:
    AlphaTable(Multiset ms, std::vector<std::vector<RingValue>> alphas, int t)
        : ms_(std::move(ms)), alphas_(std::move(alphas)), t_(t) {}

    Multiset ms_;
    std::vector<std::vector<RingValue>> alphas_;
    int t_;
};

} // namespace nsatz
