#pragma once

#include <utility>
#include <vector>

#include "nsatz/poly.hpp"
#include "nsatz/ring.hpp"

namespace nsatz {

/// Pairs (s, s*) of distinct elements whose difference is not a unit.
using ViolatingPairs = std::vector<std::pair<RingValue, RingValue>>;

/// Thrown when a multiset would break the unit-difference property; carries
/// exactly the violating pairs.
class UnitDifferenceViolation : public HypothesisViolation {
  public:
    explicit UnitDifferenceViolation(ViolatingPairs pairs);
    const ViolatingPairs& pairs() const { return pairs_; }

  private:
    ViolatingPairs pairs_;
};

/// Checks every unordered pair of distinct elements; returns the pairs
/// whose difference is not a unit (empty means ok). Pairs are reported in
/// input order: (elements[i], elements[j]) for i < j.
ViolatingPairs check_unit_differences(const std::vector<RingValue>& elements);

/// A finite multiset (S, m) of ring elements: pairwise distinct elements
/// with positive multiplicities and the unit-difference property, verified
/// eagerly at construction. Entry order is construction order and is part
/// of the value (iteration and witness selection depend on it).
class Multiset {
  public:
    struct Entry {
        RingValue element;
        int mult;
    };

    /// Throws UnitDifferenceViolation, or HypothesisViolation for duplicate
    /// elements / nonpositive multiplicities / an empty entry list.
    static Multiset create(const RingSpec& ring, std::vector<Entry> entries);

    const RingSpec& ring() const { return ring_; }
    const std::vector<Entry>& entries() const { return entries_; }
    int support_size() const { return static_cast<int>(entries_.size()); }

    /// d(S) = sum of multiplicities.
    int size() const;

    bool operator==(const Multiset& other) const;

  private:
    Multiset(RingSpec ring, std::vector<Entry> entries)
        : ring_(std::move(ring)), entries_(std::move(entries)) {}

    RingSpec ring_;
    std::vector<Entry> entries_;
};

/// The monic polynomial prod_{s in S} (x_var - s)^m(s), univariate in x_var
/// inside an nvars-variable polynomial ring. Its degree is ms.size().
MultivarPoly vanishing_poly(const Multiset& ms, int var, int nvars);

/// The product grid S_1 x ... x S_n of multisets over a common ring.
class Grid {
  public:
    struct Point {
        std::vector<RingValue> coords;
        ExpVec mults; // m(s) componentwise
    };

    explicit Grid(std::vector<Multiset> factors);

    int arity() const { return static_cast<int>(factors_.size()); }
    const std::vector<Multiset>& factors() const { return factors_; }
    const Multiset& factor(int i) const { return factors_.at(i); }
    const RingSpec& ring() const { return factors_.front().ring(); }

    /// Number of support points, prod |S_i|.
    long point_count() const;

    /// All support points with multiplicity vectors, lexicographic over
    /// factor entry order (last coordinate varies fastest).
    std::vector<Point> points() const;

  private:
    std::vector<Multiset> factors_;
};

} // namespace nsatz
