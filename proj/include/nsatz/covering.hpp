#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "nsatz/multiset.hpp"
#include "nsatz/nonvanishing.hpp"
#include "nsatz/poly.hpp"
#include "nsatz/ring.hpp"

namespace nsatz {

/// The zero set of (a, x) - b. Stored as given, no normalization.
struct Hyperplane {
    std::vector<RingValue> coeffs;
    RingValue offset;

    /// (a, s) - b.
    RingValue evaluate(const std::vector<RingValue>& point) const;
    /// The defining linear polynomial in nvars variables.
    MultivarPoly linear_poly(int nvars) const;
};

/// Number of planes vanishing at the point (list entries counted with
/// repetition).
int coverage_count(std::span<const Hyperplane> planes, const std::vector<RingValue>& point);

/// A multiplicity-cover instance: a grid containing the origin as a support
/// point, and a list of hyperplanes over the same ring.
class CoverInstance {
  public:
    CoverInstance(Grid grid, std::vector<Hyperplane> planes);

    const Grid& grid() const { return grid_; }
    const std::vector<Hyperplane>& planes() const { return planes_; }

  private:
    Grid grid_;
    std::vector<Hyperplane> planes_;
};

struct MultCoverReport {
    bool valid_cover;  // origin uncovered and every s != 0 covered >= |m(s)| - n + 1 times
    bool bound_holds;  // k >= sum d(S_i) - n
    int k;
    int bound;
    bool theorem_violation; // valid_cover && !bound_holds — impossible unless something is broken
};

/// Checks the multiplicity covering bound over a field. Requires 0 in each
/// factor with multiplicity 1.
MultCoverReport check_mult_cover(const CoverInstance& instance);

/// The refutation machinery behind the covering bound: for a putative
/// counterexample (origin uncovered, k < bound) builds
///   P = prod_i prod_{s != 0} (x_i - s)^{m_i(s)},   F = P - (P(0)/f(0)) f
/// with f the product of the plane polynomials, finds a witness on F with
/// t_i = d(S_i) - 1, and reports the expansion coefficients of P and f
/// there. Exercises the proof mechanics; with a genuinely valid cover both
/// reported coefficients would vanish, contradicting the witness.
struct CoveringCertificate {
    MultivarPoly grid_poly;     // P
    MultivarPoly plane_product; // f
    MultivarPoly refutation;    // F
    Witness witness;
    RingValue grid_poly_coeff;  // P_u(s) at the witness
    RingValue plane_coeff;      // f_u(s) at the witness
};

CoveringCertificate covering_certificate(const CoverInstance& instance);

struct CubeCoverReport {
    bool covers_nonzero_vertices; // every v in {0,1}^n \ {0} lies on some plane
    bool b_product_nonzero;
    int m;
    bool bound_holds;       // m >= n
    bool theorem_violation; // both hypotheses hold yet m < n
};

/// Checks the Boolean-cube covering bound over an arbitrary commutative
/// ring: if the planes cover all nonzero 0/1 vertices and prod b_i != 0,
/// then m >= n must hold.
CubeCoverReport check_cube_cover(std::span<const Hyperplane> planes, const RingSpec& ring, int n);

struct MinCoverResult {
    std::optional<int> min_m;       // smallest plane-set size satisfying the hypotheses
    std::vector<Hyperplane> example;
    bool truncated;                 // search cap hit before exhausting the space
    bool theorem_violation;         // found m < n
    std::uint64_t sets_checked;
};

/// Exhaustively searches plane sets of size 1..n from the pool for the
/// smallest one satisfying the cube-cover hypotheses. Stops with
/// truncated = true once max_checks sets have been examined.
MinCoverResult search_min_cover(const RingSpec& ring, int n, std::span<const Hyperplane> pool,
                                std::uint64_t max_checks = 10'000'000);

/// Searches for a permutation pi with: a_i + b_pi(i) = a_j + b_pi(j) in F_p
/// implies a_i = a_j and b_pi(i) = b_pi(j). Returns the permutation as a
/// 0-based index map, or nullopt if none exists (which would refute the
/// conjecture for k <= p and deserves a loud report).
std::optional<std::vector<int>> check_snevily_fp(long p, const std::vector<long>& a,
                                                 const std::vector<long>& b);

struct SnevilyScan {
    std::uint64_t instances = 0;
    std::optional<std::pair<std::vector<long>, std::vector<long>>> counterexample;
};

/// Runs the permutation search over every canonicalized pair of k-tuples
/// (sorted, first element 0) for the given prime.
SnevilyScan verify_snevily_all(long p, int k);

} // namespace nsatz
