#pragma once

#include <vector>

#include "nsatz/hermite.hpp"
#include "nsatz/multiset.hpp"
#include "nsatz/poly.hpp"

namespace nsatz {

/// A nonvanishing instance: f of total degree sum(t_i) with a nonzero
/// coefficient at x^t, and a grid whose multiset sizes exceed t
/// componentwise. Construction validates all hypotheses.
class WitnessProblem {
  public:
    /// Throws HypothesisViolation naming the failed hypothesis.
    static WitnessProblem create(MultivarPoly f, ExpVec t, Grid grid);

    const MultivarPoly& poly() const { return f_; }
    const ExpVec& target() const { return t_; }
    const Grid& grid() const { return grid_; }

    /// True iff d(S_i) = t_i + 1 for every i.
    bool is_trimmed() const;

  private:
    WitnessProblem(MultivarPoly f, ExpVec t, Grid grid);

    MultivarPoly f_;
    ExpVec t_;
    Grid grid_;
};

/// Validates the hypotheses and trims each multiset down to d_i = t_i + 1,
/// reducing the last entry's multiplicity before dropping entries.
WitnessProblem normalize_problem(const MultivarPoly& f, const ExpVec& t, const Grid& grid);

/// A certified nonvanishing point: u < m(s) componentwise and
/// value = f_u(s) != 0.
struct Witness {
    std::vector<RingValue> point;
    ExpVec orders;
    RingValue value;
};

/// The interpolation-certificate sum
///   sum_{s in S} sum_{u < m(s)} alpha(s,u) f_u(s),
/// with alpha(s,u) = prod_i alpha_i(s_i,u_i) from the per-factor alpha
/// tables. Requires a trimmed problem (d_i = t_i + 1); the result always
/// equals the coefficient of x^t in f.
RingValue certificate_sum(const WitnessProblem& problem);

enum class WitnessMode {
    Algebraic,  // trims, then scans the certificate terms
    Exhaustive, // scans all (s, u < m(s)) pairs of the untrimmed grid
};

/// First pair (s, u) in deterministic grid order with f_u(s) != 0. Throws
/// InternalError if none exists — which the certificate identity rules out
/// for any valid problem.
Witness find_witness(const WitnessProblem& problem, WitnessMode mode);

/// Re-derives f_u(s) by the direct-sum formula and re-checks u < m(s);
/// independent of the search path that produced the witness.
bool verify_witness(const WitnessProblem& problem, const Witness& w);

} // namespace nsatz
