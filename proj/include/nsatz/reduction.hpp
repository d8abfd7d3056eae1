#pragma once

#include <span>
#include <vector>

#include "nsatz/multiset.hpp"
#include "nsatz/poly.hpp"

namespace nsatz {

/// Which reducible term to rewrite first. All strategies provably yield the
/// same remainder ({g_i} is a Groebner basis for any term order); keeping
/// several lets that be checked at runtime.
enum class ReductionStrategy {
    GradedLexLargest, // default: graded-lex-largest reducible term, smallest i on ties
    PureLexLargest,
    GradedLexSmallest,
};

/// f = remainder + sum_i quotients[i] * g_i with deg_{x_i}(remainder) < |S_i|
/// and total_degree(quotients[i]) <= total_degree(f) - |S_i|.
struct ReductionResult {
    MultivarPoly remainder;
    std::vector<MultivarPoly> quotients;
};

/// Divides f by G = {g_1(x_1), ..., g_n(x_n)} where g_i is the vanishing
/// polynomial of S_i. The sets must be plain (all multiplicities 1).
ReductionResult reduce(const MultivarPoly& f, const std::vector<Multiset>& sets,
                       ReductionStrategy strategy = ReductionStrategy::GradedLexLargest);

/// True iff f vanishes on the whole grid S_1 x ... x S_n, decided by
/// remainder == 0.
bool in_ideal(const MultivarPoly& f, const std::vector<Multiset>& sets);

/// Runs every strategy and reports whether all remainders coincide.
bool groebner_remainder_stability(const MultivarPoly& f, const std::vector<Multiset>& sets,
                                  std::span<const ReductionStrategy> strategies);

} // namespace nsatz
