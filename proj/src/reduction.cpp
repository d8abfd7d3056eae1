#include "nsatz/reduction.hpp"

#include <optional>
#include <string>

namespace nsatz {

namespace {

struct Basis {
    std::vector<MultivarPoly> g;     // vanishing polynomials, monic
    std::vector<int> degree;         // |S_i|
};

Basis prepare(const MultivarPoly& f, const std::vector<Multiset>& sets) {
    const int n = f.nvars();
    if (static_cast<int>(sets.size()) != n)
        throw ArityMismatch("reduce: " + std::to_string(sets.size()) + " sets for " +
                            std::to_string(n) + " variables");
    Basis basis;
    for (int i = 0; i < n; ++i) {
        if (sets[i].ring() != f.ring())
            throw RingMismatch("reduce: set " + std::to_string(i + 1) + " over " +
                               sets[i].ring().to_string() + ", polynomial over " +
                               f.ring().to_string());
        for (const auto& e : sets[i].entries())
            if (e.mult != 1)
                throw HypothesisViolation("reduce: S_" + std::to_string(i + 1) +
                                          " must be a plain set (all multiplicities 1)");
        basis.g.push_back(vanishing_poly(sets[i], i + 1, n));
        basis.degree.push_back(sets[i].size());
    }
    return basis;
}

/// The term to rewrite next under the strategy, or nullopt when reduced.
std::optional<ExpVec> pick_reducible(const MultivarPoly& p, const std::vector<int>& degree,
                                     ReductionStrategy strategy) {
    auto reducible = [&](const ExpVec& e) {
        for (std::size_t i = 0; i < degree.size(); ++i)
            if (e[i] >= degree[i]) return true;
        return false;
    };
    switch (strategy) {
        case ReductionStrategy::GradedLexLargest:
            for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
                if (reducible(it->first)) return it->first;
            return std::nullopt;
        case ReductionStrategy::GradedLexSmallest:
            for (const auto& [e, c] : p.terms())
                if (reducible(e)) return e;
            return std::nullopt;
        case ReductionStrategy::PureLexLargest: {
            std::optional<ExpVec> best;
            PureLexLess less;
            for (const auto& [e, c] : p.terms())
                if (reducible(e) && (!best || less(*best, e))) best = e;
            return best;
        }
    }
    return std::nullopt;
}

} // namespace

ReductionResult reduce(const MultivarPoly& f, const std::vector<Multiset>& sets,
                       ReductionStrategy strategy) {
    const int n = f.nvars();
    Basis basis = prepare(f, sets);

    MultivarPoly work = f;
    std::vector<MultivarPoly> quotients(n, MultivarPoly(f.ring(), n));
    while (auto e = pick_reducible(work, basis.degree, strategy)) {
        // Smallest i whose x_i^{d_i} divides the chosen term.
        int i = 0;
        while ((*e)[i] < basis.degree[i]) ++i;
        RingValue c = work.coefficient_of(*e);
        ExpVec cofactor = *e;
        cofactor[i] -= basis.degree[i];
        MultivarPoly step = MultivarPoly::monomial(c, cofactor);
        work -= step * basis.g[i];
        quotients[i] += step;
    }

    // Theorem contract, checked rather than assumed.
    Degree df = f.total_degree();
    for (int i = 0; i < n; ++i) {
        if (work.degree_in(i + 1) >= Degree(basis.degree[i]))
            throw InternalError("reduction remainder degree bound failed in x" +
                                std::to_string(i + 1));
        if (quotients[i].total_degree() > df - basis.degree[i])
            throw InternalError("reduction quotient degree bound failed for h" +
                                std::to_string(i + 1));
    }

    return {std::move(work), std::move(quotients)};
}

bool in_ideal(const MultivarPoly& f, const std::vector<Multiset>& sets) {
    return reduce(f, sets).remainder.is_zero();
}

bool groebner_remainder_stability(const MultivarPoly& f, const std::vector<Multiset>& sets,
                                  std::span<const ReductionStrategy> strategies) {
    std::optional<MultivarPoly> first;
    for (ReductionStrategy s : strategies) {
        MultivarPoly r = reduce(f, sets, s).remainder;
        if (!first)
            first = std::move(r);
        else if (*first != r)
            return false;
    }
    return true;
}

} // namespace nsatz
