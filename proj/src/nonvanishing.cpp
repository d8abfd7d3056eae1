#include "nsatz/nonvanishing.hpp"

#include <string>
#include <utility>

namespace nsatz {

WitnessProblem::WitnessProblem(MultivarPoly f, ExpVec t, Grid grid)
    : f_(std::move(f)), t_(std::move(t)), grid_(std::move(grid)) {}

WitnessProblem WitnessProblem::create(MultivarPoly f, ExpVec t, Grid grid) {
    const int n = f.nvars();
    if (static_cast<int>(t.size()) != n)
        throw ArityMismatch("target exponent vector has length " + std::to_string(t.size()) +
                            ", polynomial has " + std::to_string(n) + " variables");
    if (grid.arity() != n)
        throw ArityMismatch("grid arity " + std::to_string(grid.arity()) + ", polynomial has " +
                            std::to_string(n) + " variables");
    if (f.ring() != grid.ring())
        throw RingMismatch("polynomial over " + f.ring().to_string() + ", grid over " +
                           grid.ring().to_string());
    int t_sum = 0;
    for (int i = 0; i < n; ++i) {
        if (t[i] < 0) throw HypothesisViolation("t_" + std::to_string(i + 1) + " must be >= 0");
        t_sum += t[i];
    }
    if (f.total_degree() != Degree(t_sum))
        throw HypothesisViolation("deg f = " + f.total_degree().to_string() +
                                  " differs from sum of t_i = " + std::to_string(t_sum));
    if (f.coefficient_of(t).is_zero())
        throw HypothesisViolation("coefficient of x^t is zero");
    for (int i = 0; i < n; ++i) {
        int d = grid.factor(i).size();
        if (d <= t[i])
            throw HypothesisViolation("d(S_" + std::to_string(i + 1) + ") = " + std::to_string(d) +
                                      " is not greater than t_" + std::to_string(i + 1) + " = " +
                                      std::to_string(t[i]));
    }
    return WitnessProblem(std::move(f), std::move(t), std::move(grid));
}

bool WitnessProblem::is_trimmed() const {
    for (int i = 0; i < grid_.arity(); ++i)
        if (grid_.factor(i).size() != t_[i] + 1) return false;
    return true;
}

WitnessProblem normalize_problem(const MultivarPoly& f, const ExpVec& t, const Grid& grid) {
    WitnessProblem checked = WitnessProblem::create(f, t, grid);
    std::vector<Multiset> trimmed;
    trimmed.reserve(grid.arity());
    for (int i = 0; i < grid.arity(); ++i) {
        std::vector<Multiset::Entry> entries = grid.factor(i).entries();
        int excess = grid.factor(i).size() - (t[i] + 1);
        while (excess > 0) {
            if (entries.back().mult > 1) {
                int drop = std::min(excess, entries.back().mult - 1);
                entries.back().mult -= drop;
                excess -= drop;
            } else {
                entries.pop_back();
                --excess;
            }
        }
        trimmed.push_back(Multiset::create(grid.ring(), std::move(entries)));
    }
    return WitnessProblem::create(checked.poly(), checked.target(), Grid(std::move(trimmed)));
}

namespace {

/// Runs body(point, mults, expansion table of f at point) over the grid in
/// deterministic order; stops early when body returns true.
template <typename Body>
void scan_grid(const MultivarPoly& f, const Grid& grid, Body&& body) {
    for (const auto& pt : grid.points()) {
        ExpansionTable table = expand_at(f, pt.coords, pt.mults);
        if (body(pt, table)) return;
    }
}

/// Lexicographic enumeration of u < bounds componentwise.
template <typename Body>
bool for_each_order(const ExpVec& bounds, Body&& body) {
    ExpVec u(bounds.size(), 0);
    while (true) {
        if (body(u)) return true;
        int i = static_cast<int>(u.size()) - 1;
        while (i >= 0 && u[i] + 1 == bounds[i]) {
            u[i] = 0;
            --i;
        }
        if (i < 0) return false;
        ++u[i];
    }
}

} // namespace

RingValue certificate_sum(const WitnessProblem& problem) {
    if (!problem.is_trimmed())
        throw HypothesisViolation("certificate_sum requires d(S_i) = t_i + 1; normalize first");
    const Grid& grid = problem.grid();
    const int n = grid.arity();

    std::vector<AlphaTable> alpha;
    alpha.reserve(n);
    for (int i = 0; i < n; ++i) alpha.push_back(AlphaTable::build(grid.factor(i)));

    RingValue sum = grid.ring().zero();
    scan_grid(problem.poly(), grid, [&](const Grid::Point& pt, const ExpansionTable& table) {
        std::vector<int> idx(n);
        for (int i = 0; i < n; ++i) {
            const auto& entries = grid.factor(i).entries();
            for (std::size_t j = 0; j < entries.size(); ++j)
                if (entries[j].element == pt.coords[i]) idx[i] = static_cast<int>(j);
        }
        for_each_order(pt.mults, [&](const ExpVec& u) {
            RingValue term = table.coeff(u);
            if (!term.is_zero()) {
                for (int i = 0; i < n; ++i) term *= alpha[i].alpha(idx[i], u[i]);
                sum += term;
            }
            return false;
        });
        return false;
    });
    return sum;
}

Witness find_witness(const WitnessProblem& problem, WitnessMode mode) {
    const WitnessProblem* active = &problem;
    std::optional<WitnessProblem> trimmed;
    if (mode == WitnessMode::Algebraic) {
        if (!problem.is_trimmed()) {
            trimmed = normalize_problem(problem.poly(), problem.target(), problem.grid());
            active = &*trimmed;
        }
        // The existence guarantee: the certificate terms sum to c_t != 0,
        // so at least one f_u(s) is nonzero.
        if (certificate_sum(*active) != active->poly().coefficient_of(active->target()))
            throw InternalError("certificate sum differs from the target coefficient");
    }

    std::optional<Witness> found;
    scan_grid(active->poly(), active->grid(),
              [&](const Grid::Point& pt, const ExpansionTable& table) {
                  return for_each_order(pt.mults, [&](const ExpVec& u) {
                      RingValue v = table.coeff(u);
                      if (v.is_zero()) return false;
                      found = Witness{pt.coords, u, v};
                      return true;
                  });
              });
    if (!found)
        throw InternalError("no witness found although the certificate identity guarantees one");
    return *found;
}

bool verify_witness(const WitnessProblem& problem, const Witness& w) {
    const Grid& grid = problem.grid();
    const int n = grid.arity();
    if (static_cast<int>(w.point.size()) != n || static_cast<int>(w.orders.size()) != n)
        return false;
    for (int i = 0; i < n; ++i) {
        int mult = -1;
        for (const auto& e : grid.factor(i).entries())
            if (e.element == w.point[i]) mult = e.mult;
        if (mult < 0 || w.orders[i] < 0 || w.orders[i] >= mult) return false;
    }
    RingValue v = single_expansion_coeff(problem.poly(), w.point, w.orders);
    return !v.is_zero() && v == w.value;
}

} // namespace nsatz
