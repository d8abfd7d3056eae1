#include "nsatz/covering.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace nsatz {

RingValue Hyperplane::evaluate(const std::vector<RingValue>& point) const {
    if (point.size() != coeffs.size()) throw ArityMismatch("hyperplane/point length mismatch");
    RingValue acc = -offset;
    for (std::size_t i = 0; i < coeffs.size(); ++i) acc += coeffs[i] * point[i];
    return acc;
}

MultivarPoly Hyperplane::linear_poly(int nvars) const {
    if (static_cast<int>(coeffs.size()) != nvars)
        throw ArityMismatch("hyperplane arity " + std::to_string(coeffs.size()) + " vs nvars " +
                            std::to_string(nvars));
    MultivarPoly p = MultivarPoly::constant(-offset, nvars);
    for (int i = 0; i < nvars; ++i) {
        ExpVec e(nvars, 0);
        e[i] = 1;
        p.add_term(e, coeffs[i]);
    }
    return p;
}

int coverage_count(std::span<const Hyperplane> planes, const std::vector<RingValue>& point) {
    int count = 0;
    for (const auto& h : planes)
        if (h.evaluate(point).is_zero()) ++count;
    return count;
}

CoverInstance::CoverInstance(Grid grid, std::vector<Hyperplane> planes)
    : grid_(std::move(grid)), planes_(std::move(planes)) {
    const RingSpec& ring = grid_.ring();
    for (const auto& h : planes_) {
        if (static_cast<int>(h.coeffs.size()) != grid_.arity())
            throw ArityMismatch("hyperplane arity differs from grid arity");
        require_same_ring(h.offset, ring.zero(), "cover instance plane");
        for (const auto& c : h.coeffs) require_same_ring(c, ring.zero(), "cover instance plane");
    }
    for (int i = 0; i < grid_.arity(); ++i) {
        bool has_origin = false;
        for (const auto& e : grid_.factor(i).entries())
            if (e.element.is_zero()) has_origin = true;
        if (!has_origin)
            throw HypothesisViolation("0 missing from factor " + std::to_string(i + 1));
    }
}

namespace {

void require_mult_cover_hypotheses(const CoverInstance& instance) {
    const Grid& grid = instance.grid();
    if (!grid.ring().is_field())
        throw HypothesisViolation("multiplicity cover bound is stated over a field, got " +
                                  grid.ring().to_string());
    for (int i = 0; i < grid.arity(); ++i)
        for (const auto& e : grid.factor(i).entries())
            if (e.element.is_zero() && e.mult != 1)
                throw HypothesisViolation("m_" + std::to_string(i + 1) +
                                          "(0) = " + std::to_string(e.mult) + ", must be 1");
}

} // namespace

MultCoverReport check_mult_cover(const CoverInstance& instance) {
    require_mult_cover_hypotheses(instance);
    const Grid& grid = instance.grid();
    const int n = grid.arity();

    bool valid = true;
    for (const auto& pt : grid.points()) {
        bool is_origin = std::all_of(pt.coords.begin(), pt.coords.end(),
                                     [](const RingValue& v) { return v.is_zero(); });
        int count = coverage_count(instance.planes(), pt.coords);
        if (is_origin) {
            if (count != 0) valid = false;
        } else {
            int needed = exp_sum(pt.mults) - n + 1;
            if (count < needed) valid = false;
        }
        if (!valid) break;
    }

    int bound = -n;
    for (int i = 0; i < n; ++i) bound += grid.factor(i).size();
    int k = static_cast<int>(instance.planes().size());
    MultCoverReport report;
    report.valid_cover = valid;
    report.k = k;
    report.bound = bound;
    report.bound_holds = k >= bound;
    report.theorem_violation = valid && !report.bound_holds;
    return report;
}

CoveringCertificate covering_certificate(const CoverInstance& instance) {
    require_mult_cover_hypotheses(instance);
    const Grid& grid = instance.grid();
    const RingSpec& ring = grid.ring();
    const int n = grid.arity();

    std::vector<RingValue> origin(n, ring.zero());
    if (coverage_count(instance.planes(), origin) != 0)
        throw HypothesisViolation("origin is covered; the refutation needs f(0) != 0");

    int bound = -n;
    for (int i = 0; i < n; ++i) bound += grid.factor(i).size();
    int k = static_cast<int>(instance.planes().size());
    if (k >= bound)
        throw HypothesisViolation("k = " + std::to_string(k) + " >= bound = " +
                                  std::to_string(bound) + ": not a putative counterexample");

    // P = prod_i prod_{s != 0} (x_i - s)^{m_i(s)}
    MultivarPoly grid_poly = MultivarPoly::constant(ring.one(), n);
    for (int i = 0; i < n; ++i) {
        std::vector<Multiset::Entry> nonzero;
        for (const auto& e : grid.factor(i).entries())
            if (!e.element.is_zero()) nonzero.push_back(e);
        if (nonzero.empty()) continue;
        grid_poly *= vanishing_poly(Multiset::create(ring, std::move(nonzero)), i + 1, n);
    }

    MultivarPoly plane_product = MultivarPoly::constant(ring.one(), n);
    for (const auto& h : instance.planes()) plane_product *= h.linear_poly(n);

    RingValue ratio = grid_poly.evaluate(origin) * invert(plane_product.evaluate(origin));
    MultivarPoly refutation = grid_poly - plane_product.scale(ratio);

    ExpVec t(n);
    for (int i = 0; i < n; ++i) t[i] = grid.factor(i).size() - 1;
    WitnessProblem problem = WitnessProblem::create(refutation, t, grid);
    Witness w = find_witness(problem, WitnessMode::Algebraic);

    CoveringCertificate cert{std::move(grid_poly), std::move(plane_product),
                             std::move(refutation), w,
                             ring.zero(), ring.zero()};
    cert.grid_poly_coeff = single_expansion_coeff(cert.grid_poly, w.point, w.orders);
    cert.plane_coeff = single_expansion_coeff(cert.plane_product, w.point, w.orders);
    return cert;
}

CubeCoverReport check_cube_cover(std::span<const Hyperplane> planes, const RingSpec& ring, int n) {
    if (n < 1) throw ArityMismatch("cube dimension must be >= 1");
    if (n > 24) throw HypothesisViolation("cube dimension too large for an exhaustive vertex scan");
    for (const auto& h : planes) {
        if (static_cast<int>(h.coeffs.size()) != n)
            throw ArityMismatch("hyperplane arity differs from cube dimension");
        require_same_ring(h.offset, ring.zero(), "cube cover plane");
    }

    bool covers = true;
    std::vector<RingValue> vertex(n, ring.zero());
    const RingValue one = ring.one();
    for (unsigned long mask = 1; mask < (1ul << n) && covers; ++mask) {
        for (int i = 0; i < n; ++i) vertex[i] = (mask >> i) & 1 ? one : ring.zero();
        if (coverage_count(planes, vertex) == 0) covers = false;
    }

    RingValue b_product = ring.one();
    for (const auto& h : planes) b_product *= h.offset;

    CubeCoverReport report;
    report.covers_nonzero_vertices = covers;
    report.b_product_nonzero = !b_product.is_zero();
    report.m = static_cast<int>(planes.size());
    report.bound_holds = report.m >= n;
    report.theorem_violation =
        report.covers_nonzero_vertices && report.b_product_nonzero && !report.bound_holds;
    return report;
}

MinCoverResult search_min_cover(const RingSpec& ring, int n, std::span<const Hyperplane> pool,
                                std::uint64_t max_checks) {
    MinCoverResult result;
    result.truncated = false;
    result.theorem_violation = false;
    result.sets_checked = 0;

    const int pool_size = static_cast<int>(pool.size());
    std::vector<Hyperplane> subset;
    for (int size = 1; size <= n; ++size) {
        if (size > pool_size) break;
        std::vector<int> idx(size);
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            if (result.sets_checked >= max_checks) {
                result.truncated = true;
                return result;
            }
            ++result.sets_checked;
            subset.clear();
            for (int i : idx) subset.push_back(pool[i]);
            CubeCoverReport report = check_cube_cover(subset, ring, n);
            if (report.covers_nonzero_vertices && report.b_product_nonzero) {
                result.min_m = size;
                result.example = subset;
                result.theorem_violation = size < n;
                return result;
            }
            // next combination
            int i = size - 1;
            while (i >= 0 && idx[i] == pool_size - size + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return result;
}

namespace {

bool is_small_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

struct SnevilySearch {
    long p;
    std::vector<long> a_class_val, b_class_val; // distinct canonical values
    std::vector<int> a_class_of;                // per canonical position
    std::vector<int> b_remaining;               // per b-class
    std::vector<int> choice;                    // chosen b-class per position
    std::vector<int> sum_cell;                  // sum value -> cell id, -1 if unused
    std::vector<int> sum_uses;

    bool solve(int pos) {
        if (pos == static_cast<int>(a_class_of.size())) return true;
        int ac = a_class_of[pos];
        // Positions within one a-class are interchangeable; force their
        // b-class choices nondecreasing to skip symmetric branches.
        int start = (pos > 0 && a_class_of[pos - 1] == ac) ? choice[pos - 1] : 0;
        for (int bc = start; bc < static_cast<int>(b_class_val.size()); ++bc) {
            if (b_remaining[bc] == 0) continue;
            long sum = (a_class_val[ac] + b_class_val[bc]) % p;
            int cell = ac * static_cast<int>(b_class_val.size()) + bc;
            if (sum_cell[sum] != -1 && sum_cell[sum] != cell) continue;
            int saved = sum_cell[sum];
            sum_cell[sum] = cell;
            ++sum_uses[sum];
            --b_remaining[bc];
            choice[pos] = bc;
            if (solve(pos + 1)) return true;
            ++b_remaining[bc];
            if (--sum_uses[sum] == 0) sum_cell[sum] = -1;
            else sum_cell[sum] = saved;
        }
        return false;
    }
};

std::vector<int> sorted_order(const std::vector<long>& v) {
    std::vector<int> order(v.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int i, int j) { return v[i] < v[j]; });
    return order;
}

} // namespace

std::optional<std::vector<int>> check_snevily_fp(long p, const std::vector<long>& a,
                                                 const std::vector<long>& b) {
    if (!is_small_prime(p)) throw InvalidRing("p = " + std::to_string(p) + " is not prime");
    if (a.size() != b.size())
        throw ArityMismatch("sequences have lengths " + std::to_string(a.size()) + " and " +
                            std::to_string(b.size()));
    const int k = static_cast<int>(a.size());
    if (k > p)
        throw HypothesisViolation("k = " + std::to_string(k) + " exceeds p = " + std::to_string(p));
    if (k == 0) return std::vector<int>{};

    std::vector<long> ar(k), br(k);
    for (int i = 0; i < k; ++i) ar[i] = ((a[i] % p) + p) % p;
    for (int i = 0; i < k; ++i) br[i] = ((b[i] % p) + p) % p;

    // Canonicalize: sort, then translate the first element to 0. Sums shift
    // uniformly by the two offsets, so collisions are preserved exactly.
    std::vector<int> order_a = sorted_order(ar), order_b = sorted_order(br);
    std::vector<long> ca(k), cb(k);
    for (int i = 0; i < k; ++i) ca[i] = ar[order_a[i]] - ar[order_a[0]];
    for (int i = 0; i < k; ++i) cb[i] = br[order_b[i]] - br[order_b[0]];

    SnevilySearch search;
    search.p = p;
    search.a_class_of.resize(k);
    std::vector<int> b_class_of(k);
    for (int i = 0; i < k; ++i) {
        if (i == 0 || ca[i] != ca[i - 1]) search.a_class_val.push_back(ca[i]);
        search.a_class_of[i] = static_cast<int>(search.a_class_val.size()) - 1;
        if (i == 0 || cb[i] != cb[i - 1]) search.b_class_val.push_back(cb[i]);
        b_class_of[i] = static_cast<int>(search.b_class_val.size()) - 1;
    }
    search.b_remaining.assign(search.b_class_val.size(), 0);
    for (int c : b_class_of) ++search.b_remaining[c];
    search.choice.resize(k);
    search.sum_cell.assign(p, -1);
    search.sum_uses.assign(p, 0);

    if (!search.solve(0)) return std::nullopt;

    // Expand class choices back to concrete original indices.
    std::vector<std::vector<int>> b_indices_by_class(search.b_class_val.size());
    for (int i = 0; i < k; ++i) b_indices_by_class[b_class_of[i]].push_back(order_b[i]);
    std::vector<std::size_t> next(search.b_class_val.size(), 0);
    std::vector<int> perm(k);
    for (int i = 0; i < k; ++i) {
        int bc = search.choice[i];
        perm[order_a[i]] = b_indices_by_class[bc][next[bc]++];
    }
    return perm;
}

SnevilyScan verify_snevily_all(long p, int k) {
    if (!is_small_prime(p)) throw InvalidRing("p = " + std::to_string(p) + " is not prime");
    if (k > p || k < 1)
        throw HypothesisViolation("need 1 <= k <= p, got k = " + std::to_string(k));

    // All nondecreasing k-tuples over [0, p) starting at 0.
    std::vector<std::vector<long>> tuples;
    std::vector<long> current(k, 0);
    auto gen = [&](auto&& self, int pos) -> void {
        if (pos == k) {
            tuples.push_back(current);
            return;
        }
        for (long v = current[pos - 1]; v < p; ++v) {
            current[pos] = v;
            self(self, pos + 1);
        }
    };
    if (k == 1) {
        tuples.push_back(current);
    } else {
        gen(gen, 1);
    }

    SnevilyScan scan;
    for (const auto& a : tuples) {
        for (const auto& b : tuples) {
            ++scan.instances;
            if (!check_snevily_fp(p, a, b)) {
                scan.counterexample = std::make_pair(a, b);
                return scan;
            }
        }
    }
    return scan;
}

} // namespace nsatz
