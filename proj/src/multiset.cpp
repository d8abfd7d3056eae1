#include "nsatz/multiset.hpp"

#include <string>

namespace nsatz {

namespace {

std::string describe(const ViolatingPairs& pairs) {
    std::string msg = "unit-difference violation:";
    for (const auto& [a, b] : pairs)
        msg += " (" + a.to_string() + "," + b.to_string() + ")";
    return msg;
}

} // namespace

UnitDifferenceViolation::UnitDifferenceViolation(ViolatingPairs pairs)
    : HypothesisViolation(describe(pairs)), pairs_(std::move(pairs)) {}

ViolatingPairs check_unit_differences(const std::vector<RingValue>& elements) {
    ViolatingPairs bad;
    for (std::size_t i = 0; i < elements.size(); ++i) {
        for (std::size_t j = i + 1; j < elements.size(); ++j) {
            if (elements[i] == elements[j]) continue;
            if (!is_unit(elements[i] - elements[j]))
                bad.emplace_back(elements[i], elements[j]);
        }
    }
    return bad;
}

Multiset Multiset::create(const RingSpec& ring, std::vector<Entry> entries) {
    if (entries.empty()) throw HypothesisViolation("multiset must be nonempty");
    std::vector<RingValue> elements;
    elements.reserve(entries.size());
    for (const auto& e : entries) {
        require_same_ring(e.element, ring.zero(), "multiset entry");
        if (e.mult < 1) throw HypothesisViolation("multiplicity must be >= 1");
        for (const auto& seen : elements)
            if (seen == e.element)
                throw HypothesisViolation("duplicate multiset element " + e.element.to_string());
        elements.push_back(e.element);
    }
    if (auto bad = check_unit_differences(elements); !bad.empty())
        throw UnitDifferenceViolation(std::move(bad));
    return Multiset(ring, std::move(entries));
}

int Multiset::size() const {
    int d = 0;
    for (const auto& e : entries_) d += e.mult;
    return d;
}

bool Multiset::operator==(const Multiset& other) const {
    if (ring_ != other.ring_ || entries_.size() != other.entries_.size()) return false;
    for (std::size_t i = 0; i < entries_.size(); ++i)
        if (entries_[i].element != other.entries_[i].element ||
            entries_[i].mult != other.entries_[i].mult)
            return false;
    return true;
}

MultivarPoly vanishing_poly(const Multiset& ms, int var, int nvars) {
    if (var < 1 || var > nvars) throw std::out_of_range("vanishing_poly: variable index");
    MultivarPoly x = MultivarPoly::variable(ms.ring(), nvars, var);
    MultivarPoly g = MultivarPoly::constant(ms.ring().one(), nvars);
    for (const auto& e : ms.entries()) {
        MultivarPoly factor = x - MultivarPoly::constant(e.element, nvars);
        g *= factor.pow(static_cast<unsigned long>(e.mult));
    }
    return g;
}

Grid::Grid(std::vector<Multiset> factors) : factors_(std::move(factors)) {
    if (factors_.empty()) throw ArityMismatch("grid needs at least one factor");
    for (const auto& f : factors_)
        if (f.ring() != factors_.front().ring())
            throw RingMismatch("grid factors over mixed rings");
}

long Grid::point_count() const {
    long count = 1;
    for (const auto& f : factors_) count *= f.support_size();
    return count;
}

std::vector<Grid::Point> Grid::points() const {
    const int n = arity();
    std::vector<Point> out;
    out.reserve(static_cast<std::size_t>(point_count()));
    std::vector<int> idx(n, 0);
    while (true) {
        Point p;
        p.coords.reserve(n);
        p.mults.resize(n);
        for (int i = 0; i < n; ++i) {
            const auto& entry = factors_[i].entries()[idx[i]];
            p.coords.push_back(entry.element);
            p.mults[i] = entry.mult;
        }
        out.push_back(std::move(p));
        int i = n - 1;
        while (i >= 0 && idx[i] + 1 == factors_[i].support_size()) {
            idx[i] = 0;
            --i;
        }
        if (i < 0) break;
        ++idx[i];
    }
    return out;
}

} // namespace nsatz
