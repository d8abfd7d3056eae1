#include "nsatz/hermite.hpp"

#include <string>

namespace nsatz {

namespace {

void require_univariate(const MultivarPoly& f, const Multiset& ms, const char* context) {
    if (f.nvars() != 1) throw ArityMismatch(std::string(context) + ": polynomial must be univariate");
    if (f.ring() != ms.ring())
        throw RingMismatch(std::string(context) + ": polynomial ring " + f.ring().to_string() +
                           " vs multiset ring " + ms.ring().to_string());
}

int find_entry(const Multiset& ms, const RingValue& s0) {
    const auto& entries = ms.entries();
    for (std::size_t i = 0; i < entries.size(); ++i)
        if (entries[i].element == s0) return static_cast<int>(i);
    throw HypothesisViolation(s0.to_string() + " is not in the multiset support");
}

} // namespace

DivisibilityStatus divisibility_status(const MultivarPoly& f, const Multiset& ms) {
    require_univariate(f, ms, "divisibility_status");
    for (const auto& entry : ms.entries()) {
        ExpansionTable table = expand_at(f, {entry.element}, {entry.mult});
        for (int u = 0; u < entry.mult; ++u) {
            if (!table.coeff({u}).is_zero())
                return {false, std::make_pair(entry.element, u)};
        }
    }
    return {true, std::nullopt};
}

std::vector<std::vector<MultivarPoly>> base_polynomial_family(const Multiset& ms) {
    const RingSpec& ring = ms.ring();
    const auto& entries = ms.entries();
    std::vector<std::vector<MultivarPoly>> family;
    family.reserve(entries.size());

    MultivarPoly x = MultivarPoly::variable(ring, 1, 1);
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const RingValue& s0 = entries[i].element;
        const int m0 = entries[i].mult;

        // Auxiliary f^(v) = (x - s0)^v * prod_{s != s0} ((x - s)/(s0 - s))^m(s).
        MultivarPoly tail = MultivarPoly::constant(ring.one(), 1);
        for (std::size_t j = 0; j < entries.size(); ++j) {
            if (j == i) continue;
            const RingValue& s = entries[j].element;
            RingValue inv = invert(s0 - s);
            MultivarPoly factor = (x - MultivarPoly::constant(s, 1)).scale(inv);
            tail *= factor.pow(static_cast<unsigned long>(entries[j].mult));
        }
        MultivarPoly shift = x - MultivarPoly::constant(s0, 1);
        std::vector<MultivarPoly> aux;
        aux.reserve(m0);
        aux.push_back(tail);
        for (int v = 1; v < m0; ++v) aux.push_back(aux.back() * shift);

        // Downward induction: h^(s0,u0) = f^(u0) - sum_{u0<u<m0} f^(u0)_u(s0) h^(s0,u).
        std::vector<MultivarPoly> h(m0, MultivarPoly(ring, 1));
        for (int u0 = m0 - 1; u0 >= 0; --u0) {
            MultivarPoly acc = aux[u0];
            ExpansionTable table = expand_at(aux[u0], {s0}, {m0});
            for (int u = u0 + 1; u < m0; ++u)
                acc -= h[u].scale(table.coeff({u}));
            h[u0] = std::move(acc);
        }
        family.push_back(std::move(h));
    }
    return family;
}

MultivarPoly base_polynomial(const Multiset& ms, const RingValue& s0, int u0) {
    require_same_ring(s0, ms.ring().zero(), "base_polynomial");
    int entry = find_entry(ms, s0);
    if (u0 < 0 || u0 >= ms.entries()[entry].mult)
        throw HypothesisViolation("order " + std::to_string(u0) + " out of range for element " +
                                  s0.to_string());
    return base_polynomial_family(ms)[entry][u0];
}

InterpolationData InterpolationData::create(Multiset ms,
                                            std::vector<std::vector<RingValue>> values) {
    if (values.size() != ms.entries().size())
        throw ArityMismatch("interpolation data: one value list per support element required");
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (static_cast<int>(values[i].size()) != ms.entries()[i].mult)
            throw ArityMismatch("interpolation data: element " +
                                ms.entries()[i].element.to_string() + " needs exactly " +
                                std::to_string(ms.entries()[i].mult) + " values");
        for (const auto& y : values[i]) require_same_ring(y, ms.ring().zero(), "interpolation value");
    }
    return InterpolationData(std::move(ms), std::move(values));
}

MultivarPoly hermite_interpolate(const InterpolationData& data) {
    const auto family = base_polynomial_family(data.multiset());
    MultivarPoly f(data.multiset().ring(), 1);
    for (std::size_t i = 0; i < family.size(); ++i)
        for (std::size_t u = 0; u < family[i].size(); ++u)
            f += family[i][u].scale(data.values()[i][u]);
    return f;
}

AlphaTable AlphaTable::build(const Multiset& ms) {
    const int t = ms.size() - 1;
    const auto family = base_polynomial_family(ms);
    std::vector<std::vector<RingValue>> alphas;
    alphas.reserve(family.size());
    for (const auto& h_list : family) {
        std::vector<RingValue> row;
        row.reserve(h_list.size());
        for (const auto& h : h_list) row.push_back(h.coefficient_of({t}));
        alphas.push_back(std::move(row));
    }
    AlphaTable table(ms, std::move(alphas), t);
    for (int l = 0; l <= t; ++l) {
        RingValue expected = l == t ? ms.ring().one() : ms.ring().zero();
        if (table.moment_sum(l) != expected)
            throw InternalError("alpha table moment identity failed at l = " + std::to_string(l) +
                                " for multiset over " + ms.ring().to_string());
    }
    return table;
}

RingValue AlphaTable::moment_sum(int l) const {
    const RingSpec& ring = ms_.ring();
    RingValue acc = ring.zero();
    const auto& entries = ms_.entries();
    for (std::size_t i = 0; i < entries.size(); ++i) {
        for (int u = 0; u < entries[i].mult; ++u) {
            if (u > l) continue; // C(l,u) = 0; the negative exponent never forms
            RingValue term = alphas_[i][u];
            term *= binomial_in_ring(ring, static_cast<unsigned long>(l),
                                     static_cast<unsigned long>(u));
            term *= pow(entries[i].element, static_cast<unsigned long>(l - u));
            acc += term;
        }
    }
    return acc;
}

} // namespace nsatz
