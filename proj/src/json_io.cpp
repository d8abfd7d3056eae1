#include "nsatz/json_io.hpp"

#include <string>

namespace nsatz {

namespace {

[[noreturn]] void bad(const std::string& what) { throw ParseError("JSON: " + what); }

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing key '") + key + "'");
    return j.at(key);
}

std::string str(const Json& j, const char* what) {
    if (!j.is_string()) bad(std::string(what) + " must be a string");
    return j.get<std::string>();
}

int integer(const Json& j, const char* what) {
    if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
    return j.get<int>();
}

RingSpec ring_from(const Json& j, const RingSpec* context, const char* where) {
    if (j.is_object() && j.contains("ring")) {
        RingSpec declared = RingSpec::parse(str(j.at("ring"), "ring spec"));
        if (context && declared != *context)
            bad(std::string(where) + " declares ring " + declared.to_string() +
                " but the context ring is " + context->to_string());
        return declared;
    }
    if (!context) bad(std::string(where) + " needs a 'ring' key (no context ring given)");
    return *context;
}

} // namespace

Json poly_to_json(const MultivarPoly& p) {
    Json terms = Json::array();
    // Graded-lex descending, matching the text form.
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
        terms.push_back({{"exp", it->first}, {"coeff", it->second.to_string()}});
    return {{"nvars", p.nvars()}, {"terms", std::move(terms)}};
}

MultivarPoly poly_from_json(const Json& j, const RingSpec& ring) {
    int nvars = integer(field(j, "nvars"), "nvars");
    MultivarPoly p(ring, nvars);
    const Json& terms = field(j, "terms");
    if (!terms.is_array()) bad("'terms' must be an array");
    for (const Json& term : terms) {
        const Json& exp = field(term, "exp");
        if (!exp.is_array()) bad("'exp' must be an array");
        ExpVec e;
        for (const Json& v : exp) e.push_back(integer(v, "exponent"));
        p.add_term(e, ring.value_from_string(str(field(term, "coeff"), "coeff")));
    }
    return p;
}

Json multiset_to_json(const Multiset& ms) {
    Json elements = Json::array();
    for (const auto& e : ms.entries())
        elements.push_back({{"value", e.element.to_string()}, {"mult", e.mult}});
    return {{"ring", ms.ring().to_string()}, {"elements", std::move(elements)}};
}

Multiset multiset_from_json(const Json& j, const RingSpec* context_ring) {
    RingSpec ring = ring_from(j, context_ring, "multiset");
    const Json& elements = field(j, "elements");
    if (!elements.is_array()) bad("'elements' must be an array");
    std::vector<Multiset::Entry> entries;
    for (const Json& e : elements) {
        int mult = e.contains("mult") ? integer(e.at("mult"), "mult") : 1;
        entries.push_back({ring.value_from_string(str(field(e, "value"), "value")), mult});
    }
    return Multiset::create(ring, std::move(entries));
}

Json grid_to_json(const Grid& g) {
    Json out = Json::array();
    for (const auto& f : g.factors()) out.push_back(multiset_to_json(f));
    return out;
}

Grid grid_from_json(const Json& j, const RingSpec* context_ring) {
    if (!j.is_array()) bad("grid must be an array of multisets");
    std::vector<Multiset> factors;
    for (const Json& f : j) factors.push_back(multiset_from_json(f, context_ring));
    return Grid(std::move(factors));
}

Json hyperplane_to_json(const Hyperplane& h) {
    Json a = Json::array();
    for (const auto& c : h.coeffs) a.push_back(c.to_string());
    return {{"a", std::move(a)}, {"b", h.offset.to_string()}};
}

Hyperplane hyperplane_from_json(const Json& j, const RingSpec& ring) {
    const Json& a = field(j, "a");
    if (!a.is_array()) bad("'a' must be an array");
    Hyperplane h{{}, ring.value_from_string(str(field(j, "b"), "b"))};
    for (const Json& c : a) h.coeffs.push_back(ring.value_from_string(str(c, "a entry")));
    return h;
}

CoverInstance cover_instance_from_json(const Json& j, const RingSpec* context_ring) {
    Grid grid = grid_from_json(field(j, "grid"), context_ring);
    const Json& planes_json = field(j, "planes");
    if (!planes_json.is_array()) bad("'planes' must be an array");
    std::vector<Hyperplane> planes;
    for (const Json& p : planes_json) planes.push_back(hyperplane_from_json(p, grid.ring()));
    return CoverInstance(std::move(grid), std::move(planes));
}

Json witness_to_json(const Witness& w) {
    Json point = Json::array();
    for (const auto& v : w.point) point.push_back(v.to_string());
    return {{"point", std::move(point)}, {"orders", w.orders}, {"value", w.value.to_string()}};
}

Json interpolation_data_to_json(const InterpolationData& data) {
    Json values = Json::array();
    const auto& entries = data.multiset().entries();
    for (std::size_t i = 0; i < entries.size(); ++i)
        for (int u = 0; u < entries[i].mult; ++u)
            values.push_back({{"element", entries[i].element.to_string()},
                              {"order", u},
                              {"y", data.values()[i][u].to_string()}});
    return {{"multiset", multiset_to_json(data.multiset())}, {"values", std::move(values)}};
}

InterpolationData interpolation_data_from_json(const Json& j, const RingSpec* context_ring) {
    Multiset ms = multiset_from_json(field(j, "multiset"), context_ring);
    const Json& values_json = field(j, "values");
    if (!values_json.is_array()) bad("'values' must be an array");

    const auto& entries = ms.entries();
    std::vector<std::vector<RingValue>> values;
    std::vector<std::vector<bool>> seen;
    for (const auto& e : entries) {
        values.emplace_back(static_cast<std::size_t>(e.mult), ms.ring().zero());
        seen.emplace_back(static_cast<std::size_t>(e.mult), false);
    }
    for (const Json& v : values_json) {
        RingValue element = ms.ring().value_from_string(str(field(v, "element"), "element"));
        int order = integer(field(v, "order"), "order");
        int entry = -1;
        for (std::size_t i = 0; i < entries.size(); ++i)
            if (entries[i].element == element) entry = static_cast<int>(i);
        if (entry < 0) bad("value for " + element.to_string() + " outside the support");
        if (order < 0 || order >= entries[entry].mult)
            bad("order " + std::to_string(order) + " out of range for " + element.to_string());
        if (seen[entry][order]) bad("duplicate value for (" + element.to_string() + "," +
                                    std::to_string(order) + ")");
        seen[entry][order] = true;
        values[entry][order] = ms.ring().value_from_string(str(field(v, "y"), "y"));
    }
    for (std::size_t i = 0; i < entries.size(); ++i)
        for (int u = 0; u < entries[i].mult; ++u)
            if (!seen[i][u])
                bad("missing value for (" + entries[i].element.to_string() + "," +
                    std::to_string(u) + ")");
    return InterpolationData::create(std::move(ms), std::move(values));
}

} // namespace nsatz
