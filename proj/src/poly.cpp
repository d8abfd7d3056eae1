#include "nsatz/poly.hpp"

#include <algorithm>
#include <utility>

namespace nsatz {

int exp_sum(const ExpVec& e) {
    int s = 0;
    for (int v : e) s += v;
    return s;
}

bool GradedLexLess::operator()(const ExpVec& a, const ExpVec& b) const {
    int da = exp_sum(a), db = exp_sum(b);
    if (da != db) return da < db;
    return PureLexLess{}(a, b);
}

bool PureLexLess::operator()(const ExpVec& a, const ExpVec& b) const {
    // x1 is the most significant position.
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

int Degree::value() const {
    if (!finite_) throw Error("degree is minus infinity");
    return value_;
}

std::strong_ordering Degree::operator<=>(const Degree& other) const {
    if (finite_ != other.finite_) return finite_ ? std::strong_ordering::greater : std::strong_ordering::less;
    if (!finite_) return std::strong_ordering::equal;
    return value_ <=> other.value_;
}

std::string Degree::to_string() const {
    return finite_ ? std::to_string(value_) : std::string("-inf");
}

MultivarPoly::MultivarPoly(RingSpec ring, int nvars) : ring_(std::move(ring)), nvars_(nvars) {
    if (nvars < 1) throw ArityMismatch("polynomial needs at least one variable");
}

MultivarPoly MultivarPoly::constant(const RingValue& c, int nvars) {
    MultivarPoly p(c.ring(), nvars);
    p.add_term(ExpVec(nvars, 0), c);
    return p;
}

MultivarPoly MultivarPoly::monomial(const RingValue& c, ExpVec exp) {
    MultivarPoly p(c.ring(), static_cast<int>(exp.size()));
    p.add_term(exp, c);
    return p;
}

MultivarPoly MultivarPoly::variable(const RingSpec& ring, int nvars, int i) {
    if (i < 1 || i > nvars) throw std::out_of_range("variable index out of range");
    ExpVec e(nvars, 0);
    e[i - 1] = 1;
    return monomial(ring.one(), std::move(e));
}

void MultivarPoly::check_arity(const ExpVec& e) const {
    if (static_cast<int>(e.size()) != nvars_)
        throw ArityMismatch("exponent vector has length " + std::to_string(e.size()) +
                            ", expected " + std::to_string(nvars_));
    for (int v : e)
        if (v < 0) throw Error("negative exponent");
}

void MultivarPoly::add_term(const ExpVec& exp, const RingValue& c) {
    check_arity(exp);
    require_same_ring(c, ring_.zero(), "add_term");
    auto it = terms_.find(exp);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_.emplace(exp, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

namespace {

void require_compatible(const MultivarPoly& a, const MultivarPoly& b, const char* context) {
    if (a.ring() != b.ring())
        throw RingMismatch(std::string(context) + ": mixed rings " + a.ring().to_string() +
                           " and " + b.ring().to_string());
    if (a.nvars() != b.nvars())
        throw ArityMismatch(std::string(context) + ": mixed arities " +
                            std::to_string(a.nvars()) + " and " + std::to_string(b.nvars()));
}

} // namespace

MultivarPoly MultivarPoly::operator+(const MultivarPoly& other) const {
    require_compatible(*this, other, "poly add");
    MultivarPoly result = *this;
    for (const auto& [e, c] : other.terms_) result.add_term(e, c);
    return result;
}

MultivarPoly MultivarPoly::operator-(const MultivarPoly& other) const {
    require_compatible(*this, other, "poly sub");
    MultivarPoly result = *this;
    for (const auto& [e, c] : other.terms_) result.add_term(e, -c);
    return result;
}

MultivarPoly MultivarPoly::operator*(const MultivarPoly& other) const {
    require_compatible(*this, other, "poly mul");
    MultivarPoly result(ring_, nvars_);
    ExpVec e(nvars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : other.terms_) {
            for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
            result.add_term(e, ca * cb);
        }
    }
    return result;
}

MultivarPoly MultivarPoly::operator-() const {
    MultivarPoly result(ring_, nvars_);
    for (const auto& [e, c] : terms_) result.terms_.emplace(e, -c);
    return result;
}

MultivarPoly MultivarPoly::scale(const RingValue& c) const {
    require_same_ring(c, ring_.zero(), "poly scale");
    MultivarPoly result(ring_, nvars_);
    for (const auto& [e, coeff] : terms_) result.add_term(e, coeff * c);
    return result;
}

MultivarPoly MultivarPoly::pow(unsigned long e) const {
    MultivarPoly result = constant(ring_.one(), nvars_);
    MultivarPoly base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

bool MultivarPoly::operator==(const MultivarPoly& other) const {
    if (ring_ != other.ring_ || nvars_ != other.nvars_) return false;
    if (terms_.size() != other.terms_.size()) return false;
    auto it = other.terms_.begin();
    for (const auto& [e, c] : terms_) {
        if (e != it->first || c != it->second) return false;
        ++it;
    }
    return true;
}

Degree MultivarPoly::total_degree() const {
    if (terms_.empty()) return Degree::minus_infinity();
    // Map is graded-lex ascending, so the last term has maximal total degree.
    return Degree(exp_sum(terms_.rbegin()->first));
}

Degree MultivarPoly::degree_in(int i) const {
    if (i < 1 || i > nvars_) throw std::out_of_range("variable index out of range");
    if (terms_.empty()) return Degree::minus_infinity();
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[i - 1]);
    return Degree(d);
}

RingValue MultivarPoly::coefficient_of(const ExpVec& t) const {
    check_arity(t);
    auto it = terms_.find(t);
    return it == terms_.end() ? ring_.zero() : it->second;
}

RingValue MultivarPoly::evaluate(const std::vector<RingValue>& point) const {
    if (static_cast<int>(point.size()) != nvars_)
        throw ArityMismatch("evaluation point has wrong length");
    for (const auto& v : point) require_same_ring(v, ring_.zero(), "evaluate");
    RingValue acc = ring_.zero();
    for (const auto& [e, c] : terms_) {
        RingValue term = c;
        for (int i = 0; i < nvars_; ++i)
            if (e[i] > 0) term *= nsatz::pow(point[i], static_cast<unsigned long>(e[i]));
        acc += term;
    }
    return acc;
}

std::string MultivarPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    // Graded-lex descending: iterate the ascending map in reverse.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string cs = c.to_string();
        bool negative = cs.front() == '-';
        if (negative) cs.erase(0, 1);
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        std::string mono;
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "x" + std::to_string(i + 1);
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty()) {
            out += cs;
        } else if (cs == "1") {
            out += mono;
        } else {
            out += cs + "*" + mono;
        }
    }
    return out;
}

RingValue ExpansionTable::coeff(const ExpVec& u) const {
    if (u.size() != base_point_.size()) throw ArityMismatch("expansion coefficient query length");
    auto it = coeffs_.find(u);
    return it == coeffs_.end() ? ring_.zero() : it->second;
}

ExpansionTable expand_at(const MultivarPoly& p, const std::vector<RingValue>& s,
                         const ExpVec& bounds) {
    const int n = p.nvars();
    if (static_cast<int>(s.size()) != n || static_cast<int>(bounds.size()) != n)
        throw ArityMismatch("expand_at: base point / bounds length mismatch");
    for (const auto& v : s) require_same_ring(v, p.ring().zero(), "expand_at");

    // Substitute x_i = y_i + s_i one variable at a time: split into
    // coefficient layers by the x_i exponent and run the Ruffini-Horner
    // shift on that sequence of layer polynomials.
    MultivarPoly shifted = p;
    for (int var = 0; var < n; ++var) {
        if (s[var].is_zero()) continue;
        int deg = 0;
        for (const auto& [e, c] : shifted.terms()) deg = std::max(deg, e[var]);
        std::vector<MultivarPoly> layers(deg + 1, MultivarPoly(p.ring(), n));
        for (const auto& [e, c] : shifted.terms()) {
            ExpVec rest = e;
            int k = rest[var];
            rest[var] = 0;
            layers[k].add_term(rest, c);
        }
        for (int pass = 0; pass < deg; ++pass)
            for (int k = deg - 1; k >= pass; --k)
                layers[k] += layers[k + 1].scale(s[var]);
        MultivarPoly rebuilt(p.ring(), n);
        for (int k = 0; k <= deg; ++k) {
            for (const auto& [e, c] : layers[k].terms()) {
                ExpVec full = e;
                full[var] = k;
                rebuilt.add_term(full, c);
            }
        }
        shifted = std::move(rebuilt);
    }

    ExpVec truncation = bounds;
    for (int i = 0; i < n; ++i) {
        Degree d = p.degree_in(i + 1);
        if (d.is_finite()) truncation[i] = std::max(truncation[i], d.value() + 1);
    }
    return ExpansionTable(s, std::move(truncation), shifted.terms(), p.ring());
}

RingValue single_expansion_coeff(const MultivarPoly& p, const std::vector<RingValue>& s,
                                 const ExpVec& u) {
    const int n = p.nvars();
    if (static_cast<int>(s.size()) != n || static_cast<int>(u.size()) != n)
        throw ArityMismatch("single_expansion_coeff: length mismatch");
    for (const auto& v : s) require_same_ring(v, p.ring().zero(), "single_expansion_coeff");

    RingValue acc = p.ring().zero();
    for (const auto& [k, c] : p.terms()) {
        RingValue term = c;
        bool zero = false;
        for (int i = 0; i < n && !zero; ++i) {
            if (u[i] > k[i]) {
                // C(k_i, u_i) = 0; skip before any power is formed.
                zero = true;
                continue;
            }
            term *= binomial_in_ring(p.ring(), static_cast<unsigned long>(k[i]),
                                     static_cast<unsigned long>(u[i]));
            term *= pow(s[i], static_cast<unsigned long>(k[i] - u[i]));
        }
        if (!zero) acc += term;
    }
    return acc;
}

RingValue binomial_in_ring(const RingSpec& ring, unsigned long n, unsigned long k) {
    if (k > n) return ring.zero();
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return ring.from_integer(b);
}

} // namespace nsatz
