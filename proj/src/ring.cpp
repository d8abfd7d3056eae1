#include "nsatz/ring.hpp"

#include <utility>

namespace nsatz {

namespace {

// Deterministic primality by trial division; moduli at this scale are small.
bool is_prime(const mpz_class& p) {
    if (p < 2) return false;
    if (p == 2) return true;
    if (mpz_even_p(p.get_mpz_t())) return false;
    mpz_class d(3);
    while (d * d <= p) {
        if (p % d == 0) return false;
        d += 2;
    }
    return true;
}

} // namespace

RingSpec RingSpec::integers() { return RingSpec(RingKind::Integers, nullptr); }

RingSpec RingSpec::rationals() { return RingSpec(RingKind::Rationals, nullptr); }

RingSpec RingSpec::prime_field(const mpz_class& p) {
    if (!is_prime(p)) throw InvalidRing("prime field modulus " + p.get_str() + " is not prime");
    return RingSpec(RingKind::PrimeField, std::make_shared<const mpz_class>(p));
}

RingSpec RingSpec::residue_ring(const mpz_class& n) {
    if (n < 2) throw InvalidRing("residue ring modulus must be >= 2, got " + n.get_str());
    return RingSpec(RingKind::ResidueRing, std::make_shared<const mpz_class>(n));
}

RingSpec RingSpec::parse(std::string_view text) {
    if (text == "Z") return integers();
    if (text == "Q") return rationals();
    auto parse_modulus = [&](std::string_view digits) {
        if (digits.empty()) throw ParseError("missing modulus in ring spec '" + std::string(text) + "'");
        for (char c : digits)
            if (c < '0' || c > '9') throw ParseError("bad modulus in ring spec '" + std::string(text) + "'");
        return mpz_class(std::string(digits), 10);
    };
    if (text.starts_with("Fp:")) return prime_field(parse_modulus(text.substr(3)));
    if (text.starts_with("Zn:")) return residue_ring(parse_modulus(text.substr(3)));
    throw ParseError("unknown ring spec '" + std::string(text) + "' (expected Z, Q, Fp:<p> or Zn:<n>)");
}

const mpz_class& RingSpec::modulus() const {
    if (!modulus_) throw Error("ring " + to_string() + " has no modulus");
    return *modulus_;
}

std::string RingSpec::to_string() const {
    switch (kind_) {
        case RingKind::Integers: return "Z";
        case RingKind::Rationals: return "Q";
        case RingKind::PrimeField: return "Fp:" + modulus_->get_str();
        case RingKind::ResidueRing: return "Zn:" + modulus_->get_str();
    }
    return "?";
}

bool RingSpec::operator==(const RingSpec& other) const {
    if (kind_ != other.kind_) return false;
    if (!modulus_) return true;
    return modulus_ == other.modulus_ || *modulus_ == *other.modulus_;
}

RingValue RingSpec::zero() const { return RingValue(*this, mpq_class(0)); }

RingValue RingSpec::one() const { return from_integer(1); }

RingValue RingSpec::from_integer(const mpz_class& n) const {
    RingValue v(*this, mpq_class(n));
    v.canonicalize();
    return v;
}

RingValue RingSpec::from_integer(long n) const { return from_integer(mpz_class(n)); }

RingValue RingSpec::from_fraction(const mpz_class& p, const mpz_class& q) const {
    if (q == 0) throw Error("zero denominator");
    if (kind_ == RingKind::Rationals) {
        mpq_class r(p, q);
        r.canonicalize();
        return RingValue(*this, std::move(r));
    }
    return from_integer(p) * invert(from_integer(q));
}

RingValue RingSpec::value_from_string(std::string_view text) const {
    auto is_int = [](std::string_view s) {
        if (s.starts_with("-") || s.starts_with("+")) s.remove_prefix(1);
        if (s.empty()) return false;
        for (char c : s)
            if (c < '0' || c > '9') return false;
        return true;
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        if (!is_int(text)) throw ParseError("bad ring value '" + std::string(text) + "'");
        return from_integer(mpz_class(std::string(text), 10));
    }
    auto num = text.substr(0, slash), den = text.substr(slash + 1);
    if (!is_int(num) || !is_int(den)) throw ParseError("bad ring value '" + std::string(text) + "'");
    return from_fraction(mpz_class(std::string(num), 10), mpz_class(std::string(den), 10));
}

void RingValue::canonicalize() {
    rep_.canonicalize();
    if (ring_.is_modular()) {
        // Residue in [0, n); floor division keeps negatives canonical.
        mpz_class r;
        mpz_fdiv_r(r.get_mpz_t(), rep_.get_num().get_mpz_t(), ring_.modulus().get_mpz_t());
        rep_ = mpq_class(std::move(r));
    }
}

bool RingValue::operator==(const RingValue& other) const {
    return ring_ == other.ring_ && rep_ == other.rep_;
}

RingValue RingValue::operator+(const RingValue& other) const {
    require_same_ring(*this, other, "add");
    RingValue v(ring_, rep_ + other.rep_);
    v.canonicalize();
    return v;
}

RingValue RingValue::operator-(const RingValue& other) const {
    require_same_ring(*this, other, "subtract");
    RingValue v(ring_, rep_ - other.rep_);
    v.canonicalize();
    return v;
}

RingValue RingValue::operator*(const RingValue& other) const {
    require_same_ring(*this, other, "multiply");
    RingValue v(ring_, rep_ * other.rep_);
    v.canonicalize();
    return v;
}

RingValue RingValue::operator-() const {
    RingValue v(ring_, -rep_);
    v.canonicalize();
    return v;
}

std::string RingValue::to_string() const { return rep_.get_str(); }

bool is_unit(const RingValue& a) {
    switch (a.ring().kind()) {
        case RingKind::Integers: return a.rep_ == 1 || a.rep_ == -1;
        case RingKind::Rationals:
        case RingKind::PrimeField: return !a.is_zero();
        case RingKind::ResidueRing: {
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), a.rep_.get_num().get_mpz_t(), a.ring().modulus().get_mpz_t());
            return g == 1;
        }
    }
    return false;
}

RingValue invert(const RingValue& a) {
    switch (a.ring().kind()) {
        case RingKind::Integers:
            if (a.rep_ == 1 || a.rep_ == -1) return a;
            throw NotAUnit(a.to_string() + " is not a unit in Z");
        case RingKind::Rationals: {
            if (a.is_zero()) throw NotAUnit("0 is not a unit");
            mpq_class inv(a.rep_.get_den(), a.rep_.get_num());
            inv.canonicalize();
            return RingValue(a.ring(), std::move(inv));
        }
        case RingKind::PrimeField:
        case RingKind::ResidueRing: {
            mpz_class inv;
            int ok = mpz_invert(inv.get_mpz_t(), a.rep_.get_num().get_mpz_t(),
                                a.ring().modulus().get_mpz_t());
            if (!ok)
                throw NotAUnit(a.to_string() + " is not a unit in " + a.ring().to_string());
            return RingValue(a.ring(), mpq_class(std::move(inv)));
        }
    }
    throw NotAUnit("unreachable");
}

RingValue pow(const RingValue& a, unsigned long e) {
    RingValue result = a.ring().one();
    RingValue base = a;
    while (e > 0) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

void require_same_ring(const RingValue& a, const RingValue& b, const char* context) {
    if (a.ring() != b.ring())
        throw RingMismatch(std::string(context) + ": mixed rings " + a.ring().to_string() +
                           " and " + b.ring().to_string());
}

} // namespace nsatz
