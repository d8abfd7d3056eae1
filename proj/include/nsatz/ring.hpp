#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>
#include <string_view>

#include "nsatz/errors.hpp"

namespace nsatz {

enum class RingKind { Integers, Rationals, PrimeField, ResidueRing };

class RingValue;

/// A concrete commutative ring: Z, Q, F_p or Z/nZ.
///
/// Immutable value type; copies are cheap (the modulus is shared).
class RingSpec {
  public:
    static RingSpec integers();
    static RingSpec rationals();
    static RingSpec prime_field(const mpz_class& p);  // throws InvalidRing if p is not prime
    static RingSpec residue_ring(const mpz_class& n); // throws InvalidRing if n < 2

    /// Parses the textual grammar "Z" | "Q" | "Fp:<p>" | "Zn:<n>".
    static RingSpec parse(std::string_view text);

    RingKind kind() const { return kind_; }
    const mpz_class& modulus() const; // PrimeField / ResidueRing only
    bool is_field() const { return kind_ == RingKind::Rationals || kind_ == RingKind::PrimeField; }
    bool is_modular() const { return kind_ == RingKind::PrimeField || kind_ == RingKind::ResidueRing; }

    std::string to_string() const;

    bool operator==(const RingSpec& other) const;
    bool operator!=(const RingSpec& other) const { return !(*this == other); }

    RingValue zero() const;
    RingValue one() const;
    /// Image of n under the canonical homomorphism Z -> R.
    RingValue from_integer(const mpz_class& n) const;
    RingValue from_integer(long n) const;
    /// p * q^-1; q must map to a unit. Exact fraction over Q.
    RingValue from_fraction(const mpz_class& p, const mpz_class& q) const;
    /// Parses "123", "-4" or "3/2".
    RingValue value_from_string(std::string_view text) const;

  private:
    RingSpec(RingKind kind, std::shared_ptr<const mpz_class> modulus)
        : kind_(kind), modulus_(std::move(modulus)) {}

    RingKind kind_;
    std::shared_ptr<const mpz_class> modulus_; // null for Z and Q
};

/// An element of a RingSpec in canonical representation: two values are
/// equal iff their reps are identical. Residues live in [0, n); rationals
/// are reduced with positive denominator.
class RingValue {
  public:
    const RingSpec& ring() const { return ring_; }
    const mpq_class& rep() const { return rep_; }

    bool is_zero() const { return sgn(rep_) == 0; }

    bool operator==(const RingValue& other) const;
    bool operator!=(const RingValue& other) const { return !(*this == other); }

    RingValue operator+(const RingValue& other) const;
    RingValue operator-(const RingValue& other) const;
    RingValue operator*(const RingValue& other) const;
    RingValue operator-() const;

    RingValue& operator+=(const RingValue& other) { return *this = *this + other; }
    RingValue& operator-=(const RingValue& other) { return *this = *this - other; }
    RingValue& operator*=(const RingValue& other) { return *this = *this * other; }

    std::string to_string() const; // "5", "-3", "3/2"

  private:
    friend class RingSpec;
    friend bool is_unit(const RingValue&);
    friend RingValue invert(const RingValue&);

    RingValue(RingSpec ring, mpq_class rep) : ring_(std::move(ring)), rep_(std::move(rep)) {}

    /// Reduces rep_ to the ring's canonical form.
    void canonicalize();

    RingSpec ring_;
    mpq_class rep_;
};

/// True iff a has a multiplicative inverse.
bool is_unit(const RingValue& a);

/// Multiplicative inverse; throws NotAUnit when is_unit(a) is false.
RingValue invert(const RingValue& a);

/// a^e for e >= 0, with a^0 = 1 (also for a = 0).
RingValue pow(const RingValue& a, unsigned long e);

/// Throws RingMismatch unless both values live in the same ring.
void require_same_ring(const RingValue& a, const RingValue& b, const char* context);

} // namespace nsatz
