#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "nsatz/ring.hpp"

namespace nsatz {

/// Exponent vector; component i is the exponent of x_{i+1}.
using ExpVec = std::vector<int>;

int exp_sum(const ExpVec& e);

/// Ascending graded-lexicographic order with x1 > x2 > ... > xn.
struct GradedLexLess {
    bool operator()(const ExpVec& a, const ExpVec& b) const;
};

/// Ascending pure lexicographic order with x1 > x2 > ... > xn.
struct PureLexLess {
    bool operator()(const ExpVec& a, const ExpVec& b) const;
};

/// Polynomial degree: an integer or minus infinity (degree of the zero
/// polynomial), which compares less than every integer.
class Degree {
  public:
    static Degree minus_infinity() { return Degree(); }
    Degree(int v) : finite_(true), value_(v) {} // NOLINT: implicit by design
    Degree() : finite_(false), value_(0) {}

    bool is_finite() const { return finite_; }
    int value() const; // throws on minus infinity

    /// Degree arithmetic: -inf - k = -inf.
    Degree operator-(int k) const { return finite_ ? Degree(value_ - k) : minus_infinity(); }

    std::strong_ordering operator<=>(const Degree& other) const;
    bool operator==(const Degree& other) const = default;

    std::string to_string() const;

  private:
    bool finite_;
    int value_;
};

/// Sparse multivariate polynomial over a RingSpec, keyed by exponent
/// vector. Normalized: no stored coefficient is zero.
class MultivarPoly {
  public:
    using TermMap = std::map<ExpVec, RingValue, GradedLexLess>;

    MultivarPoly(RingSpec ring, int nvars);

    static MultivarPoly zero(const RingSpec& ring, int nvars) { return MultivarPoly(ring, nvars); }
    static MultivarPoly constant(const RingValue& c, int nvars);
    static MultivarPoly monomial(const RingValue& c, ExpVec exp);
    /// x_i (1-based).
    static MultivarPoly variable(const RingSpec& ring, int nvars, int i);

    const RingSpec& ring() const { return ring_; }
    int nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    MultivarPoly operator+(const MultivarPoly& other) const;
    MultivarPoly operator-(const MultivarPoly& other) const;
    MultivarPoly operator*(const MultivarPoly& other) const;
    MultivarPoly operator-() const;
    MultivarPoly scale(const RingValue& c) const;
    MultivarPoly pow(unsigned long e) const;

    MultivarPoly& operator+=(const MultivarPoly& other) { return *this = *this + other; }
    MultivarPoly& operator-=(const MultivarPoly& other) { return *this = *this - other; }
    MultivarPoly& operator*=(const MultivarPoly& other) { return *this = *this * other; }

    bool operator==(const MultivarPoly& other) const;
    bool operator!=(const MultivarPoly& other) const { return !(*this == other); }

    Degree total_degree() const;
    /// Max exponent of x_i (1-based); minus infinity for the zero polynomial.
    Degree degree_in(int i) const;
    /// Stored coefficient at t, or ring zero.
    RingValue coefficient_of(const ExpVec& t) const;
    RingValue evaluate(const std::vector<RingValue>& point) const;

    /// Adds c * x^exp and renormalizes. The workhorse for building results.
    void add_term(const ExpVec& exp, const RingValue& c);

    /// Canonical text form, graded-lex descending: "3*x1^2*x2 - x1 + 4".
    std::string to_string() const;

  private:
    void check_arity(const ExpVec& e) const;

    RingSpec ring_;
    int nvars_;
    TermMap terms_;
};

/// The coefficients f_u(s) of f(x) = sum_u f_u(s) (x-s)^u at a base point s.
///
/// The full expansion is computed, so a missing exponent vector means the
/// coefficient is genuinely zero; `truncation` records the componentwise
/// bounds the caller asked for (widened to cover the polynomial's degrees).
class ExpansionTable {
  public:
    ExpansionTable(std::vector<RingValue> base_point, ExpVec truncation,
                   MultivarPoly::TermMap coeffs, RingSpec ring)
        : base_point_(std::move(base_point)), truncation_(std::move(truncation)),
          coeffs_(std::move(coeffs)), ring_(std::move(ring)) {}

    const std::vector<RingValue>& base_point() const { return base_point_; }
    const ExpVec& truncation() const { return truncation_; }
    const MultivarPoly::TermMap& coeffs() const { return coeffs_; }

    /// f_u(s); ring zero when no coefficient is stored at u.
    RingValue coeff(const ExpVec& u) const;

  private:
    std::vector<RingValue> base_point_;
    ExpVec truncation_;
    MultivarPoly::TermMap coeffs_;
    RingSpec ring_;
};

/// All expansion coefficients f_u(s) for u < bounds componentwise (and in
/// fact all u up to the degree of p), by iterated per-variable Taylor shift.
ExpansionTable expand_at(const MultivarPoly& p, const std::vector<RingValue>& s,
                         const ExpVec& bounds);

/// One coefficient f_u(s) by the direct sum over terms of p:
///   f_u(s) = sum_k c_k prod_i C(k_i, u_i) s_i^(k_i - u_i).
/// Independent of the Taylor-shift path; the two must agree.
RingValue single_expansion_coeff(const MultivarPoly& p, const std::vector<RingValue>& s,
                                 const ExpVec& u);

/// Binomial coefficient C(n, k) in Z, mapped into the ring. Zero when k > n.
RingValue binomial_in_ring(const RingSpec& ring, unsigned long n, unsigned long k);

} // namespace nsatz
