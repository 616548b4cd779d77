#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <stdexcept>
#include <string>
#include <vector>

namespace soergel {

/// Raised when an operation leaves the coefficient ring (e.g. dividing by a
/// prime that has not been inverted) or mixes incompatible rings.
class CoefficientError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

enum class CoeffKind { Integers, Rationals, PrimeField, LocalizedIntegers };

/// Exact coefficient ring: Z, Q, F_p or Z[1/S] for a finite set S of primes.
/// Values of every ring are carried as mpq_class in canonical form.
class CoeffRing {
public:
    CoeffRing() = default;

    static CoeffRing integers();
    static CoeffRing rationals();
    static CoeffRing prime_field(std::uint64_t p);
    static CoeffRing localized(std::vector<std::uint64_t> primes);
    /// Accepts "Z", "Q", "Fp:<p>", "Zinv:<p,q,...>".
    static CoeffRing parse(const std::string& text);

    CoeffKind kind() const { return kind_; }
    std::uint64_t prime() const { return p_; }
    const std::vector<std::uint64_t>& inverted() const { return inverted_; }
    bool is_field() const { return kind_ == CoeffKind::Rationals || kind_ == CoeffKind::PrimeField; }
    /// 0 for Z, Q, Z[1/S]; p for F_p.
    std::uint64_t characteristic() const { return kind_ == CoeffKind::PrimeField ? p_ : 0; }
    bool inverts(std::uint64_t prime) const;

    /// Canonical representative of v in this ring; throws if v is not an element.
    mpq_class normalize(const mpq_class& v) const;
    bool is_unit(const mpq_class& v) const;
    mpq_class inverse(const mpq_class& v) const;

    std::string name() const;
    std::string spec() const;

    friend bool operator==(const CoeffRing& a, const CoeffRing& b)
    {
        return a.kind_ == b.kind_ && a.p_ == b.p_ && a.inverted_ == b.inverted_;
    }
    friend bool operator!=(const CoeffRing& a, const CoeffRing& b) { return !(a == b); }

private:
    CoeffKind kind_ = CoeffKind::Integers;
    std::uint64_t p_ = 0;
    std::vector<std::uint64_t> inverted_;
};

bool is_prime(std::uint64_t n);

/// A single exact ring element tagged with its ring.
class Coefficient {
public:
    Coefficient() = default;
    Coefficient(const CoeffRing& ring, const mpq_class& value);
    Coefficient(const CoeffRing& ring, long value);

    const CoeffRing& ring() const { return ring_; }
    const mpq_class& value() const { return value_; }
    bool is_zero() const { return sgn(value_) == 0; }
    bool is_unit() const { return ring_.is_unit(value_); }

    Coefficient operator+(const Coefficient& o) const;
    Coefficient operator-(const Coefficient& o) const;
    Coefficient operator*(const Coefficient& o) const;
    Coefficient operator-() const;
    /// Exact division; throws CoefficientError when o is not a unit.
    Coefficient operator/(const Coefficient& o) const;

    friend bool operator==(const Coefficient& a, const Coefficient& b)
    {
        return a.ring_ == b.ring_ && a.value_ == b.value_;
    }

    std::string str() const;

private:
    void check_same(const Coefficient& o) const;

    CoeffRing ring_;
    mpq_class value_;
};

}  // namespace soergel
