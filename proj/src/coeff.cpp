#include "soergel/coeff.hpp"

#include <algorithm>
#include <sstream>

namespace soergel {

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

CoeffRing CoeffRing::integers() { return CoeffRing{}; }

CoeffRing CoeffRing::rationals()
{
    CoeffRing r;
    r.kind_ = CoeffKind::Rationals;
    return r;
}

CoeffRing CoeffRing::prime_field(std::uint64_t p)
{
    if (!is_prime(p))
        throw CoefficientError("F_p requires a prime, got " + std::to_string(p));
    if (p > (std::uint64_t{1} << 31))
        throw CoefficientError("prime too large for the modular kernels");
    CoeffRing r;
    r.kind_ = CoeffKind::PrimeField;
    r.p_ = p;
    return r;
}

CoeffRing CoeffRing::localized(std::vector<std::uint64_t> primes)
{
    for (auto p : primes)
        if (!is_prime(p))
            throw CoefficientError("cannot invert non-prime " + std::to_string(p));
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    if (primes.empty())
        return integers();
    CoeffRing r;
    r.kind_ = CoeffKind::LocalizedIntegers;
    r.inverted_ = std::move(primes);
    return r;
}

CoeffRing CoeffRing::parse(const std::string& text)
{
    if (text == "Z")
        return integers();
    if (text == "Q")
        return rationals();
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw CoefficientError("unknown coefficient ring '" + text + "'");
    std::string head = text.substr(0, colon);
    std::string tail = text.substr(colon + 1);
    auto to_u64 = [&](const std::string& s) {
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
            throw CoefficientError("malformed number '" + s + "' in '" + text + "'");
        return static_cast<std::uint64_t>(std::stoull(s));
    };
    if (head == "Fp")
        return prime_field(to_u64(tail));
    if (head == "Zinv") {
        std::vector<std::uint64_t> primes;
        std::stringstream ss(tail);
        std::string item;
        while (std::getline(ss, item, ','))
            primes.push_back(to_u64(item));
        if (primes.empty())
            throw CoefficientError("Zinv needs at least one prime");
        return localized(std::move(primes));
    }
    throw CoefficientError("unknown coefficient ring '" + text + "'");
}

bool CoeffRing::inverts(std::uint64_t prime) const
{
    switch (kind_) {
    case CoeffKind::Integers:
        return false;
    case CoeffKind::Rationals:
        return true;
    case CoeffKind::PrimeField:
        return prime != p_;
    case CoeffKind::LocalizedIntegers:
        return std::binary_search(inverted_.begin(), inverted_.end(), prime);
    }
    return false;
}

namespace {

// Strips every inverted prime from |v|; what remains must be 1 for v to be a unit.
mpz_class strip_primes(mpz_class v, const std::vector<std::uint64_t>& primes)
{
    v = abs(v);
    for (auto p : primes) {
        mpz_class pp(static_cast<unsigned long>(p));
        while (v != 0 && mpz_divisible_p(v.get_mpz_t(), pp.get_mpz_t()))
            v /= pp;
    }
    return v;
}

mpz_class mod_inverse(const mpz_class& a, std::uint64_t p)
{
    mpz_class inv;
    mpz_class pp(static_cast<unsigned long>(p));
    if (mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), pp.get_mpz_t()) == 0)
        throw CoefficientError("zero has no inverse in F_" + std::to_string(p));
    return inv;
}

}  // namespace

mpq_class CoeffRing::normalize(const mpq_class& v) const
{
    switch (kind_) {
    case CoeffKind::Integers:
        if (v.get_den() != 1)
            throw CoefficientError("non-integral value " + v.get_str() + " in Z");
        return v;
    case CoeffKind::Rationals:
        return v;
    case CoeffKind::PrimeField: {
        mpz_class pp(static_cast<unsigned long>(p_));
        mpz_class den = v.get_den() % pp;
        if (den == 0)
            throw CoefficientError("denominator divisible by p in F_" + std::to_string(p_));
        mpz_class num = v.get_num() * mod_inverse(den, p_);
        mpz_class r;
        mpz_fdiv_r(r.get_mpz_t(), num.get_mpz_t(), pp.get_mpz_t());
        return mpq_class(r);
    }
    case CoeffKind::LocalizedIntegers:
        if (strip_primes(v.get_den(), inverted_) != 1)
            throw CoefficientError("denominator of " + v.get_str() + " has a prime not inverted in " + name());
        return v;
    }
    return v;
}

bool CoeffRing::is_unit(const mpq_class& v) const
{
    if (sgn(v) == 0)
        return false;
    switch (kind_) {
    case CoeffKind::Integers:
        return v == 1 || v == -1;
    case CoeffKind::Rationals:
    case CoeffKind::PrimeField:
        return true;
    case CoeffKind::LocalizedIntegers:
        return strip_primes(v.get_num(), inverted_) == 1;
    }
    return false;
}

mpq_class CoeffRing::inverse(const mpq_class& v) const
{
    if (!is_unit(v))
        throw CoefficientError(v.get_str() + " is not invertible in " + name());
    if (kind_ == CoeffKind::PrimeField)
        return mpq_class(mod_inverse(v.get_num(), p_));
    mpq_class r = 1 / v;
    r.canonicalize();
    return r;
}

std::string CoeffRing::name() const
{
    switch (kind_) {
    case CoeffKind::Integers:
        return "Z";
    case CoeffKind::Rationals:
        return "Q";
    case CoeffKind::PrimeField:
        return "F_" + std::to_string(p_);
    case CoeffKind::LocalizedIntegers: {
        std::string s = "Z[1/";
        for (std::size_t i = 0; i < inverted_.size(); ++i)
            s += (i ? "," : "") + std::to_string(inverted_[i]);
        return s + "]";
    }
    }
    return "?";
}

std::string CoeffRing::spec() const
{
    switch (kind_) {
    case CoeffKind::Integers:
        return "Z";
    case CoeffKind::Rationals:
        return "Q";
    case CoeffKind::PrimeField:
        return "Fp:" + std::to_string(p_);
    case CoeffKind::LocalizedIntegers: {
        std::string s = "Zinv:";
        for (std::size_t i = 0; i < inverted_.size(); ++i)
            s += (i ? "," : "") + std::to_string(inverted_[i]);
        return s;
    }
    }
    return "?";
}

Coefficient::Coefficient(const CoeffRing& ring, const mpq_class& value)
    : ring_(ring), value_(ring.normalize(value))
{
}

Coefficient::Coefficient(const CoeffRing& ring, long value) : Coefficient(ring, mpq_class(value)) {}

void Coefficient::check_same(const Coefficient& o) const
{
    if (ring_ != o.ring_)
        throw CoefficientError("mixed coefficient rings " + ring_.name() + " and " + o.ring_.name());
}

Coefficient Coefficient::operator+(const Coefficient& o) const
{
    check_same(o);
    return Coefficient(ring_, value_ + o.value_);
}

Coefficient Coefficient::operator-(const Coefficient& o) const
{
    check_same(o);
    return Coefficient(ring_, value_ - o.value_);
}

Coefficient Coefficient::operator*(const Coefficient& o) const
{
    check_same(o);
    return Coefficient(ring_, value_ * o.value_);
}

Coefficient Coefficient::operator-() const { return Coefficient(ring_, -value_); }

Coefficient Coefficient::operator/(const Coefficient& o) const
{
    check_same(o);
    return Coefficient(ring_, value_ * ring_.inverse(o.value_));
}

std::string Coefficient::str() const { return value_.get_str(); }

}  // namespace soergel
