#include "soergel/poly.hpp"

#include <sstream>

namespace soergel {

Monomial Monomial::operator*(const Monomial& o) const
{
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
        unsigned s = unsigned(exp[i]) + o.exp[i];
        if (s > 255)
            throw std::overflow_error("monomial exponent exceeds 255");
        r.exp[i] = static_cast<std::uint8_t>(s);
    }
    return r;
}

bool Monomial::divides(const Monomial& o) const
{
    for (std::size_t i = 0; i < kMaxVars; ++i)
        if (exp[i] > o.exp[i])
            return false;
    return true;
}

MultiPoly::MultiPoly(std::size_t strands, const CoeffRing& ring) : n_(strands), ring_(ring)
{
    if (strands == 0 || strands > kMaxStrands)
        throw std::invalid_argument("strand count must be in 1.." + std::to_string(kMaxStrands));
}

MultiPoly MultiPoly::constant(std::size_t strands, const CoeffRing& ring, const mpq_class& c)
{
    MultiPoly p(strands, ring);
    p.add_term(Monomial{}, c);
    return p;
}

MultiPoly MultiPoly::monomial(std::size_t strands, const CoeffRing& ring, const Monomial& m,
                              const mpq_class& c)
{
    MultiPoly p(strands, ring);
    p.add_term(m, c);
    return p;
}

MultiPoly MultiPoly::variable(std::size_t strands, const CoeffRing& ring, std::size_t slot)
{
    if (slot >= 2 * strands)
        throw std::out_of_range("variable slot out of range");
    Monomial m;
    m.exp[slot] = 1;
    return monomial(strands, ring, m);
}

MultiPoly MultiPoly::x(std::size_t strands, const CoeffRing& ring, std::size_t i)
{
    if (i < 1 || i > strands)
        throw std::out_of_range("X index out of range");
    return variable(strands, ring, x_slot(strands, i));
}

MultiPoly MultiPoly::y(std::size_t strands, const CoeffRing& ring, std::size_t i)
{
    if (i < 1 || i > strands)
        throw std::out_of_range("Y index out of range");
    return variable(strands, ring, y_slot(strands, i));
}

bool MultiPoly::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.total() == 0);
}

mpq_class MultiPoly::constant_term() const { return coefficient(Monomial{}); }

mpq_class MultiPoly::coefficient(const Monomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? mpq_class(0) : it->second;
}

int MultiPoly::degree() const
{
    if (terms_.empty())
        return -1;
    return terms_.rbegin()->first.degree();
}

bool MultiPoly::is_homogeneous() const
{
    if (terms_.empty())
        return true;
    return terms_.begin()->first.total() == terms_.rbegin()->first.total();
}

bool MultiPoly::uses_y() const
{
    for (const auto& [m, c] : terms_)
        for (std::size_t i = n_; i < 2 * n_; ++i)
            if (m.exp[i])
                return true;
    return false;
}

bool MultiPoly::uses_x() const
{
    for (const auto& [m, c] : terms_)
        for (std::size_t i = 0; i < n_; ++i)
            if (m.exp[i])
                return true;
    return false;
}

void MultiPoly::add_term(const Monomial& m, const mpq_class& c)
{
    if (sgn(c) == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(m, 0);
    it->second += c;
    if (ring_.kind() != CoeffKind::Integers || it->second.get_den() != 1)
        it->second = ring_.normalize(it->second);
    if (sgn(it->second) == 0)
        terms_.erase(it);
}

void MultiPoly::check_compatible(const MultiPoly& o) const
{
    if (n_ != o.n_)
        throw std::invalid_argument("mixed strand counts " + std::to_string(n_) + " and " +
                                    std::to_string(o.n_));
    if (ring_ != o.ring_)
        throw CoefficientError("mixed coefficient rings " + ring_.name() + " and " + o.ring_.name());
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o)
{
    check_compatible(o);
    for (const auto& [m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o)
{
    check_compatible(o);
    for (const auto& [m, c] : o.terms_)
        add_term(m, -c);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o)
{
    *this = *this * o;
    return *this;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const
{
    MultiPoly r = *this;
    r += o;
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const
{
    MultiPoly r = *this;
    r -= o;
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const
{
    check_compatible(o);
    MultiPoly r(n_, ring_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_)
            r.add_term(ma * mb, ca * cb);
    return r;
}

MultiPoly MultiPoly::operator-() const
{
    MultiPoly r(n_, ring_);
    for (const auto& [m, c] : terms_)
        r.add_term(m, -c);
    return r;
}

MultiPoly MultiPoly::scaled(const mpq_class& c) const
{
    MultiPoly r(n_, ring_);
    mpq_class cc = ring_.normalize(c);
    for (const auto& [m, v] : terms_)
        r.add_term(m, v * cc);
    return r;
}

MultiPoly MultiPoly::scaled(const Coefficient& c) const
{
    if (c.ring() != ring_)
        throw CoefficientError("mixed coefficient rings " + ring_.name() + " and " + c.ring().name());
    return scaled(c.value());
}

MultiPoly MultiPoly::times_monomial(const Monomial& mono) const
{
    MultiPoly r(n_, ring_);
    for (const auto& [m, c] : terms_)
        r.terms_.emplace_hint(r.terms_.end(), m * mono, c);
    return r;
}

MultiPoly MultiPoly::pow(unsigned k) const
{
    MultiPoly r = constant(n_, ring_, 1);
    MultiPoly base = *this;
    while (k) {
        if (k & 1)
            r *= base;
        k >>= 1;
        if (k)
            base *= base;
    }
    return r;
}

MultiPoly MultiPoly::component(int degree) const
{
    MultiPoly r(n_, ring_);
    for (const auto& [m, c] : terms_)
        if (m.degree() == degree)
            r.terms_.emplace_hint(r.terms_.end(), m, c);
    return r;
}

MultiPoly MultiPoly::derivative(std::size_t slot) const
{
    MultiPoly r(n_, ring_);
    for (const auto& [m, c] : terms_) {
        if (!m.exp[slot])
            continue;
        Monomial d = m;
        d.exp[slot] -= 1;
        r.add_term(d, c * m.exp[slot]);
    }
    return r;
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& images) const
{
    if (images.size() != 2 * n_)
        throw std::invalid_argument("substitute needs one image per variable slot");
    std::size_t target_n = images.front().strands();
    MultiPoly r(target_n, images.front().ring());
    // cache powers of each image
    std::vector<std::vector<MultiPoly>> powers(2 * n_);
    for (const auto& [m, c] : terms_) {
        MultiPoly term = constant(target_n, r.ring(), c);
        for (std::size_t s = 0; s < 2 * n_; ++s) {
            unsigned e = m.exp[s];
            if (!e)
                continue;
            auto& pw = powers[s];
            if (pw.empty())
                pw.push_back(constant(target_n, r.ring(), 1));
            while (pw.size() <= e)
                pw.push_back(pw.back() * images[s]);
            term *= pw[e];
        }
        r += term;
    }
    return r;
}

MultiPoly MultiPoly::permute(const std::vector<std::size_t>& perm) const
{
    MultiPoly r(n_, ring_);
    for (const auto& [m, c] : terms_) {
        Monomial p;
        for (std::size_t s = 0; s < 2 * n_; ++s)
            if (m.exp[s])
                p.exp[perm[s]] = m.exp[s];
        r.add_term(p, c);
    }
    return r;
}

MultiPoly MultiPoly::change_ring(const CoeffRing& ring) const
{
    MultiPoly r(n_, ring);
    for (const auto& [m, c] : terms_)
        r.add_term(m, c);
    return r;
}

MultiPoly MultiPoly::y_to_x() const
{
    MultiPoly r(n_, ring_);
    for (const auto& [m, c] : terms_) {
        Monomial p;
        for (std::size_t i = 0; i < n_; ++i)
            p.exp[i] = static_cast<std::uint8_t>(m.exp[i] + m.exp[n_ + i]);
        r.add_term(p, c);
    }
    return r;
}

MultiPoly MultiPoly::x_to_y() const
{
    MultiPoly r(n_, ring_);
    for (const auto& [m, c] : terms_) {
        Monomial p;
        for (std::size_t i = 0; i < n_; ++i)
            p.exp[n_ + i] = static_cast<std::uint8_t>(m.exp[i] + m.exp[n_ + i]);
        r.add_term(p, c);
    }
    return r;
}

std::string MultiPoly::str() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    // highest terms first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        mpq_class a = abs(c);
        bool neg = sgn(c) < 0;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        bool unit = (a == 1);
        bool any = false;
        if (!unit || m.total() == 0) {
            os << a.get_str();
            any = true;
        }
        for (std::size_t s = 0; s < 2 * n_; ++s) {
            if (!m.exp[s])
                continue;
            if (any)
                os << "*";
            os << (s < n_ ? "X" : "Y") << (s < n_ ? s + 1 : s - n_ + 1);
            if (m.exp[s] > 1)
                os << "^" << unsigned(m.exp[s]);
            any = true;
        }
    }
    return os.str();
}

MultiPoly reflect(std::size_t i, const MultiPoly& f)
{
    std::size_t n = f.strands();
    if (i < 1 || i + 1 > n)
        throw std::out_of_range("reflection index " + std::to_string(i) + " out of range for " +
                                std::to_string(n) + " strands");
    std::vector<std::size_t> perm(2 * n);
    for (std::size_t s = 0; s < 2 * n; ++s)
        perm[s] = s;
    std::swap(perm[i - 1], perm[i]);
    return f.permute(perm);
}

MultiPoly demazure(std::size_t i, const MultiPoly& f)
{
    std::size_t n = f.strands();
    if (i < 1 || i + 1 > n)
        throw std::out_of_range("Demazure index " + std::to_string(i) + " out of range for " +
                                std::to_string(n) + " strands");
    if (f.uses_y())
        throw std::invalid_argument("Demazure operator applies to X variables only");
    const std::size_t u = i - 1, v = i;
    MultiPoly r(n, f.ring());
    // (u^a v^b - u^b v^a)/(u - v) = u^m v^m * sign * pi_{|a-b|-1}(u, v), m = min(a, b)
    for (const auto& [m, c] : f.terms()) {
        int a = m.exp[u], b = m.exp[v];
        if (a == b)
            continue;
        int lo = std::min(a, b), d = std::abs(a - b) - 1;
        mpq_class coeff = a > b ? c : mpq_class(-c);
        for (int t = 0; t <= d; ++t) {
            Monomial q = m;
            q.exp[u] = static_cast<std::uint8_t>(lo + t);
            q.exp[v] = static_cast<std::uint8_t>(lo + d - t);
            r.add_term(q, coeff);
        }
    }
    return r;
}

MultiPoly pi_k(unsigned k, std::size_t strands, const CoeffRing& ring, std::size_t u_slot,
               std::size_t v_slot)
{
    MultiPoly r(strands, ring);
    if (u_slot >= 2 * strands || v_slot >= 2 * strands)
        throw std::out_of_range("pi_k variable slot out of range");
    for (unsigned t = 0; t <= k; ++t) {
        Monomial m;
        m.exp[u_slot] = static_cast<std::uint8_t>(m.exp[u_slot] + t);
        m.exp[v_slot] = static_cast<std::uint8_t>(m.exp[v_slot] + (k - t));
        r.add_term(m, 1);
    }
    return r;
}

namespace {

void enumerate(const std::vector<std::size_t>& slots, std::size_t pos, unsigned remaining,
               Monomial& cur, std::vector<Monomial>& out)
{
    if (pos + 1 == slots.size()) {
        cur.exp[slots[pos]] = static_cast<std::uint8_t>(remaining);
        out.push_back(cur);
        cur.exp[slots[pos]] = 0;
        return;
    }
    for (int e = static_cast<int>(remaining); e >= 0; --e) {
        cur.exp[slots[pos]] = static_cast<std::uint8_t>(e);
        enumerate(slots, pos + 1, remaining - e, cur, out);
    }
    cur.exp[slots[pos]] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_total(const std::vector<std::size_t>& slots, unsigned total)
{
    std::vector<Monomial> out;
    if (slots.empty()) {
        if (total == 0)
            out.emplace_back();
        return out;
    }
    Monomial cur;
    enumerate(slots, 0, total, cur, out);
    return out;
}

std::uint64_t monomial_count(unsigned vars, unsigned total)
{
    if (vars == 0)
        return total == 0 ? 1 : 0;
    // C(total + vars - 1, vars - 1)
    std::uint64_t r = 1;
    for (unsigned i = 1; i < vars; ++i)
        r = r * (total + i) / i;
    return r;
}

}  // namespace soergel
