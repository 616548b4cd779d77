#include "soergel/braid.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace soergel {

int BraidWord::writhe() const
{
    int w = 0;
    for (int l : letters)
        w += l > 0 ? 1 : -1;
    return w;
}

std::size_t BraidWord::components() const
{
    std::vector<std::size_t> perm(strands);
    std::iota(perm.begin(), perm.end(), 0);
    for (int l : letters) {
        const auto i = static_cast<std::size_t>(std::abs(l)) - 1;
        std::swap(perm[i], perm[i + 1]);
    }
    std::vector<bool> seen(strands, false);
    std::size_t cycles = 0;
    for (std::size_t s = 0; s < strands; ++s) {
        if (seen[s])
            continue;
        ++cycles;
        for (std::size_t t = s; !seen[t]; t = perm[t])
            seen[t] = true;
    }
    return cycles;
}

std::string BraidWord::str() const
{
    if (letters.empty())
        return "1";
    std::ostringstream os;
    for (std::size_t t = 0; t < letters.size(); ++t) {
        os << (t ? " " : "") << "s" << std::abs(letters[t]);
        if (letters[t] < 0)
            os << "^-1";
    }
    return os.str();
}

BraidWord make_braid(std::vector<int> letters, std::size_t strands)
{
    if (strands == 0)
        throw std::invalid_argument("a braid needs at least one strand");
    for (int l : letters)
        if (l == 0 || static_cast<std::size_t>(std::abs(l)) >= strands)
            throw std::invalid_argument("braid letter " + std::to_string(l) + " out of range for " +
                                        std::to_string(strands) + " strands");
    return BraidWord{strands, std::move(letters)};
}

namespace {

int parse_letter(const std::string& tok)
{
    auto fail = [&]() -> int { throw std::invalid_argument("malformed braid token '" + tok + "'"); };
    auto parse_int = [&](const std::string& s) {
        if (s.empty())
            fail();
        std::size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(s, &pos);
        } catch (const std::exception&) {
            fail();
        }
        if (pos != s.size())
            fail();
        return v;
    };
    if (tok[0] == 's' || tok[0] == 'S') {
        std::string body = tok.substr(1);
        int exponent = 1;
        auto caret = body.find('^');
        if (caret != std::string::npos) {
            exponent = parse_int(body.substr(caret + 1));
            body = body.substr(0, caret);
            if (exponent != 1 && exponent != -1)
                fail();
        }
        if (body.empty() || !std::all_of(body.begin(), body.end(), [](char c) { return c >= '0' && c <= '9'; }))
            fail();
        int idx = parse_int(body);
        if (idx == 0)
            throw std::invalid_argument("braid index 0 in token '" + tok + "'");
        return exponent * idx;
    }
    int v = parse_int(tok);
    if (v == 0)
        throw std::invalid_argument("braid index 0 in token '" + tok + "'");
    return v;
}

}  // namespace

BraidWord parse_braid(const std::string& text, std::optional<std::size_t> strands)
{
    std::istringstream is(text);
    std::vector<int> letters;
    std::string tok;
    while (is >> tok) {
        // allow comma separated input as well
        std::replace(tok.begin(), tok.end(), ',', ' ');
        std::istringstream inner(tok);
        std::string part;
        while (inner >> part)
            letters.push_back(parse_letter(part));
    }
    std::size_t n = 1;
    for (int l : letters)
        n = std::max(n, static_cast<std::size_t>(std::abs(l)) + 1);
    if (strands)
        n = *strands;
    return make_braid(std::move(letters), n);
}

BraidWord inverse(const BraidWord& w)
{
    BraidWord r{w.strands, {}};
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        r.letters.push_back(-*it);
    return r;
}

BraidWord markov_move(const BraidWord& w, const MarkovMove& move)
{
    if (move.kind == MarkovMove::Kind::Conjugate) {
        if (move.by.strands != w.strands)
            throw std::invalid_argument("conjugating braid has a different strand count");
        make_braid(move.by.letters, w.strands);
        BraidWord r{w.strands, move.by.letters};
        r.letters.insert(r.letters.end(), w.letters.begin(), w.letters.end());
        auto inv = inverse(move.by);
        r.letters.insert(r.letters.end(), inv.letters.begin(), inv.letters.end());
        return r;
    }
    if (move.sign != 1 && move.sign != -1)
        throw std::invalid_argument("stabilization sign must be +1 or -1");
    BraidWord r{w.strands + 1, w.letters};
    r.letters.push_back(move.sign * static_cast<int>(w.strands));
    return r;
}

namespace {

using Perm = std::vector<int>;  // one-line notation, 0-based values
using Hecke = std::map<Perm, Laurent2>;

/// T_w T_i (0-based generator i swaps positions i, i+1).
void mul_generator(Hecke& h, std::size_t i)
{
    Hecke r;
    const Laurent2 coeff_short = Laurent2::monomial(1, -1, 1);  // a^{-1} z
    const Laurent2 coeff_long = Laurent2::monomial(1, -2, 0);   // a^{-2}
    for (const auto& [w, c] : h) {
        Perm ws = w;
        std::swap(ws[i], ws[i + 1]);
        if (w[i] < w[i + 1]) {
            r[ws] += c;
        } else {
            r[w] += c * coeff_short;
            r[ws] += c * coeff_long;
        }
    }
    h.clear();
    for (auto& [w, c] : r)
        if (!c.is_zero())
            h.emplace(w, std::move(c));
}

void mul_letter(Hecke& h, int letter)
{
    const std::size_t i = static_cast<std::size_t>(std::abs(letter)) - 1;
    if (letter > 0) {
        mul_generator(h, i);
        return;
    }
    // T^{-1} = a^2 T - a z
    Hecke t = h;
    mul_generator(t, i);
    Hecke r;
    for (const auto& [w, c] : t)
        r[w] += c.shifted(2, 0);
    for (const auto& [w, c] : h)
        r[w] -= c.shifted(1, 1);
    h.clear();
    for (auto& [w, c] : r)
        if (!c.is_zero())
            h.emplace(w, std::move(c));
}

class OcneanuTrace {
public:
    Laurent2 trace(const Hecke& h, std::size_t n)
    {
        Laurent2 r;
        for (const auto& [w, c] : h)
            r += c * trace_basis(w, n);
        return r;
    }

private:
    Laurent2 trace_basis(const Perm& w, std::size_t n)
    {
        if (n == 1)
            return Laurent2::constant(1);
        auto key = std::make_pair(w, n);
        if (auto it = memo_.find(key); it != memo_.end())
            return it->second;
        Laurent2 result;
        const int top = static_cast<int>(n) - 1;
        if (w[n - 1] == top) {
            Perm sub(w.begin(), w.end() - 1);
            result = delta() * trace_basis(sub, n - 1);
        } else {
            // w = u s_{n-1} s_{n-2} ... s_p with u(n) = n.
            Perm u = w;
            std::size_t p = static_cast<std::size_t>(std::find(u.begin(), u.end(), top) - u.begin());
            std::vector<std::size_t> tail;  // generators after s_{n-1}: s_{n-2}, ..., s_p
            for (std::size_t q = p; q + 1 < n; ++q) {
                std::swap(u[q], u[q + 1]);
                if (q + 1 < n - 1)
                    tail.push_back(q);
            }
            // tr_n(T_u T_{n-1} T_v) = tr_{n-1}(T_u T_v), v = s_{n-2} ... s_p
            Hecke h;
            h[Perm(u.begin(), u.end() - 1)] = Laurent2::constant(1);
            for (auto it = tail.rbegin(); it != tail.rend(); ++it)
                mul_generator(h, *it);
            result = trace(h, n - 1);
        }
        memo_.emplace(key, result);
        return result;
    }

    static Laurent2 delta()
    {
        // (a - a^{-1}) / z
        return Laurent2::monomial(1, 1, -1) - Laurent2::monomial(1, -1, -1);
    }

    std::map<std::pair<Perm, std::size_t>, Laurent2> memo_;
};

}  // namespace

Laurent2 homfly_oracle(const BraidWord& w)
{
    if (w.strands > kOracleMaxStrands)
        throw std::length_error("HOMFLY oracle recursion depth exceeded: " + std::to_string(w.strands) +
                                " strands (limit " + std::to_string(kOracleMaxStrands) + ")");
    make_braid(w.letters, w.strands);
    Perm id(w.strands);
    std::iota(id.begin(), id.end(), 0);
    Hecke h;
    h[id] = Laurent2::constant(1);
    for (int l : w.letters)
        mul_letter(h, l);
    OcneanuTrace tr;
    return tr.trace(h, w.strands);
}

}  // namespace soergel
