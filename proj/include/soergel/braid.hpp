#pragma once

#include "soergel/laurent.hpp"

#include <optional>
#include <string>
#include <vector>

namespace soergel {

/// Word in the braid group on `strands` strands; letter +i is sigma_i, -i its inverse.
struct BraidWord {
    std::size_t strands = 1;
    std::vector<int> letters;

    int writhe() const;
    bool is_identity() const { return letters.empty(); }
    /// Number of components of the closure.
    std::size_t components() const;
    /// "s1 s2^-1" form; "1" for the identity.
    std::string str() const;

    friend bool operator==(const BraidWord& a, const BraidWord& b)
    {
        return a.strands == b.strands && a.letters == b.letters;
    }
};

/// Validates letters against the strand count.
BraidWord make_braid(std::vector<int> letters, std::size_t strands);

/// Tokens "s<k>", "s<k>^-1", "s<k>^1" or signed integers, whitespace separated.
/// Without an explicit strand count, strands = max |index| + 1.
BraidWord parse_braid(const std::string& text, std::optional<std::size_t> strands = std::nullopt);

BraidWord inverse(const BraidWord& w);

struct MarkovMove {
    enum class Kind { Conjugate, Stabilize };
    Kind kind = Kind::Conjugate;
    BraidWord by;
    int sign = 1;

    static MarkovMove conjugate(BraidWord v) { return {Kind::Conjugate, std::move(v), 1}; }
    static MarkovMove stabilize(int sign) { return {Kind::Stabilize, {}, sign}; }
};

/// conjugate(v): v w v^{-1} on the same strands; stabilize(+-1): w sigma_n^{+-1} on n + 1 strands.
BraidWord markov_move(const BraidWord& w, const MarkovMove& move);

/// HOMFLY-PT polynomial of the closure in variables (a, z), normalized by
/// a P(L+) - a^{-1} P(L-) = z P(L0) and P(unknot) = 1. Computed from the
/// Hecke algebra of the symmetric group with the Ocneanu trace.
Laurent2 homfly_oracle(const BraidWord& w);

/// Largest strand count accepted by homfly_oracle.
inline constexpr std::size_t kOracleMaxStrands = 7;

}  // namespace soergel
