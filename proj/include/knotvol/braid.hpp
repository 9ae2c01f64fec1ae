#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "knotvol/errors.hpp"

namespace knotvol::braid {

// One letter sigma_index^{sign} of a braid word; index in [1, strands-1],
// sign is +1 or -1.
struct BraidLetter {
    int index;
    int sign;
    friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
};

// A word in the generators of B_n together with the strand count n.
// Immutable after construction.
class BraidWord {
public:
    BraidWord() : strands_(1) {}
    BraidWord(int strands, std::vector<BraidLetter> letters);

    int strands() const { return strands_; }
    const std::vector<BraidLetter>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }
    std::size_t length() const { return letters_.size(); }

    // Sum of the exponents (crossing signs).
    int writhe() const;

    // Canonical text form: space-separated signed generator indices.
    // The strand count is not part of the text; parse() recovers it as
    // max|index|+1 unless told otherwise.
    std::string str() const;

    friend bool operator==(const BraidWord&, const BraidWord&) = default;

private:
    int strands_;
    std::vector<BraidLetter> letters_;
};

// Parse whitespace-separated nonzero integers: k > 0 means sigma_k,
// k < 0 means sigma_{|k|}^{-1}. Without an explicit strand count the word
// lives in B_{max|k|+1} (B_1 for the empty word).
// Throws ParseError on a zero token, a non-integer token, or an index out
// of range for an explicit strand count.
BraidWord parse_braid(const std::string& text, std::optional<int> strands = std::nullopt);

// Image of strand positions 1..n under the closure of the word; the number
// of cycles is the number of components of the closed link.
struct StrandPermutation {
    std::vector<int> images; // images[p-1] in [1, n], bijective
    int cycle_count() const;
};

StrandPermutation closure_permutation(const BraidWord& b);

// Components of the closure of b.
int closure_components(const BraidWord& b);

// a^{-1} . b . a  (same strand count required).
BraidWord conjugate(const BraidWord& b, const BraidWord& a);

// Append sigma_n^{sign} and move to B_{n+1}.
BraidWord stabilize(const BraidWord& b, int sign);

// Inverse of stabilize: requires n >= 2, last letter (n-1, +-1), and index
// n-1 unused elsewhere in the word.
BraidWord destabilize(const BraidWord& b);

// Apply `moves` random Markov moves (conjugations, stabilizations, valid
// destabilizations). Deterministic for a fixed seed. Stabilizations are
// redirected to conjugations once `max_strands` is reached, keeping the
// state-sum cost of closure evaluations bounded.
BraidWord random_markov_walk(const BraidWord& b, int moves, std::uint64_t seed,
                             int max_strands = 6);

} // namespace knotvol::braid
