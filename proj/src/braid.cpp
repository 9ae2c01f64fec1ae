#include "knotvol/braid.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <random>
#include <sstream>

namespace knotvol::braid {

BraidWord::BraidWord(int strands, std::vector<BraidLetter> letters)
    : strands_(strands), letters_(std::move(letters)) {
    if (strands_ < 1)
        throw std::invalid_argument("braid: strand count must be >= 1");
    for (const auto& l : letters_) {
        if (l.index < 1 || l.index > strands_ - 1)
            throw std::invalid_argument("braid: generator index out of range [1, n-1]");
        if (l.sign != 1 && l.sign != -1)
            throw std::invalid_argument("braid: sign must be +1 or -1");
    }
}

int BraidWord::writhe() const {
    int w = 0;
    for (const auto& l : letters_) w += l.sign;
    return w;
}

std::string BraidWord::str() const {
    std::string out;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(letters_[i].sign * letters_[i].index);
    }
    return out;
}

BraidWord parse_braid(const std::string& text, std::optional<int> strands) {
    std::vector<BraidLetter> letters;
    int max_index = 0;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc() || ptr != tok.data() + tok.size())
            throw ParseError("braid: non-integer token '" + tok + "'");
        if (value == 0)
            throw ParseError("braid: zero is not a valid generator");
        letters.push_back({std::abs(value), value > 0 ? 1 : -1});
        max_index = std::max(max_index, std::abs(value));
    }
    int n = strands.value_or(letters.empty() ? 1 : max_index + 1);
    if (n < 1) throw ParseError("braid: strand count must be >= 1");
    if (max_index > n - 1)
        throw ParseError("braid: generator index " + std::to_string(max_index) +
                         " out of range for " + std::to_string(n) + " strands");
    return BraidWord(n, std::move(letters));
}

int StrandPermutation::cycle_count() const {
    const int n = static_cast<int>(images.size());
    std::vector<bool> seen(n, false);
    int cycles = 0;
    for (int p = 0; p < n; ++p) {
        if (seen[p]) continue;
        ++cycles;
        int q = p;
        while (!seen[q]) {
            seen[q] = true;
            q = images[q] - 1;
        }
    }
    return cycles;
}

StrandPermutation closure_permutation(const BraidWord& b) {
    const int n = b.strands();
    // cur[pos] = which top strand currently occupies this position
    std::vector<int> cur(n);
    std::iota(cur.begin(), cur.end(), 1);
    for (const auto& l : b.letters())
        std::swap(cur[l.index - 1], cur[l.index]);
    // closure joins bottom position p back to top position p, so the strand
    // arriving at position p continues as strand p
    StrandPermutation perm;
    perm.images.resize(n);
    for (int pos = 0; pos < n; ++pos)
        perm.images[cur[pos] - 1] = pos + 1;
    return perm;
}

int closure_components(const BraidWord& b) {
    return closure_permutation(b).cycle_count();
}

BraidWord conjugate(const BraidWord& b, const BraidWord& a) {
    if (a.strands() != b.strands())
        throw std::invalid_argument("conjugate: strand-count mismatch");
    std::vector<BraidLetter> letters;
    letters.reserve(b.length() + 2 * a.length());
    for (auto it = a.letters().rbegin(); it != a.letters().rend(); ++it)
        letters.push_back({it->index, -it->sign});
    letters.insert(letters.end(), b.letters().begin(), b.letters().end());
    letters.insert(letters.end(), a.letters().begin(), a.letters().end());
    return BraidWord(b.strands(), std::move(letters));
}

BraidWord stabilize(const BraidWord& b, int sign) {
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("stabilize: sign must be +1 or -1");
    auto letters = b.letters();
    letters.push_back({b.strands(), sign});
    return BraidWord(b.strands() + 1, std::move(letters));
}

BraidWord destabilize(const BraidWord& b) {
    const int n = b.strands();
    if (n < 2 || b.empty())
        throw std::invalid_argument("destabilize: needs n >= 2 and a nonempty word");
    const auto& letters = b.letters();
    if (letters.back().index != n - 1)
        throw std::invalid_argument("destabilize: last letter is not sigma_{n-1}^{+-1}");
    for (std::size_t i = 0; i + 1 < letters.size(); ++i)
        if (letters[i].index == n - 1)
            throw std::invalid_argument("destabilize: sigma_{n-1} occurs before the tail");
    std::vector<BraidLetter> rest(letters.begin(), letters.end() - 1);
    return BraidWord(n - 1, std::move(rest));
}

BraidWord random_markov_walk(const BraidWord& b, int moves, std::uint64_t seed,
                             int max_strands) {
    if (moves < 0) throw std::invalid_argument("random_markov_walk: moves must be >= 0");
    std::mt19937_64 rng(seed);
    BraidWord cur = b;
    auto random_conjugate = [&](const BraidWord& w) {
        if (w.strands() < 2) return w;
        std::uniform_int_distribution<int> idx(1, w.strands() - 1);
        std::uniform_int_distribution<int> sgn(0, 1);
        BraidWord a(w.strands(), {{idx(rng), sgn(rng) ? 1 : -1}});
        return conjugate(w, a);
    };
    auto can_destabilize = [](const BraidWord& w) {
        if (w.strands() < 2 || w.empty()) return false;
        if (w.letters().back().index != w.strands() - 1) return false;
        for (std::size_t i = 0; i + 1 < w.length(); ++i)
            if (w.letters()[i].index == w.strands() - 1) return false;
        return true;
    };
    std::uniform_int_distribution<int> move(0, 3);
    std::uniform_int_distribution<int> sgn(0, 1);
    for (int m = 0; m < moves; ++m) {
        switch (move(rng)) {
        case 0:
        case 1:
            cur = random_conjugate(cur);
            break;
        case 2:
            if (cur.strands() < max_strands)
                cur = stabilize(cur, sgn(rng) ? 1 : -1);
            else
                cur = random_conjugate(cur);
            break;
        default:
            if (can_destabilize(cur))
                cur = destabilize(cur);
            else
                cur = random_conjugate(cur);
            break;
        }
    }
    return cur;
}

} // namespace knotvol::braid
