#include "cnb/subsets.hpp"

#include <limits>
#include <string>

#include "cnb/errors.hpp"

namespace cnb {

std::uint64_t binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    // result * factor / i is exact at every step; the intermediate product
    // needs 128 bits (e.g. C(64,32) already fills most of a uint64).
    unsigned __int128 result = 1;
    for (unsigned i = 1; i <= k; ++i) {
        result = result * (n - k + i) / i;
        if (result > std::numeric_limits<std::uint64_t>::max()) {
            throw ResourceError("binomial(" + std::to_string(n) + "," + std::to_string(k) +
                                ") exceeds 64 bits");
        }
    }
    return static_cast<std::uint64_t>(result);
}

void check_subset(const SubsetLex& s) {
    if (s.members.empty() || s.members.size() > s.n) {
        throw DomainError("subset size " + std::to_string(s.members.size()) +
                          " invalid for n=" + std::to_string(s.n));
    }
    unsigned prev = 0;
    for (unsigned v : s.members) {
        if (v <= prev || v > s.n) {
            throw DomainError("subset members must be strictly increasing values in [1, n]");
        }
        prev = v;
    }
}

std::uint64_t subset_rank(const SubsetLex& s) {
    check_subset(s);
    const unsigned n = s.n;
    const unsigned k = static_cast<unsigned>(s.members.size());
    // Lexicographic rank = C(n,k) - 1 - sum_i C(n - s_i, k - i + 1).
    std::uint64_t after = 0;
    for (unsigned i = 0; i < k; ++i) after += binomial(n - s.members[i], k - i);
    return binomial(n, k) - 1 - after;
}

SubsetLex subset_unrank(unsigned n, unsigned k, std::uint64_t rank) {
    if (k == 0 || k > n) {
        throw DomainError("subset size k=" + std::to_string(k) +
                          " must satisfy 0 < k <= n=" + std::to_string(n));
    }
    const std::uint64_t total = binomial(n, k);
    if (rank >= total) {
        throw DomainError("subset rank " + std::to_string(rank) + " out of range for C(" +
                          std::to_string(n) + "," + std::to_string(k) + ")");
    }
    SubsetLex s{n, {}};
    s.members.reserve(k);
    std::uint64_t remaining = total - 1 - rank; // sum of C(n - s_i, k - i + 1)
    unsigned value = 0;
    for (unsigned i = 0; i < k; ++i) {
        const unsigned slots = k - i; // C(n - v, slots) must be <= remaining
        ++value;
        while (binomial(n - value, slots) > remaining) ++value;
        remaining -= binomial(n - value, slots);
        s.members.push_back(value);
    }
    return s;
}

std::vector<SubsetLex> subsets_lex(unsigned n, unsigned k) {
    if (k == 0 || k > n) {
        throw DomainError("subsets_lex requires 0 < k <= n, got k=" + std::to_string(k) +
                          " n=" + std::to_string(n));
    }
    const std::uint64_t count = binomial(n, k);
    std::vector<SubsetLex> all;
    all.reserve(count);
    SubsetLex s{n, std::vector<unsigned>(k)};
    for (unsigned i = 0; i < k; ++i) s.members[i] = i + 1;
    while (true) {
        all.push_back(s);
        // Advance to the lexicographic successor.
        int i = static_cast<int>(k) - 1;
        while (i >= 0 && s.members[i] == n - (k - 1 - static_cast<unsigned>(i))) --i;
        if (i < 0) break;
        ++s.members[i];
        for (unsigned j = static_cast<unsigned>(i) + 1; j < k; ++j)
            s.members[j] = s.members[j - 1] + 1;
    }
    return all;
}

} // namespace cnb
