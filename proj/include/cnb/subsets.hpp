#pragma once

#include <cstdint>
#include <vector>

namespace cnb {

/// Exact binomial coefficient; throws ResourceError if the value does not
/// fit in 64 bits.
std::uint64_t binomial(unsigned n, unsigned k);

/// A size-k subset of {1,...,n} with strictly increasing 1-based members.
/// Subsets of a common (n,k) are ordered lexicographically; rank/unrank use
/// the combinatorial number system.
struct SubsetLex {
    unsigned n = 0;
    std::vector<unsigned> members;

    std::size_t size() const { return members.size(); }
    bool operator==(const SubsetLex&) const = default;
};

/// Validates the SubsetLex invariants; throws DomainError on violation.
void check_subset(const SubsetLex& s);

/// 0-based lexicographic rank among all size-k subsets of {1,...,n}.
std::uint64_t subset_rank(const SubsetLex& s);
SubsetLex subset_unrank(unsigned n, unsigned k, std::uint64_t rank);

/// All C(n,k) subsets in lexicographic order; element i equals unrank(i).
std::vector<SubsetLex> subsets_lex(unsigned n, unsigned k);

} // namespace cnb
