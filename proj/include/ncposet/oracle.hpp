#pragma once

#include <cstdint>

#include "ncposet/poset.hpp"
#include "ncposet/types.hpp"

// Deliberately naive reference implementations, kept separate from the
// production algorithms they guard. Exponential within their size limits.
namespace ncposet::oracle {

// Scan of all n! words against the naive pattern check.
std::vector<Permutation> pattern_filter(int n, const Permutation& pattern);

// Scan of all 2^n n! signed words against the 21 / 2bar-1bar check.
std::vector<SignedPermutation> signed_filter(int n);

// Every set partition of [n] (restricted growth strings).
std::vector<PartitionA> all_partitions_A(int n);

// Every type-B partition of the signed ground set.
std::vector<PartitionB> all_partitions_B(int n);

// Chord-diagram route: draw the chords of every block on the 2n circle and
// test pairwise chord crossings (independent of the four-point scan).
bool noncrossing_B_by_chords(const PartitionB& pi);

// Exact largest k-family by subset enumeration; |P| <= 20.
int k_family(const FinitePoset& p, int k);

// Chains counted by depth-first enumeration; |P| <= 300, m <= 4.
std::int64_t chain_count(const FinitePoset& p, int m);

// Inverse of the zeta matrix over the integers; entry (x,y) is mobius(x,y)
// for x <= y, zero elsewhere.
std::vector<std::vector<std::int64_t>> mobius_matrix(const FinitePoset& p);

}  // namespace ncposet::oracle
