#pragma once

#include "ncposet/types.hpp"

namespace ncposet {

// Generation guards, overridable globally (CLI flag / NCPOSET_MAX_N).
struct GenLimits {
  int perm = 12;         // plain pattern-avoiding permutations
  int signed_perm = 9;   // restricted signed permutations
  int nc_a = 12;         // type-A noncrossing partitions
  int nc_b = 7;          // type-B noncrossing partitions
};

GenLimits& gen_limits();
void set_global_max_n(int n);

// All generators return their class in a fixed deterministic order:
// permutations and signed permutations by lexicographic word order,
// partitions by lexicographic canonical block order.
std::vector<Permutation> gen_avoiding_132(int n);
std::vector<Permutation> gen_avoiding_321(int n);
std::vector<SignedPermutation> gen_B_restricted(int n);  // avoids 21 and 2bar-1bar
std::vector<PartitionA> gen_nc_A(int n);
std::vector<PartitionB> gen_nc_B(int n);

bool is_noncrossing_A(const PartitionA& pi);
bool is_noncrossing_B(const PartitionB& pi);  // throws invalid_partition on bad input

// Naive subsequence scan; the reference check behind the generators' tests.
bool avoids_pattern(const Permutation& p, const Permutation& pattern);

// No i<j with equal barredness and |b_i| > |b_j|.
bool is_b_restricted(const SignedPermutation& b);

namespace detail {
// Barred symbols = `left` in increasing order at positions `right`; the rest
// increasing and unbarred. Requires |left| == |right|.
SignedPermutation shuffle_from_sets(const IndexSet& left, const IndexSet& right, int n);
}  // namespace detail

}  // namespace ncposet
