#pragma once

#include <cstdint>

#include "ncposet/types.hpp"

namespace ncposet {

// -------- counting helpers --------
std::int64_t binomial(int n, int k);
std::int64_t catalan(int n);
std::int64_t narayana(int n, int k);  // (1/n) C(n,k) C(n,k+1), 0 <= k <= n-1

// Chains 0 < b1 < ... < bm < 1 in the descent order on the restricted
// hyperoctahedral class, by the closed form over rank tuples.
std::int64_t chain_count_formula_B(int n, int m);

// -------- permutation statistics --------
IndexSet descent_set_A(const Permutation& p);     // subset of [n-1]
IndexSet excedence_set_A(const Permutation& p);   // { i : p(i) > i }
IndexSet left_to_right_minima(const Permutation& p);

// -------- signed permutation statistics --------
// Descents w.r.t. 1 < ... < n < nbar < ... < 1bar, plus n when b_n is barred.
IndexSet descent_set_B(const SignedPermutation& b);

// The (n+1)-permutation ranking b_1..b_n, n+1 under 1<...<n<n+1<1bar<...<nbar,
// with slot n+1 holding k+1 (k = number of unbarred symbols).
Permutation sigma_of(const SignedPermutation& b);

IndexSet excedence_set_B1(const SignedPermutation& b);  // Exc(sigma(b)) within [n]
IndexSet excedence_set_B2(const SignedPermutation& b);  // excedences of |b| plus barred fixed points

// -------- partition statistics --------
IndexSet block_minima(const PartitionA& pi);

// Left/right delimiters of non-zero blocks, collected by peeling cyclically
// consecutive non-zero blocks from the circular diagram.
std::pair<IndexSet, IndexSet> lr_encoding_B(const PartitionB& pi);

// -------- subsets --------
// alpha(S) = { i in [n-1] : n-i not in S }, an involution on subsets of [n-1].
IndexSet reverse_complement_alpha(const IndexSet& s, int n);

}  // namespace ncposet
