#pragma once

#include "ncposet/types.hpp"

namespace ncposet {

// Ordered pair of equal-size subsets of [n]; encodes a restricted signed
// permutation as (barred symbols, descent positions).
struct PairEncoding {
  IndexSet left;
  IndexSet right;
  int n = 0;
};

// Noncrossing partition -> 132-avoiding permutation (recursive: the maximum
// entry sits at the largest element of the block of the minimum).
Permutation f_map(const PartitionA& pi);
PartitionA f_inverse(const Permutation& p);

// Noncrossing partition -> 321-avoiding permutation: block maxima (blocks not
// containing 1) placed at block minima minus one, rest increasing.
Permutation theta_map(const PartitionA& pi);

// 321-avoider -> 132-avoider: reverse, keep left-to-right minima, refill the
// other positions minimally; Des(s(p)) = alpha(Exc(p)).
Permutation s_map(const Permutation& p);

PairEncoding b_encode(const SignedPermutation& b);
SignedPermutation b_decode(const PairEncoding& enc);

// Complement both components of the pair encoding; order-reversing involution
// on the descent order.
SignedPermutation pb_dual(const SignedPermutation& b);

// Barred complement of the reverse; complements S(b) union F(b) on all of B_n.
SignedPermutation qb_dual(const SignedPermutation& b);

// Chord-diagram complements: the coarsest noncrossing partition on interlaced
// primed points whose chords avoid the chords of pi, primes dropped.
PartitionA kreweras_g(const PartitionA& pi);
PartitionB kreweras_h(const PartitionB& pi);

}  // namespace ncposet
