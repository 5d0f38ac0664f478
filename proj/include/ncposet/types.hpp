#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ncposet {

enum class errc {
  size_limit,
  bad_input,
  invalid_partition,
  not_noncrossing,
  not_avoiding,
  not_in_class,
  cardinality_mismatch,
  out_of_range,
  unknown_family,
  unknown_map,
  incomparable_pair,
  no_bounds,
  not_ranked,
};

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] void fail(errc code, const std::string& msg);

// Sorted, duplicate-free subset of [n]; the ambient n travels separately.
using IndexSet = std::vector<int>;

struct Permutation {
  std::vector<int> entries;  // one-line notation, values 1..n
  int n() const { return static_cast<int>(entries.size()); }
  int at(int i) const { return entries[static_cast<size_t>(i - 1)]; }  // 1-based
  bool operator==(const Permutation&) const = default;
  bool operator<(const Permutation& o) const { return entries < o.entries; }
};

// Signed permutation of [n]; word[i] = k for plain k, -k for barred k.
struct SignedPermutation {
  std::vector<int> word;
  int n() const { return static_cast<int>(word.size()); }
  bool operator==(const SignedPermutation&) const = default;
  bool operator<(const SignedPermutation& o) const { return word < o.word; }
};

struct PartitionA {
  int n = 0;
  std::vector<std::vector<int>> blocks;  // canonical: sorted within, ordered by minimum
  bool operator==(const PartitionA&) const = default;
  bool operator<(const PartitionA& o) const { return blocks < o.blocks; }
};

// Partition of {±1..±n}; -k encodes k-bar.
struct PartitionB {
  int n = 0;
  std::vector<std::vector<int>> blocks;  // canonical: circle order, see canonicalize()
  bool operator==(const PartitionB&) const = default;
};

// Clockwise position on the 2n-point circle 1,2,...,n,1bar,...,nbar.
inline int circle_pos(int e, int n) { return e > 0 ? e - 1 : n - e - 1; }
inline int circle_label(int pos, int n) { return pos < n ? pos + 1 : -(pos - n + 1); }

void validate(const Permutation& p);
void validate(const SignedPermutation& b);
void validate(const PartitionA& pi);
void validate(const PartitionB& pi);         // partitions the signed ground set
void validate_type_b(const PartitionB& pi);  // bar-closed, at most one invariant block

// Canonicalize + validate.
PartitionA make_partition_a(int n, std::vector<std::vector<int>> blocks);
PartitionB make_partition_b(int n, std::vector<std::vector<int>> blocks);

bool has_zero_block(const PartitionB& pi);
int nonzero_block_pairs(const PartitionB& pi);

// Canonical text forms, used verbatim as poset labels and CLI I/O.
std::string format(const Permutation& p);        // "6 4 5 7 3 8 1 2"
std::string format(const SignedPermutation& b);  // "-2 1 3 -5 4 -6 7"
std::string format(const PartitionA& pi);        // "1,4,6/2,3/5/7,8"
std::string format(const PartitionB& pi);        // "1,-3,-5/2,-2/3,5,-1/4/-4"
std::string format_set(const IndexSet& s);       // "{1,3,4,7}"
std::string format_set_pair(const IndexSet& l, const IndexSet& r);

Permutation parse_permutation(const std::string& text);
SignedPermutation parse_signed(const std::string& text);
PartitionA parse_partition_a(const std::string& text);
PartitionB parse_partition_b(const std::string& text);
IndexSet parse_set(const std::string& text);  // "{1,6}" or "1,6"
std::pair<IndexSet, IndexSet> parse_set_pair(const std::string& text);

}  // namespace ncposet
