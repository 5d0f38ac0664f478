#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace ncposet {

// Dense square bit matrix; row-major 64-bit words.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(int n)
      : n_(n), words_(static_cast<size_t>((n + 63) / 64)), bits_(words_ * static_cast<size_t>(n)) {}

  int size() const { return n_; }
  size_t words_per_row() const { return words_; }

  bool test(int i, int j) const {
    return (row(i)[static_cast<size_t>(j) >> 6] >> (static_cast<size_t>(j) & 63)) & 1u;
  }
  void set(int i, int j) { row(i)[static_cast<size_t>(j) >> 6] |= 1ull << (static_cast<size_t>(j) & 63); }

  std::uint64_t* row(int i) { return bits_.data() + static_cast<size_t>(i) * words_; }
  const std::uint64_t* row(int i) const { return bits_.data() + static_cast<size_t>(i) * words_; }

  int row_count(int i) const;              // popcount of row i
  BitMatrix transposed() const;
  std::vector<int> row_indices(int i) const;

  bool operator==(const BitMatrix& o) const = default;

 private:
  int n_ = 0;
  size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

namespace kernels {

enum class exec { serial, parallel };

using LessFn = std::function<bool(int, int)>;

// Strict-order matrix from a pairwise comparator; rows are independent.
BitMatrix relation_matrix(int n, const LessFn& less, exec policy);

// Covers of a strict order: less minus all two-step compositions.
BitMatrix transitive_reduction(const BitMatrix& less, exec policy);

bool is_irreflexive(const BitMatrix& less);
bool is_transitive(const BitMatrix& less);

// First (x, y) with x < y in src whose images fail img(y) < img(x) in dst;
// lexicographically first regardless of execution policy.
std::optional<std::pair<int, int>> first_orderrev_violation(const BitMatrix& src,
                                                            const BitMatrix& dst,
                                                            const std::vector<int>& img,
                                                            exec policy);

// Plain-loop references the parallel kernels are tested against.
namespace reference {
BitMatrix relation_matrix(int n, const LessFn& less);
BitMatrix transitive_reduction(const BitMatrix& less);
std::optional<std::pair<int, int>> first_orderrev_violation(const BitMatrix& src,
                                                            const BitMatrix& dst,
                                                            const std::vector<int>& img);
}  // namespace reference

}  // namespace kernels
}  // namespace ncposet
