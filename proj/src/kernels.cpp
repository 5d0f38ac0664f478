#include "ncposet/kernels.hpp"

#include <bit>

#include "ncposet/parallel.hpp"

namespace ncposet {

int BitMatrix::row_count(int i) const {
  const std::uint64_t* r = row(i);
  int c = 0;
  for (size_t w = 0; w < words_; ++w) c += std::popcount(r[w]);
  return c;
}

BitMatrix BitMatrix::transposed() const {
  BitMatrix t(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (test(i, j)) t.set(j, i);
  return t;
}

std::vector<int> BitMatrix::row_indices(int i) const {
  std::vector<int> out;
  const std::uint64_t* r = row(i);
  for (size_t w = 0; w < words_; ++w) {
    std::uint64_t bits = r[w];
    while (bits) {
      int b = std::countr_zero(bits);
      out.push_back(static_cast<int>(w * 64) + b);
      bits &= bits - 1;
    }
  }
  return out;
}

namespace kernels {

namespace {

void fill_relation_row(BitMatrix& m, int i, int n, const LessFn& less) {
  for (int j = 0; j < n; ++j)
    if (i != j && less(i, j)) m.set(i, j);
}

void fill_reduction_row(const BitMatrix& less, BitMatrix& covers, int i) {
  size_t words = less.words_per_row();
  std::vector<std::uint64_t> reach(words, 0);
  for (int k : less.row_indices(i)) {
    const std::uint64_t* rk = less.row(k);
    for (size_t w = 0; w < words; ++w) reach[w] |= rk[w];
  }
  const std::uint64_t* ri = less.row(i);
  std::uint64_t* ci = covers.row(i);
  for (size_t w = 0; w < words; ++w) ci[w] = ri[w] & ~reach[w];
}

std::pair<int, int> violation_in_row(const BitMatrix& src, const BitMatrix& dst,
                                     const std::vector<int>& img, int x) {
  for (int y : src.row_indices(x))
    if (!dst.test(img[static_cast<size_t>(y)], img[static_cast<size_t>(x)])) return {x, y};
  return {-1, -1};
}

}  // namespace

BitMatrix relation_matrix(int n, const LessFn& less, exec policy) {
  BitMatrix m(n);
  if (policy == exec::parallel) {
#pragma omp parallel for schedule(dynamic, 16)
    for (int i = 0; i < n; ++i) fill_relation_row(m, i, n, less);
  } else {
    for (int i = 0; i < n; ++i) fill_relation_row(m, i, n, less);
  }
  return m;
}

BitMatrix transitive_reduction(const BitMatrix& less, exec policy) {
  int n = less.size();
  BitMatrix covers(n);
  if (policy == exec::parallel) {
#pragma omp parallel for schedule(dynamic, 16)
    for (int i = 0; i < n; ++i) fill_reduction_row(less, covers, i);
  } else {
    for (int i = 0; i < n; ++i) fill_reduction_row(less, covers, i);
  }
  return covers;
}

bool is_irreflexive(const BitMatrix& less) {
  for (int i = 0; i < less.size(); ++i)
    if (less.test(i, i)) return false;
  return true;
}

bool is_transitive(const BitMatrix& less) {
  size_t words = less.words_per_row();
  for (int i = 0; i < less.size(); ++i) {
    const std::uint64_t* ri = less.row(i);
    for (int k : less.row_indices(i)) {
      const std::uint64_t* rk = less.row(k);
      for (size_t w = 0; w < words; ++w)
        if (rk[w] & ~ri[w]) return false;
    }
  }
  return true;
}

std::optional<std::pair<int, int>> first_orderrev_violation(const BitMatrix& src,
                                                            const BitMatrix& dst,
                                                            const std::vector<int>& img,
                                                            exec policy) {
  int n = src.size();
  std::pair<int, int> best{n, n};
  if (policy == exec::parallel) {
#pragma omp parallel for schedule(dynamic, 16)
    for (int x = 0; x < n; ++x) {
      auto v = violation_in_row(src, dst, img, x);
      if (v.first < 0) continue;
#pragma omp critical
      if (v < best) best = v;
    }
  } else {
    for (int x = 0; x < n; ++x) {
      auto v = violation_in_row(src, dst, img, x);
      if (v.first >= 0 && v < best) best = v;
    }
  }
  if (best.first == n) return std::nullopt;
  return best;
}

namespace reference {

BitMatrix relation_matrix(int n, const LessFn& less) {
  BitMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && less(i, j)) m.set(i, j);
  return m;
}

BitMatrix transitive_reduction(const BitMatrix& less) {
  int n = less.size();
  BitMatrix covers(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!less.test(i, j)) continue;
      bool shortcut = false;
      for (int k = 0; k < n && !shortcut; ++k)
        if (less.test(i, k) && less.test(k, j)) shortcut = true;
      if (!shortcut) covers.set(i, j);
    }
  return covers;
}

std::optional<std::pair<int, int>> first_orderrev_violation(const BitMatrix& src,
                                                            const BitMatrix& dst,
                                                            const std::vector<int>& img) {
  for (int x = 0; x < src.size(); ++x)
    for (int y = 0; y < src.size(); ++y)
      if (src.test(x, y) &&
          !dst.test(img[static_cast<size_t>(y)], img[static_cast<size_t>(x)]))
        return std::make_pair(x, y);
  return std::nullopt;
}

}  // namespace reference

}  // namespace kernels
}  // namespace ncposet
