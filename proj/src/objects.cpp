#include "ncposet/objects.hpp"

#include <algorithm>
#include <climits>
#include <string>

namespace ncposet {

GenLimits& gen_limits() {
  static GenLimits limits;
  return limits;
}

void set_global_max_n(int n) {
  gen_limits() = GenLimits{n, n, n, n};
}

namespace {

void guard(int n, int limit, const char* what) {
  if (n < 1) fail(errc::bad_input, std::string(what) + ": n must be positive");
  if (n > limit)
    fail(errc::size_limit, std::string(what) + ": n=" + std::to_string(n) + " exceeds guard " +
                               std::to_string(limit));
}

// DFS over one-line prefixes, extending with unused values in increasing
// order; `blocked` rejects a value that would complete a pattern with the
// prefix. Output is in lexicographic word order.
template <typename Blocked>
std::vector<Permutation> gen_avoiders(int n, Blocked blocked) {
  std::vector<Permutation> out;
  std::vector<int> prefix;
  std::vector<bool> used(static_cast<size_t>(n) + 1, false);
  prefix.reserve(static_cast<size_t>(n));
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(prefix.size()) == n) {
      out.push_back(Permutation{prefix});
      return;
    }
    for (int v = 1; v <= n; ++v) {
      if (used[static_cast<size_t>(v)] || blocked(prefix, v)) continue;
      used[static_cast<size_t>(v)] = true;
      prefix.push_back(v);
      self(self);
      prefix.pop_back();
      used[static_cast<size_t>(v)] = false;
    }
  };
  rec(rec);
  return out;
}

}  // namespace

std::vector<Permutation> gen_avoiding_132(int n) {
  guard(n, gen_limits().perm, "gen_avoiding_132");
  // v closes a 132 iff some earlier entry x has a yet-earlier entry below v
  // with x above v.
  return gen_avoiders(n, [](const std::vector<int>& prefix, int v) {
    int premin = INT_MAX;
    for (int x : prefix) {
      if (premin < v && v < x) return true;
      premin = std::min(premin, x);
    }
    return false;
  });
}

std::vector<Permutation> gen_avoiding_321(int n) {
  guard(n, gen_limits().perm, "gen_avoiding_321");
  return gen_avoiders(n, [](const std::vector<int>& prefix, int v) {
    int premax = 0;
    for (int x : prefix) {
      if (premax > x && x > v) return true;
      premax = std::max(premax, x);
    }
    return false;
  });
}

namespace detail {

SignedPermutation shuffle_from_sets(const IndexSet& left, const IndexSet& right, int n) {
  SignedPermutation b;
  b.word.assign(static_cast<size_t>(n), 0);
  for (size_t i = 0; i < left.size(); ++i) b.word[static_cast<size_t>(right[i] - 1)] = -left[i];
  size_t next = 0;
  for (int v = 1; v <= n; ++v) {
    if (std::binary_search(left.begin(), left.end(), v)) continue;
    while (b.word[next] != 0) ++next;
    b.word[next] = v;
  }
  return b;
}

}  // namespace detail

std::vector<SignedPermutation> gen_B_restricted(int n) {
  guard(n, gen_limits().signed_perm, "gen_B_restricted");
  std::vector<SignedPermutation> out;
  for (unsigned lmask = 0; lmask < (1u << n); ++lmask) {
    IndexSet left;
    for (int v = 1; v <= n; ++v)
      if (lmask & (1u << (v - 1))) left.push_back(v);
    for (unsigned pmask = 0; pmask < (1u << n); ++pmask) {
      if (__builtin_popcount(pmask) != static_cast<int>(left.size())) continue;
      IndexSet right;
      for (int v = 1; v <= n; ++v)
        if (pmask & (1u << (v - 1))) right.push_back(v);
      out.push_back(detail::shuffle_from_sets(left, right, n));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Noncrossing partitions of the points 0..m-1 (linear order), emitted as
// block-id vectors. Scan left to right keeping a stack of blocks that may
// still grow; a point either opens a new block or joins an open one, closing
// everything stacked above it.
template <typename Emit>
void enumerate_nc(int m, Emit emit) {
  std::vector<int> assign(static_cast<size_t>(m), -1);
  std::vector<int> open;  // stack of block ids
  int nblocks = 0;
  auto rec = [&](auto&& self, int i) -> void {
    if (i == m) {
      emit(assign, nblocks);
      return;
    }
    assign[static_cast<size_t>(i)] = nblocks;
    open.push_back(nblocks);
    ++nblocks;
    self(self, i + 1);
    --nblocks;
    open.pop_back();
    // join an open block, closing the ones above it
    std::vector<int> popped;
    for (size_t d = open.size(); d-- > 0;) {
      assign[static_cast<size_t>(i)] = open[d];
      popped.assign(open.begin() + static_cast<long>(d) + 1, open.end());
      open.resize(d + 1);
      self(self, i + 1);
      open.insert(open.end(), popped.begin(), popped.end());
    }
    assign[static_cast<size_t>(i)] = -1;
  };
  rec(rec, 0);
}

std::vector<std::vector<int>> blocks_from_assign(const std::vector<int>& assign, int nblocks) {
  std::vector<std::vector<int>> blocks(static_cast<size_t>(nblocks));
  for (size_t i = 0; i < assign.size(); ++i)
    blocks[static_cast<size_t>(assign[i])].push_back(static_cast<int>(i));
  return blocks;
}

}  // namespace

std::vector<PartitionA> gen_nc_A(int n) {
  guard(n, gen_limits().nc_a, "gen_nc_A");
  std::vector<PartitionA> out;
  enumerate_nc(n, [&](const std::vector<int>& assign, int nblocks) {
    auto blocks = blocks_from_assign(assign, nblocks);
    for (auto& blk : blocks)
      for (auto& e : blk) ++e;  // points 0..n-1 are elements 1..n
    out.push_back(make_partition_a(n, std::move(blocks)));
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PartitionB> gen_nc_B(int n) {
  guard(n, gen_limits().nc_b, "gen_nc_B");
  std::vector<PartitionB> out;
  enumerate_nc(2 * n, [&](const std::vector<int>& assign, int nblocks) {
    // keep only bar-closed partitions with at most one invariant block;
    // barring is the half-turn pos -> (pos + n) mod 2n
    int invariant = 0;
    for (int b = 0; b < nblocks; ++b) {
      int image = -1;
      bool self = true;
      bool ok = true;
      for (int pos = 0; pos < 2 * n; ++pos) {
        if (assign[static_cast<size_t>(pos)] != b) continue;
        int bar = assign[static_cast<size_t>((pos + n) % (2 * n))];
        if (image == -1) image = bar;
        if (bar != image) {
          ok = false;
          break;
        }
        if (bar != b) self = false;
      }
      if (!ok) return;
      if (self) ++invariant;
    }
    if (invariant > 1) return;
    auto blocks = blocks_from_assign(assign, nblocks);
    for (auto& blk : blocks)
      for (auto& e : blk) e = circle_label(e, n);
    out.push_back(make_partition_b(n, std::move(blocks)));
  });
  std::sort(out.begin(), out.end(), [](const PartitionB& a, const PartitionB& b) {
    return a.blocks < b.blocks;
  });
  return out;
}

bool is_noncrossing_A(const PartitionA& pi) {
  validate(pi);
  std::vector<int> blk(static_cast<size_t>(pi.n) + 1, -1);
  for (size_t i = 0; i < pi.blocks.size(); ++i)
    for (int e : pi.blocks[i]) blk[static_cast<size_t>(e)] = static_cast<int>(i);
  for (int a = 1; a <= pi.n; ++a)
    for (int b = a + 1; b <= pi.n; ++b)
      for (int c = b + 1; c <= pi.n; ++c)
        for (int d = c + 1; d <= pi.n; ++d)
          if (blk[static_cast<size_t>(a)] == blk[static_cast<size_t>(c)] &&
              blk[static_cast<size_t>(b)] == blk[static_cast<size_t>(d)] &&
              blk[static_cast<size_t>(a)] != blk[static_cast<size_t>(b)])
            return false;
  return true;
}

bool is_noncrossing_B(const PartitionB& pi) {
  validate_type_b(pi);
  int m = 2 * pi.n;
  std::vector<int> blk(static_cast<size_t>(m), -1);
  for (size_t i = 0; i < pi.blocks.size(); ++i)
    for (int e : pi.blocks[i]) blk[static_cast<size_t>(circle_pos(e, pi.n))] = static_cast<int>(i);
  // cyclic alternation is invariant under rotation, so scanning quadruples in
  // the cut-open linear order covers all clockwise ones
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      for (int c = b + 1; c < m; ++c)
        for (int d = c + 1; d < m; ++d)
          if (blk[static_cast<size_t>(a)] == blk[static_cast<size_t>(c)] &&
              blk[static_cast<size_t>(b)] == blk[static_cast<size_t>(d)] &&
              blk[static_cast<size_t>(a)] != blk[static_cast<size_t>(b)])
            return false;
  return true;
}

bool avoids_pattern(const Permutation& p, const Permutation& pattern) {
  validate(p);
  validate(pattern);
  int k = pattern.n();
  if (k > 4) fail(errc::bad_input, "pattern longer than 4");
  if (k > p.n()) return true;  // nothing to contain
  std::vector<int> chosen;
  chosen.reserve(static_cast<size_t>(k));
  auto rec = [&](auto&& self, int start) -> bool {  // true iff pattern occurs
    int got = static_cast<int>(chosen.size());
    if (got == k) return true;
    for (int i = start; i < p.n(); ++i) {
      int v = p.entries[static_cast<size_t>(i)];
      bool consistent = true;
      for (int j = 0; j < got; ++j) {
        bool pat_less = pattern.entries[static_cast<size_t>(j)] <
                        pattern.entries[static_cast<size_t>(got)];
        if ((chosen[static_cast<size_t>(j)] < v) != pat_less) {
          consistent = false;
          break;
        }
      }
      if (!consistent) continue;
      chosen.push_back(v);
      if (self(self, i + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  return !rec(rec, 0);
}

bool is_b_restricted(const SignedPermutation& b) {
  validate(b);
  for (int i = 0; i < b.n(); ++i)
    for (int j = i + 1; j < b.n(); ++j) {
      int x = b.word[static_cast<size_t>(i)];
      int y = b.word[static_cast<size_t>(j)];
      if ((x > 0) == (y > 0) && std::abs(x) > std::abs(y)) return false;
    }
  return true;
}

}  // namespace ncposet
