#include "ncposet/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "ncposet/objects.hpp"

namespace ncposet::oracle {

std::vector<Permutation> pattern_filter(int n, const Permutation& pattern) {
  if (n < 1 || n > 7) fail(errc::size_limit, "oracle::pattern_filter: n out of range");
  std::vector<int> word(static_cast<size_t>(n));
  std::iota(word.begin(), word.end(), 1);
  std::vector<Permutation> out;
  do {
    Permutation p{word};
    if (avoids_pattern(p, pattern)) out.push_back(p);
  } while (std::next_permutation(word.begin(), word.end()));
  return out;
}

std::vector<SignedPermutation> signed_filter(int n) {
  if (n < 1 || n > 5) fail(errc::size_limit, "oracle::signed_filter: n out of range");
  std::vector<int> word(static_cast<size_t>(n));
  std::iota(word.begin(), word.end(), 1);
  std::vector<SignedPermutation> out;
  do {
    for (unsigned bars = 0; bars < (1u << n); ++bars) {
      SignedPermutation b;
      for (int i = 0; i < n; ++i) {
        int v = word[static_cast<size_t>(i)];
        b.word.push_back(bars & (1u << i) ? -v : v);
      }
      if (is_b_restricted(b)) out.push_back(b);
    }
  } while (std::next_permutation(word.begin(), word.end()));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// restricted growth strings a_1..a_m with a_1 = 0, a_i <= 1 + max(prefix)
template <typename Emit>
void enumerate_rgs(int m, Emit emit) {
  std::vector<int> a(static_cast<size_t>(m), 0);
  auto rec = [&](auto&& self, int i, int maxused) -> void {
    if (i == m) {
      emit(a, maxused + 1);
      return;
    }
    for (int v = 0; v <= maxused + 1; ++v) {
      a[static_cast<size_t>(i)] = v;
      self(self, i + 1, std::max(maxused, v));
    }
  };
  if (m == 0) return;
  a[0] = 0;
  rec(rec, 1, 0);
}

}  // namespace

std::vector<PartitionA> all_partitions_A(int n) {
  if (n < 1 || n > 10) fail(errc::size_limit, "oracle::all_partitions_A: n out of range");
  std::vector<PartitionA> out;
  enumerate_rgs(n, [&](const std::vector<int>& a, int nblocks) {
    std::vector<std::vector<int>> blocks(static_cast<size_t>(nblocks));
    for (int e = 1; e <= n; ++e) blocks[static_cast<size_t>(a[static_cast<size_t>(e - 1)])].push_back(e);
    out.push_back(make_partition_a(n, std::move(blocks)));
  });
  return out;
}

std::vector<PartitionB> all_partitions_B(int n) {
  if (n < 1 || n > 5) fail(errc::size_limit, "oracle::all_partitions_B: n out of range");
  std::vector<PartitionB> out;
  enumerate_rgs(2 * n, [&](const std::vector<int>& a, int nblocks) {
    // bar-closure and the zero-block bound first
    std::vector<int> image(static_cast<size_t>(nblocks), -1);
    int invariant = 0;
    for (int b = 0; b < nblocks; ++b) {
      int img = -1;
      bool self_inv = true, ok = true;
      for (int pos = 0; pos < 2 * n; ++pos) {
        if (a[static_cast<size_t>(pos)] != b) continue;
        int bar = a[static_cast<size_t>((pos + n) % (2 * n))];
        if (img == -1) img = bar;
        if (bar != img) {
          ok = false;
          break;
        }
        if (bar != b) self_inv = false;
      }
      if (!ok) return;
      image[static_cast<size_t>(b)] = img;
      if (self_inv) ++invariant;
    }
    if (invariant > 1) return;
    std::vector<std::vector<int>> blocks(static_cast<size_t>(nblocks));
    for (int pos = 0; pos < 2 * n; ++pos)
      blocks[static_cast<size_t>(a[static_cast<size_t>(pos)])].push_back(circle_label(pos, n));
    out.push_back(make_partition_b(n, std::move(blocks)));
  });
  return out;
}

bool noncrossing_B_by_chords(const PartitionB& pi) {
  validate_type_b(pi);
  int n = pi.n;
  std::vector<std::pair<int, int>> chords;
  for (const auto& blk : pi.blocks) {
    std::vector<int> pos;
    for (int e : blk) pos.push_back(circle_pos(e, n));
    std::sort(pos.begin(), pos.end());
    for (size_t i = 0; i + 1 < pos.size(); ++i) chords.emplace_back(pos[i], pos[i + 1]);
    if (pos.size() >= 2) chords.emplace_back(pos.back(), pos.front());
  }
  int m = 2 * n;
  auto inside = [m](int a, int b, int x) {
    int len = (b - a + m) % m;
    int off = (x - a + m) % m;
    return 0 < off && off < len;
  };
  for (size_t i = 0; i < chords.size(); ++i)
    for (size_t j = i + 1; j < chords.size(); ++j) {
      auto [a, b] = chords[i];
      auto [c, d] = chords[j];
      if (a == c || a == d || b == c || b == d) continue;  // shared endpoint
      if (inside(a, b, c) != inside(a, b, d)) return false;
    }
  return true;
}

int k_family(const FinitePoset& p, int k) {
  int n = p.size();
  if (n > 20) fail(errc::size_limit, "oracle::k_family: more than 20 elements");
  if (k < 1) fail(errc::bad_input, "oracle::k_family: k must be positive");
  // topological element order for the longest-chain scan
  std::vector<int> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::pair<int, int>> keyed;
  for (int v = 0; v < n; ++v) {
    int depth = 0;
    for (int u = 0; u < n; ++u)
      if (p.less.test(u, v)) ++depth;
    keyed.emplace_back(depth, v);
  }
  std::sort(keyed.begin(), keyed.end());
  int best = 0;
  std::vector<int> len(static_cast<size_t>(n), 0);
  for (std::uint32_t subset = 0; subset < (1u << n); ++subset) {
    if (__builtin_popcount(subset) <= best) continue;
    bool ok = true;
    for (auto [depth, v] : keyed) {
      (void)depth;
      if (!(subset & (1u << v))) continue;
      int l = 1;
      for (int u = 0; u < n; ++u)
        if ((subset & (1u << u)) && p.less.test(u, v)) l = std::max(l, len[static_cast<size_t>(u)] + 1);
      len[static_cast<size_t>(v)] = l;
      if (l > k) {
        ok = false;
        break;
      }
    }
    if (ok) best = __builtin_popcount(subset);
  }
  return best;
}

std::int64_t chain_count(const FinitePoset& p, int m) {
  if (p.size() > 300 || m > 4) fail(errc::size_limit, "oracle::chain_count: beyond guard");
  if (m < 0) fail(errc::bad_input, "oracle::chain_count: m must be nonnegative");
  auto bot = p.bottom();
  auto top = p.top();
  if (!bot || !top) fail(errc::no_bounds, "oracle::chain_count: poset lacks unique bounds");
  if (m == 0) return 1;
  std::int64_t count = 0;
  auto rec = [&](auto&& self, int prev, int depth) -> void {
    for (int v = 0; v < p.size(); ++v) {
      if (v == *bot || v == *top) continue;
      if (prev >= 0 && !p.less.test(prev, v)) continue;
      if (depth + 1 == m)
        ++count;
      else
        self(self, v, depth + 1);
    }
  };
  rec(rec, -1, 0);
  return count;
}

std::vector<std::vector<std::int64_t>> mobius_matrix(const FinitePoset& p) {
  int n = p.size();
  if (n > 300) fail(errc::size_limit, "oracle::mobius_matrix: more than 300 elements");
  // topological order makes the zeta matrix unitriangular
  std::vector<std::pair<int, int>> keyed;
  for (int v = 0; v < n; ++v) {
    int depth = 0;
    for (int u = 0; u < n; ++u)
      if (p.less.test(u, v)) ++depth;
    keyed.emplace_back(depth, v);
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<int> order(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<size_t>(i)] = keyed[static_cast<size_t>(i)].second;

  // invert by forward substitution: M = Z^{-1} in the permuted basis
  std::vector<std::vector<std::int64_t>> m_perm(static_cast<size_t>(n),
                                                std::vector<std::int64_t>(static_cast<size_t>(n), 0));
  auto zeta = [&](int i, int j) {
    int a = order[static_cast<size_t>(i)], b = order[static_cast<size_t>(j)];
    return a == b || p.less.test(a, b) ? 1 : 0;
  };
  for (int i = 0; i < n; ++i) {
    m_perm[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
    for (int j = i + 1; j < n; ++j) {
      std::int64_t acc = 0;
      for (int k = i; k < j; ++k)
        if (zeta(k, j)) acc += m_perm[static_cast<size_t>(i)][static_cast<size_t>(k)];
      m_perm[static_cast<size_t>(i)][static_cast<size_t>(j)] = -acc;
    }
  }
  std::vector<std::vector<std::int64_t>> out(static_cast<size_t>(n),
                                             std::vector<std::int64_t>(static_cast<size_t>(n), 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      out[static_cast<size_t>(order[static_cast<size_t>(i)])]
         [static_cast<size_t>(order[static_cast<size_t>(j)])] =
          m_perm[static_cast<size_t>(i)][static_cast<size_t>(j)];
  return out;
}

}  // namespace ncposet::oracle
