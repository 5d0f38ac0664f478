#include "ncposet/stats.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace ncposet {

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::int64_t catalan(int n) { return binomial(2 * n, n) / (n + 1); }

std::int64_t narayana(int n, int k) {
  if (n < 1 || k < 0 || k > n - 1)
    fail(errc::out_of_range, "narayana: need n >= 1 and 0 <= k <= n-1");
  return binomial(n, k) * binomial(n, k + 1) / n;
}

std::int64_t chain_count_formula_B(int n, int m) {
  if (n < 1 || m < 0) fail(errc::out_of_range, "chain_count_formula_B: bad arguments");
  if (m == 0) return 1;
  if (m > n - 1) return 0;  // needs 0 < k_1 < ... < k_m < n
  __int128 fact[32];
  if (n > 20) fail(errc::size_limit, "chain_count_formula_B: n too large");
  fact[0] = 1;
  for (int i = 1; i <= n; ++i) fact[i] = fact[i - 1] * i;
  std::vector<int> ks(static_cast<size_t>(m));
  __int128 total = 0;
  auto rec = [&](auto&& self, int idx, int lo) -> void {
    if (idx == m) {
      __int128 term = fact[n];  // multinomial over the gap sizes
      int prev = 0;
      for (int k : ks) {
        term /= fact[k - prev];
        term *= binomial(n, k);
        prev = k;
      }
      term /= fact[n - prev];
      total += term;
      return;
    }
    for (int k = lo; k <= n - 1 - (m - 1 - idx); ++k) {
      ks[static_cast<size_t>(idx)] = k;
      self(self, idx + 1, k + 1);
    }
  };
  rec(rec, 0, 1);
  if (total > INT64_MAX) fail(errc::out_of_range, "chain_count_formula_B: overflows 64 bits");
  return static_cast<std::int64_t>(total);
}

IndexSet descent_set_A(const Permutation& p) {
  validate(p);
  IndexSet s;
  for (int i = 1; i < p.n(); ++i)
    if (p.at(i) > p.at(i + 1)) s.push_back(i);
  return s;
}

IndexSet excedence_set_A(const Permutation& p) {
  validate(p);
  IndexSet s;
  for (int i = 1; i <= p.n(); ++i)
    if (p.at(i) > i) s.push_back(i);
  return s;
}

IndexSet left_to_right_minima(const Permutation& p) {
  validate(p);
  IndexSet s;
  int best = INT32_MAX;
  for (int i = 1; i <= p.n(); ++i) {
    if (p.at(i) < best) {
      best = p.at(i);
      s.push_back(i);
    }
  }
  return s;
}

namespace {

// key under 1 < 2 < ... < n < nbar < ... < 2bar < 1bar
int descent_key(int sym, int n) { return sym > 0 ? sym : 2 * n + 1 + sym; }

}  // namespace

IndexSet descent_set_B(const SignedPermutation& b) {
  validate(b);
  int n = b.n();
  IndexSet s;
  for (int i = 0; i + 1 < n; ++i)
    if (descent_key(b.word[static_cast<size_t>(i)], n) >
        descent_key(b.word[static_cast<size_t>(i + 1)], n))
      s.push_back(i + 1);
  if (b.word[static_cast<size_t>(n - 1)] < 0) s.push_back(n);
  return s;
}

Permutation sigma_of(const SignedPermutation& b) {
  validate(b);
  int n = b.n();
  // key under 1 < ... < n < n+1 < 1bar < 2bar < ... < nbar
  auto key = [n](int sym) { return sym > 0 ? sym : n + 1 - sym; };
  std::vector<int> keys;
  keys.reserve(static_cast<size_t>(n) + 1);
  for (int sym : b.word) keys.push_back(key(sym));
  keys.push_back(n + 1);
  std::vector<int> sorted = keys;
  std::sort(sorted.begin(), sorted.end());
  Permutation sigma;
  sigma.entries.reserve(static_cast<size_t>(n) + 1);
  for (int k : keys)
    sigma.entries.push_back(
        static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), k) - sorted.begin()) + 1);
  return sigma;
}

IndexSet excedence_set_B1(const SignedPermutation& b) {
  Permutation sigma = sigma_of(b);
  IndexSet s;
  for (int i = 1; i <= b.n(); ++i)
    if (sigma.at(i) > i) s.push_back(i);
  return s;
}

IndexSet excedence_set_B2(const SignedPermutation& b) {
  validate(b);
  IndexSet s;
  for (int i = 1; i <= b.n(); ++i) {
    int sym = b.word[static_cast<size_t>(i - 1)];
    if (std::abs(sym) > i || sym == -i) s.push_back(i);
  }
  return s;
}

IndexSet block_minima(const PartitionA& pi) {
  validate(pi);
  IndexSet s;
  for (const auto& blk : pi.blocks) s.push_back(*std::min_element(blk.begin(), blk.end()));
  std::sort(s.begin(), s.end());
  return s;
}

std::pair<IndexSet, IndexSet> lr_encoding_B(const PartitionB& pi) {
  validate_type_b(pi);
  int n = pi.n;
  int m = 2 * n;
  std::vector<int> blk(static_cast<size_t>(m), -1);
  for (size_t i = 0; i < pi.blocks.size(); ++i)
    for (int e : pi.blocks[i]) blk[static_cast<size_t>(circle_pos(e, n))] = static_cast<int>(i);

  std::vector<bool> zero(pi.blocks.size(), false);
  std::vector<int> bar_image(pi.blocks.size(), -1);
  for (size_t i = 0; i < pi.blocks.size(); ++i) {
    bar_image[i] = blk[static_cast<size_t>(circle_pos(-pi.blocks[i].front(), n))];
    zero[i] = bar_image[i] == static_cast<int>(i);
  }

  std::vector<bool> alive(static_cast<size_t>(m), true);
  std::vector<bool> gone(pi.blocks.size(), false);
  auto alive_pred = [&](int pos) {
    for (int d = 1; d < m; ++d) {
      int q = (pos - d + m) % m;
      if (alive[static_cast<size_t>(q)]) return q;
    }
    return pos;
  };
  auto alive_succ = [&](int pos) {
    for (int d = 1; d < m; ++d) {
      int q = (pos + d) % m;
      if (alive[static_cast<size_t>(q)]) return q;
    }
    return pos;
  };

  IndexSet lset, rset;
  for (;;) {
    // collect peelable blocks: non-zero, all elements alive-consecutive
    int best_block = -1, best_start = m, best_end = -1;
    bool nonzero_left = false;
    for (size_t i = 0; i < pi.blocks.size(); ++i) {
      if (gone[i] || zero[i]) continue;
      nonzero_left = true;
      int start = -1, end = -1, boundary = 0;
      for (int e : pi.blocks[i]) {
        int pos = circle_pos(e, n);
        if (blk[static_cast<size_t>(alive_pred(pos))] != static_cast<int>(i)) {
          start = pos;
          ++boundary;
        }
        if (blk[static_cast<size_t>(alive_succ(pos))] != static_cast<int>(i)) end = pos;
      }
      if (boundary != 1) continue;  // not a single cyclic run
      if (start < best_start) {
        best_block = static_cast<int>(i);
        best_start = start;
        best_end = end;
      }
    }
    if (!nonzero_left) break;
    if (best_block == -1)
      fail(errc::not_noncrossing, "lr_encoding_B: no cyclically consecutive non-zero block");
    lset.push_back(std::abs(circle_label(best_start, n)));
    rset.push_back(std::abs(circle_label(best_end, n)));
    gone[static_cast<size_t>(best_block)] = true;
    gone[static_cast<size_t>(bar_image[static_cast<size_t>(best_block)])] = true;
    for (int e : pi.blocks[static_cast<size_t>(best_block)]) {
      alive[static_cast<size_t>(circle_pos(e, n))] = false;
      alive[static_cast<size_t>(circle_pos(-e, n))] = false;
    }
  }
  std::sort(lset.begin(), lset.end());
  std::sort(rset.begin(), rset.end());
  return {lset, rset};
}

IndexSet reverse_complement_alpha(const IndexSet& s, int n) {
  for (int e : s)
    if (e < 1 || e > n - 1) fail(errc::out_of_range, "alpha: set not contained in [n-1]");
  IndexSet out;
  for (int i = 1; i <= n - 1; ++i)
    if (!std::binary_search(s.begin(), s.end(), n - i)) out.push_back(i);
  return out;
}

}  // namespace ncposet
