#include "ncposet/maps.hpp"

#include <algorithm>
#include <numeric>

#include "ncposet/objects.hpp"
#include "ncposet/stats.hpp"

namespace ncposet {

namespace {

std::vector<int> block_of(const PartitionA& pi) {
  std::vector<int> blk(static_cast<size_t>(pi.n) + 1, -1);
  for (size_t i = 0; i < pi.blocks.size(); ++i)
    for (int e : pi.blocks[i]) blk[static_cast<size_t>(e)] = static_cast<int>(i);
  return blk;
}

// f on the restriction of pi to the ascending element list `sub`, realized on
// values 1..|sub| in the returned vector.
std::vector<int> f_rec(const std::vector<int>& blk, const std::vector<int>& sub) {
  int m = static_cast<int>(sub.size());
  std::vector<int> out(static_cast<size_t>(m), 0);
  if (m == 0) return out;
  int head_block = blk[static_cast<size_t>(sub.front())];
  int k_idx = 0;  // index in sub of the largest element sharing the head's block
  for (int i = 0; i < m; ++i)
    if (blk[static_cast<size_t>(sub[static_cast<size_t>(i)])] == head_block) k_idx = i;
  out[static_cast<size_t>(k_idx)] = m;
  std::vector<int> left(sub.begin(), sub.begin() + k_idx);
  std::vector<int> right(sub.begin() + k_idx + 1, sub.end());
  std::vector<int> lv = f_rec(blk, left);
  std::vector<int> rv = f_rec(blk, right);
  for (int i = 0; i < k_idx; ++i)
    out[static_cast<size_t>(i)] = lv[static_cast<size_t>(i)] + (m - 1 - k_idx);
  for (size_t i = 0; i < rv.size(); ++i) out[static_cast<size_t>(k_idx) + 1 + i] = rv[i];
  return out;
}

}  // namespace

Permutation f_map(const PartitionA& pi) {
  if (!is_noncrossing_A(pi)) fail(errc::not_noncrossing, "f_map: partition is crossing");
  std::vector<int> sub(static_cast<size_t>(pi.n));
  std::iota(sub.begin(), sub.end(), 1);
  return Permutation{f_rec(block_of(pi), sub)};
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); }
};

void f_inv_rec(const std::vector<int>& sub, const std::vector<int>& vals, UnionFind& uf) {
  int m = static_cast<int>(sub.size());
  if (m == 0) return;
  int k_idx = static_cast<int>(std::max_element(vals.begin(), vals.end()) - vals.begin());
  uf.unite(sub.front(), sub[static_cast<size_t>(k_idx)]);
  f_inv_rec({sub.begin(), sub.begin() + k_idx}, {vals.begin(), vals.begin() + k_idx}, uf);
  f_inv_rec({sub.begin() + k_idx + 1, sub.end()}, {vals.begin() + k_idx + 1, vals.end()}, uf);
}

Permutation pattern132() { return Permutation{{1, 3, 2}}; }
Permutation pattern321() { return Permutation{{3, 2, 1}}; }

}  // namespace

PartitionA f_inverse(const Permutation& p) {
  if (!avoids_pattern(p, pattern132())) fail(errc::not_avoiding, "f_inverse: not 132-avoiding");
  int n = p.n();
  UnionFind uf(n + 1);
  std::vector<int> sub(static_cast<size_t>(n));
  std::iota(sub.begin(), sub.end(), 1);
  f_inv_rec(sub, p.entries, uf);
  std::vector<std::vector<int>> groups(static_cast<size_t>(n) + 1);
  for (int e = 1; e <= n; ++e) groups[static_cast<size_t>(uf.find(e))].push_back(e);
  std::vector<std::vector<int>> blocks;
  for (auto& g : groups)
    if (!g.empty()) blocks.push_back(std::move(g));
  return make_partition_a(n, std::move(blocks));
}

Permutation theta_map(const PartitionA& pi) {
  if (!is_noncrossing_A(pi)) fail(errc::not_noncrossing, "theta_map: partition is crossing");
  int n = pi.n;
  std::vector<int> minima, maxima;
  for (const auto& blk : pi.blocks) {
    if (std::find(blk.begin(), blk.end(), 1) != blk.end()) continue;
    minima.push_back(*std::min_element(blk.begin(), blk.end()));
    maxima.push_back(*std::max_element(blk.begin(), blk.end()));
  }
  std::sort(minima.begin(), minima.end());
  std::sort(maxima.begin(), maxima.end());
  std::vector<int> entries(static_cast<size_t>(n), 0);
  std::vector<bool> used(static_cast<size_t>(n) + 1, false);
  for (size_t i = 0; i < minima.size(); ++i) {
    entries[static_cast<size_t>(minima[i] - 2)] = maxima[i];
    used[static_cast<size_t>(maxima[i])] = true;
  }
  int next = 1;
  for (auto& e : entries) {
    if (e != 0) continue;
    while (used[static_cast<size_t>(next)]) ++next;
    e = next++;
  }
  return Permutation{entries};
}

Permutation s_map(const Permutation& p) {
  if (!avoids_pattern(p, pattern321())) fail(errc::not_avoiding, "s_map: not 321-avoiding");
  int n = p.n();
  std::vector<int> rev(p.entries.rbegin(), p.entries.rend());
  std::vector<bool> is_min(static_cast<size_t>(n), false);
  std::vector<bool> used(static_cast<size_t>(n) + 1, false);
  int best = INT32_MAX;
  for (int i = 0; i < n; ++i)
    if (rev[static_cast<size_t>(i)] < best) {
      best = rev[static_cast<size_t>(i)];
      is_min[static_cast<size_t>(i)] = true;
      used[static_cast<size_t>(rev[static_cast<size_t>(i)])] = true;
    }
  std::vector<int> out(static_cast<size_t>(n), 0);
  int prefix_min = INT32_MAX;
  for (int i = 0; i < n; ++i) {
    if (is_min[static_cast<size_t>(i)]) {
      out[static_cast<size_t>(i)] = rev[static_cast<size_t>(i)];
    } else {
      // smallest unused value above the running minimum keeps the minima intact
      int v = prefix_min + 1;
      while (used[static_cast<size_t>(v)]) ++v;
      used[static_cast<size_t>(v)] = true;
      out[static_cast<size_t>(i)] = v;
    }
    prefix_min = std::min(prefix_min, out[static_cast<size_t>(i)]);
  }
  return Permutation{out};
}

PairEncoding b_encode(const SignedPermutation& b) {
  if (!is_b_restricted(b)) fail(errc::not_in_class, "b_encode: word contains 21 or 2bar-1bar");
  IndexSet left;
  for (int sym : b.word)
    if (sym < 0) left.push_back(-sym);
  std::sort(left.begin(), left.end());
  return PairEncoding{left, descent_set_B(b), b.n()};
}

SignedPermutation b_decode(const PairEncoding& enc) {
  if (enc.left.size() != enc.right.size())
    fail(errc::cardinality_mismatch, "b_decode: sides of unequal size");
  for (int e : enc.left)
    if (e < 1 || e > enc.n) fail(errc::out_of_range, "b_decode: left not within [n]");
  for (int e : enc.right)
    if (e < 1 || e > enc.n) fail(errc::out_of_range, "b_decode: right not within [n]");
  return detail::shuffle_from_sets(enc.left, enc.right, enc.n);
}

namespace {

IndexSet complement(const IndexSet& s, int n) {
  IndexSet out;
  for (int i = 1; i <= n; ++i)
    if (!std::binary_search(s.begin(), s.end(), i)) out.push_back(i);
  return out;
}

}  // namespace

SignedPermutation pb_dual(const SignedPermutation& b) {
  PairEncoding enc = b_encode(b);
  return b_decode(PairEncoding{complement(enc.left, enc.n), complement(enc.right, enc.n), enc.n});
}

SignedPermutation qb_dual(const SignedPermutation& b) {
  validate(b);
  int n = b.n();
  SignedPermutation out;
  out.word.reserve(static_cast<size_t>(n));
  for (auto it = b.word.rbegin(); it != b.word.rend(); ++it) {
    int mag = n + 1 - std::abs(*it);
    out.word.push_back(*it > 0 ? -mag : mag);
  }
  return out;
}

namespace {

// Planar-region complement on a circle with `slots` marked points. Blocks of
// `chords` never cross; two query points fall in the same region iff no chord
// separates them, which is a cyclic interleaving test.
struct ChordDiagram {
  int slots;
  std::vector<std::pair<int, int>> chords;

  void add_block(std::vector<int> pos) {
    std::sort(pos.begin(), pos.end());
    for (size_t i = 0; i + 1 < pos.size(); ++i) chords.emplace_back(pos[i], pos[i + 1]);
    if (pos.size() >= 3) chords.emplace_back(pos.back(), pos.front());
  }

  bool in_arc(int a, int b, int x) const {  // strictly inside the clockwise arc a->b
    int len = (b - a + slots) % slots;
    int off = (x - a + slots) % slots;
    return 0 < off && off < len;
  }

  bool separated(int p, int q) const {
    for (const auto& [a, b] : chords)
      if (in_arc(a, b, p) != in_arc(a, b, q)) return true;
    return false;
  }

  // regions of the query points, as index groups
  std::vector<std::vector<int>> regions(const std::vector<int>& points) const {
    int m = static_cast<int>(points.size());
    UnionFind uf(m);
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        if (!separated(points[static_cast<size_t>(i)], points[static_cast<size_t>(j)]))
          uf.unite(i, j);
    std::vector<std::vector<int>> groups(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) groups[static_cast<size_t>(uf.find(i))].push_back(i);
    std::vector<std::vector<int>> out;
    for (auto& g : groups)
      if (!g.empty()) out.push_back(std::move(g));
    return out;
  }
};

}  // namespace

PartitionA kreweras_g(const PartitionA& pi) {
  if (!is_noncrossing_A(pi)) fail(errc::not_noncrossing, "kreweras_g: partition is crossing");
  int n = pi.n;
  // element i at slot 2(i-1); primed i at slot 2(n-i)+1, i.e. i' sits between
  // n+2-i and n+1-i going clockwise
  ChordDiagram diagram{2 * n, {}};
  for (const auto& blk : pi.blocks) {
    std::vector<int> pos;
    for (int e : blk) pos.push_back(2 * (e - 1));
    diagram.add_block(std::move(pos));
  }
  std::vector<int> primes(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) primes[static_cast<size_t>(i - 1)] = 2 * (n - i) + 1;
  std::vector<std::vector<int>> blocks;
  for (auto& group : diagram.regions(primes)) {
    std::vector<int> blk;
    for (int idx : group) blk.push_back(idx + 1);  // prime label i' -> i
    blocks.push_back(std::move(blk));
  }
  return make_partition_a(n, std::move(blocks));
}

PartitionB kreweras_h(const PartitionB& pi) {
  if (!is_noncrossing_B(pi)) fail(errc::not_noncrossing, "kreweras_h: partition is crossing");
  int n = pi.n;
  // unprimed e at slot 2*circle_pos(e); the j-th primed point (order
  // 1',..,n',1bar',..,nbar') at slot 4n+1-2j, so 1' sits between 1 and nbar
  // and the primes continue counterclockwise
  ChordDiagram diagram{4 * n, {}};
  for (const auto& blk : pi.blocks) {
    std::vector<int> pos;
    for (int e : blk) pos.push_back(2 * circle_pos(e, n));
    diagram.add_block(std::move(pos));
  }
  std::vector<int> primes(static_cast<size_t>(2 * n));
  for (int j = 1; j <= 2 * n; ++j) primes[static_cast<size_t>(j - 1)] = (4 * n + 1 - 2 * j) % (4 * n);
  std::vector<std::vector<int>> blocks;
  for (auto& group : diagram.regions(primes)) {
    std::vector<int> blk;
    for (int idx : group) blk.push_back(circle_label(idx, n));  // prime index j-1 back to +/-k
    blocks.push_back(std::move(blk));
  }
  PartitionB out = make_partition_b(n, std::move(blocks));
  validate_type_b(out);
  return out;
}

}  // namespace ncposet
