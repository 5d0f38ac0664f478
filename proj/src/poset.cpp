#include "ncposet/poset.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

#include "json.hpp"
#include "ncposet/maps.hpp"
#include "ncposet/objects.hpp"
#include "ncposet/stats.hpp"

namespace ncposet {

std::optional<int> FinitePoset::bottom() const {
  std::optional<int> found;
  for (int i = 0; i < size(); ++i) {
    bool minimal = true;
    for (int j = 0; j < size() && minimal; ++j)
      if (less.test(j, i)) minimal = false;
    if (!minimal) continue;
    if (found) return std::nullopt;
    found = i;
  }
  return found;
}

std::optional<int> FinitePoset::top() const {
  std::optional<int> found;
  for (int i = 0; i < size(); ++i) {
    if (less.row_count(i) != 0) continue;
    if (found) return std::nullopt;
    found = i;
  }
  return found;
}

int FinitePoset::max_rank() const {
  int m = 0;
  for (int r : rank) m = std::max(m, r);
  return m;
}

int FinitePoset::index_of(const std::string& label) const {
  auto it = label_index.find(label);
  return it == label_index.end() ? -1 : it->second;
}

namespace {

void finish_poset(FinitePoset& p) {
  if (!kernels::is_irreflexive(p.less) || !kernels::is_transitive(p.less))
    fail(errc::bad_input, "poset: relation is not a strict order");
  BitMatrix cov = kernels::transitive_reduction(p.less, kernels::exec::parallel);
  p.covers.clear();
  for (int i = 0; i < p.size(); ++i)
    for (int j : cov.row_indices(i)) p.covers.emplace_back(i, j);
  std::sort(p.covers.begin(), p.covers.end(), [&](const auto& a, const auto& b) {
    return std::tuple(p.rank[static_cast<size_t>(a.first)], a.first, a.second) <
           std::tuple(p.rank[static_cast<size_t>(b.first)], b.first, b.second);
  });
  p.label_index.clear();
  for (int i = 0; i < p.size(); ++i) p.label_index.emplace(p.labels[static_cast<size_t>(i)], i);
}

FinitePoset build_mask_poset(std::string family, int n, std::vector<std::string> labels,
                             const std::vector<std::uint32_t>& masks) {
  FinitePoset p;
  p.family = std::move(family);
  p.n = n;
  p.labels = std::move(labels);
  p.rank.reserve(masks.size());
  for (auto m : masks) p.rank.push_back(__builtin_popcount(m));
  p.less = kernels::relation_matrix(
      static_cast<int>(masks.size()),
      [&masks](int i, int j) {
        auto a = masks[static_cast<size_t>(i)];
        auto b = masks[static_cast<size_t>(j)];
        return a != b && (a & ~b) == 0;
      },
      kernels::exec::parallel);
  finish_poset(p);
  return p;
}

std::uint32_t set_mask(const IndexSet& s) {
  std::uint32_t m = 0;
  for (int e : s) m |= 1u << e;
  return m;
}

// refinement data: per element, block id of every ground point plus the block
// leader (first ground point of its block)
struct RefinementData {
  int ground = 0;
  std::vector<std::vector<int>> bid;
  std::vector<std::vector<int>> leader;
  std::vector<int> nblocks;

  bool strictly_finer(int i, int j) const {
    if (nblocks[static_cast<size_t>(i)] <= nblocks[static_cast<size_t>(j)]) return false;
    const auto& bi = leader[static_cast<size_t>(i)];
    const auto& bj = bid[static_cast<size_t>(j)];
    for (int e = 0; e < ground; ++e)
      if (bj[static_cast<size_t>(bi[static_cast<size_t>(e)])] != bj[static_cast<size_t>(e)])
        return false;
    return true;
  }
};

template <typename Part, typename PosFn>
void push_refinement(RefinementData& data, const Part& pi, PosFn pos) {
  std::vector<int> bid(static_cast<size_t>(data.ground), -1);
  for (size_t b = 0; b < pi.blocks.size(); ++b)
    for (int e : pi.blocks[b]) bid[static_cast<size_t>(pos(e))] = static_cast<int>(b);
  std::vector<int> leader(static_cast<size_t>(data.ground), -1);
  std::vector<int> first(pi.blocks.size(), -1);
  for (int e = 0; e < data.ground; ++e) {
    int b = bid[static_cast<size_t>(e)];
    if (first[static_cast<size_t>(b)] < 0) first[static_cast<size_t>(b)] = e;
    leader[static_cast<size_t>(e)] = first[static_cast<size_t>(b)];
  }
  data.bid.push_back(std::move(bid));
  data.leader.push_back(std::move(leader));
  data.nblocks.push_back(static_cast<int>(pi.blocks.size()));
}

FinitePoset build_refinement_poset(std::string family, int n, std::vector<std::string> labels,
                                   const RefinementData& data, std::vector<int> ranks) {
  FinitePoset p;
  p.family = std::move(family);
  p.n = n;
  p.labels = std::move(labels);
  p.rank = std::move(ranks);
  p.less = kernels::relation_matrix(
      static_cast<int>(p.labels.size()),
      [&data](int i, int j) { return data.strictly_finer(i, j); }, kernels::exec::parallel);
  finish_poset(p);
  return p;
}

}  // namespace

FinitePoset build_poset(const std::string& family, int n) {
  if (family == "PA" || family == "QA") {
    auto perms = family == "PA" ? gen_avoiding_132(n) : gen_avoiding_321(n);
    std::vector<std::string> labels;
    std::vector<std::uint32_t> masks;
    for (const auto& p : perms) {
      labels.push_back(format(p));
      masks.push_back(set_mask(family == "PA" ? descent_set_A(p) : excedence_set_A(p)));
    }
    return build_mask_poset(family, n, std::move(labels), masks);
  }
  if (family == "PB" || family == "QB") {
    auto words = gen_B_restricted(n);
    std::vector<std::string> labels;
    std::vector<std::uint32_t> masks;
    for (const auto& b : words) {
      labels.push_back(format(b));
      masks.push_back(set_mask(family == "PB" ? descent_set_B(b) : excedence_set_B2(b)));
    }
    return build_mask_poset(family, n, std::move(labels), masks);
  }
  if (family == "NCA") {
    auto parts = gen_nc_A(n);
    std::vector<std::string> labels;
    std::vector<int> ranks;
    RefinementData data;
    data.ground = n;
    for (const auto& pi : parts) {
      labels.push_back(format(pi));
      ranks.push_back(n - static_cast<int>(pi.blocks.size()));
      push_refinement(data, pi, [](int e) { return e - 1; });
    }
    return build_refinement_poset(family, n, std::move(labels), data, std::move(ranks));
  }
  if (family == "NCB") {
    auto parts = gen_nc_B(n);
    std::vector<std::string> labels;
    std::vector<int> ranks;
    RefinementData data;
    data.ground = 2 * n;
    for (const auto& pi : parts) {
      labels.push_back(format(pi));
      ranks.push_back(n - nonzero_block_pairs(pi));
      push_refinement(data, pi, [n](int e) { return circle_pos(e, n); });
    }
    return build_refinement_poset(family, n, std::move(labels), data, std::move(ranks));
  }
  fail(errc::unknown_family, "build_poset: unknown family '" + family + "'");
}

FinitePoset from_covers(std::vector<std::string> labels, std::vector<int> ranks,
                        const std::vector<std::pair<int, int>>& covers, std::string family) {
  int n = static_cast<int>(labels.size());
  FinitePoset p;
  p.family = std::move(family);
  p.n = n;
  p.labels = std::move(labels);
  p.rank = std::move(ranks);
  p.less = BitMatrix(n);
  std::vector<std::vector<int>> up(static_cast<size_t>(n));
  for (auto [lo, hi] : covers) up[static_cast<size_t>(lo)].push_back(hi);
  // transitive closure by memoized DFS
  std::vector<char> done(static_cast<size_t>(n), 0);
  auto close = [&](auto&& self, int v) -> void {
    if (done[static_cast<size_t>(v)]) return;
    done[static_cast<size_t>(v)] = 1;
    for (int w : up[static_cast<size_t>(v)]) {
      self(self, w);
      p.less.set(v, w);
      for (size_t word = 0; word < p.less.words_per_row(); ++word)
        p.less.row(v)[word] |= p.less.row(w)[word];
    }
  };
  for (int v = 0; v < n; ++v) close(close, v);
  finish_poset(p);
  return p;
}

FinitePoset dual_of(const FinitePoset& p) {
  FinitePoset d;
  d.family = p.family + "*";
  d.n = p.n;
  d.labels = p.labels;
  d.less = p.less.transposed();
  int mr = p.max_rank();
  for (int r : p.rank) d.rank.push_back(mr - r);
  finish_poset(d);
  return d;
}

RankProfile rank_profile(const FinitePoset& p) {
  RankProfile prof;
  int mr = p.max_rank();
  prof.sizes.assign(static_cast<size_t>(mr) + 1, 0);
  for (int r : p.rank) {
    if (r < 0) fail(errc::bad_input, "rank_profile: negative rank");
    ++prof.sizes[static_cast<size_t>(r)];
  }
  prof.ranked = true;
  for (auto [lo, hi] : p.covers)
    if (p.rank[static_cast<size_t>(hi)] != p.rank[static_cast<size_t>(lo)] + 1) prof.ranked = false;
  for (int i = 0; i < p.size() && prof.ranked; ++i) {
    bool minimal = true, maximal = p.less.row_count(i) == 0;
    for (int j = 0; j < p.size() && minimal; ++j)
      if (p.less.test(j, i)) minimal = false;
    if (minimal && p.rank[static_cast<size_t>(i)] != 0) prof.ranked = false;
    if (maximal && p.rank[static_cast<size_t>(i)] != mr) prof.ranked = false;
  }
  prof.symmetric = std::equal(prof.sizes.begin(), prof.sizes.end(), prof.sizes.rbegin());
  prof.unimodal = true;
  size_t peak = static_cast<size_t>(
      std::max_element(prof.sizes.begin(), prof.sizes.end()) - prof.sizes.begin());
  for (size_t i = 1; i <= peak; ++i)
    if (prof.sizes[i] < prof.sizes[i - 1]) prof.unimodal = false;
  for (size_t i = peak + 1; i < prof.sizes.size(); ++i)
    if (prof.sizes[i] > prof.sizes[i - 1]) prof.unimodal = false;
  return prof;
}

std::int64_t mobius(const FinitePoset& p, int x, int y) {
  if (x == y) return 1;
  if (!p.less.test(x, y)) fail(errc::incomparable_pair, "mobius: x is not below y");
  std::vector<int> interval;
  for (int z = 0; z < p.size(); ++z)
    if ((z == x || p.less.test(x, z)) && (z == y || p.less.test(z, y))) interval.push_back(z);
  // topological order: the down-degree within the interval grows strictly
  // along the order
  std::vector<std::pair<int, int>> keyed;
  for (int z : interval) {
    int depth = 0;
    for (int w : interval)
      if (p.less.test(w, z)) ++depth;
    keyed.emplace_back(depth, z);
  }
  std::sort(keyed.begin(), keyed.end());
  for (size_t i = 0; i < interval.size(); ++i) interval[i] = keyed[i].second;
  std::vector<std::int64_t> mu(interval.size(), 0);
  mu[0] = 1;
  for (size_t i = 1; i < interval.size(); ++i) {
    std::int64_t acc = 0;
    for (size_t j = 0; j < i; ++j)
      if (interval[j] == x || p.less.test(interval[j], interval[i])) acc += mu[j];
    mu[i] = -acc;
  }
  return mu.back();
}

std::int64_t count_chains(const FinitePoset& p, int m) {
  if (m < 0) fail(errc::bad_input, "count_chains: m must be nonnegative");
  auto bot = p.bottom();
  auto top = p.top();
  if (!bot || !top) fail(errc::no_bounds, "count_chains: poset lacks a unique bottom or top");
  if (m == 0) return 1;
  std::vector<int> interior;
  for (int i = 0; i < p.size(); ++i)
    if (i != *bot && i != *top) interior.push_back(i);
  std::vector<std::int64_t> ways(interior.size(), 1);
  for (int step = 1; step < m; ++step) {
    std::vector<std::int64_t> next(interior.size(), 0);
    for (size_t vi = 0; vi < interior.size(); ++vi)
      for (size_t ui = 0; ui < interior.size(); ++ui)
        if (p.less.test(interior[ui], interior[vi])) next[vi] += ways[ui];
    ways = std::move(next);
  }
  return std::accumulate(ways.begin(), ways.end(), static_cast<std::int64_t>(0));
}

namespace {

// Hopcroft-Karp on the comparability bipartite graph.
int max_bipartite_matching(const std::vector<std::vector<int>>& adj, int nr) {
  int nl = static_cast<int>(adj.size());
  std::vector<int> match_l(static_cast<size_t>(nl), -1), match_r(static_cast<size_t>(nr), -1);
  std::vector<int> dist(static_cast<size_t>(nl), 0);
  const int inf = INT32_MAX;

  auto bfs = [&]() {
    std::deque<int> q;
    bool reachable_free = false;
    for (int u = 0; u < nl; ++u) {
      if (match_l[static_cast<size_t>(u)] < 0) {
        dist[static_cast<size_t>(u)] = 0;
        q.push_back(u);
      } else {
        dist[static_cast<size_t>(u)] = inf;
      }
    }
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      for (int v : adj[static_cast<size_t>(u)]) {
        int w = match_r[static_cast<size_t>(v)];
        if (w < 0) {
          reachable_free = true;
        } else if (dist[static_cast<size_t>(w)] == inf) {
          dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(u)] + 1;
          q.push_back(w);
        }
      }
    }
    return reachable_free;
  };
  auto dfs = [&](auto&& self, int u) -> bool {
    for (int v : adj[static_cast<size_t>(u)]) {
      int w = match_r[static_cast<size_t>(v)];
      if (w < 0 || (dist[static_cast<size_t>(w)] == dist[static_cast<size_t>(u)] + 1 && self(self, w))) {
        match_l[static_cast<size_t>(u)] = v;
        match_r[static_cast<size_t>(v)] = u;
        return true;
      }
    }
    dist[static_cast<size_t>(u)] = inf;
    return false;
  };

  int matching = 0;
  while (bfs())
    for (int u = 0; u < nl; ++u)
      if (match_l[static_cast<size_t>(u)] < 0 && dfs(dfs, u)) ++matching;
  return matching;
}

}  // namespace

int max_antichain(const FinitePoset& p) {
  std::vector<std::vector<int>> adj(static_cast<size_t>(p.size()));
  for (int i = 0; i < p.size(); ++i) adj[static_cast<size_t>(i)] = p.less.row_indices(i);
  return p.size() - max_bipartite_matching(adj, p.size());
}

namespace {

struct MinCostFlow {
  struct Edge {
    int to, cap, cost;
  };
  std::vector<Edge> edges;
  std::vector<std::vector<int>> adj;

  explicit MinCostFlow(int n) : adj(static_cast<size_t>(n)) {}

  void add(int u, int v, int cap, int cost) {
    adj[static_cast<size_t>(u)].push_back(static_cast<int>(edges.size()));
    edges.push_back({v, cap, cost});
    adj[static_cast<size_t>(v)].push_back(static_cast<int>(edges.size()));
    edges.push_back({u, 0, -cost});
  }

  // augments unit paths while they have negative cost; returns total cost
  std::int64_t run_negative(int s, int t) {
    int n = static_cast<int>(adj.size());
    std::int64_t total = 0;
    for (;;) {
      std::vector<std::int64_t> dist(static_cast<size_t>(n), INT64_MAX / 4);
      std::vector<int> via(static_cast<size_t>(n), -1);
      std::vector<char> inq(static_cast<size_t>(n), 0);
      std::deque<int> q{s};
      dist[static_cast<size_t>(s)] = 0;
      while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        inq[static_cast<size_t>(u)] = 0;
        for (int e : adj[static_cast<size_t>(u)]) {
          if (edges[static_cast<size_t>(e)].cap <= 0) continue;
          int v = edges[static_cast<size_t>(e)].to;
          std::int64_t nd = dist[static_cast<size_t>(u)] + edges[static_cast<size_t>(e)].cost;
          if (nd < dist[static_cast<size_t>(v)]) {
            dist[static_cast<size_t>(v)] = nd;
            via[static_cast<size_t>(v)] = e;
            if (!inq[static_cast<size_t>(v)]) {
              inq[static_cast<size_t>(v)] = 1;
              q.push_back(v);
            }
          }
        }
      }
      if (dist[static_cast<size_t>(t)] >= 0) break;
      total += dist[static_cast<size_t>(t)];
      for (int v = t; v != s;) {
        int e = via[static_cast<size_t>(v)];
        edges[static_cast<size_t>(e)].cap -= 1;
        edges[static_cast<size_t>(e ^ 1)].cap += 1;
        v = edges[static_cast<size_t>(e ^ 1)].to;
      }
    }
    return total;
  }
};

}  // namespace

int max_k_family(const FinitePoset& p, int k) {
  if (k < 1) fail(errc::bad_input, "max_k_family: k must be positive");
  int n = p.size();
  // Chains are unit flow paths; a chain of size c contributes cost k - c, so
  // the optimum equals n + min total cost over disjoint chain families.
  MinCostFlow flow(2 * n + 2);
  int s = 2 * n, t = 2 * n + 1;
  for (int v = 0; v < n; ++v) {
    flow.add(s, v, 1, k);
    flow.add(v, n + v, 1, -1);
    flow.add(n + v, t, 1, 0);
  }
  for (int u = 0; u < n; ++u)
    for (int v : p.less.row_indices(u)) flow.add(n + u, v, 1, 0);
  std::int64_t cost = flow.run_negative(s, t);
  return static_cast<int>(n + cost);
}

bool is_strongly_sperner(const FinitePoset& p) {
  RankProfile prof = rank_profile(p);
  if (!prof.ranked) fail(errc::not_ranked, "is_strongly_sperner: poset is not ranked");
  std::vector<std::int64_t> sorted = prof.sizes;
  std::sort(sorted.rbegin(), sorted.rend());
  std::int64_t acc = 0;
  for (size_t k = 1; k <= sorted.size(); ++k) {
    acc += sorted[k - 1];
    if (max_k_family(p, static_cast<int>(k)) != acc) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// isomorphism and self-duality
//
// Elements with identical strict-less row and column are interchangeable, so
// the search runs on the twin-class quotient with class sizes as labels,
// pruned by iterated color refinement.
namespace {

struct Quotient {
  std::vector<int> cls;
  std::vector<std::vector<int>> members;
  std::vector<std::vector<char>> rel;
  std::vector<int> color;
};

Quotient make_quotient(const BitMatrix& m) {
  int n = m.size();
  BitMatrix t = m.transposed();
  Quotient q;
  q.cls.assign(static_cast<size_t>(n), -1);
  std::map<std::vector<std::uint64_t>, int> ids;
  for (int i = 0; i < n; ++i) {
    std::vector<std::uint64_t> key(m.row(i), m.row(i) + m.words_per_row());
    key.insert(key.end(), t.row(i), t.row(i) + t.words_per_row());
    auto [it, fresh] = ids.emplace(std::move(key), static_cast<int>(q.members.size()));
    if (fresh) q.members.emplace_back();
    q.cls[static_cast<size_t>(i)] = it->second;
    q.members[static_cast<size_t>(it->second)].push_back(i);
  }
  int c = static_cast<int>(q.members.size());
  q.rel.assign(static_cast<size_t>(c), std::vector<char>(static_cast<size_t>(c), 0));
  for (int a = 0; a < c; ++a)
    for (int b = 0; b < c; ++b)
      q.rel[static_cast<size_t>(a)][static_cast<size_t>(b)] =
          m.test(q.members[static_cast<size_t>(a)].front(), q.members[static_cast<size_t>(b)].front());
  return q;
}

// joint color refinement so colors are comparable across the two quotients
void refine_colors(Quotient& qa, Quotient& qb) {
  size_t ca = qa.members.size(), cb = qb.members.size();
  qa.color.assign(ca, 0);
  qb.color.assign(cb, 0);
  auto signature = [](const Quotient& q, size_t i) {
    std::vector<std::int64_t> sig;
    sig.push_back(q.color[i]);
    sig.push_back(static_cast<std::int64_t>(q.members[i].size()));
    std::vector<std::pair<int, int>> out, in;
    for (size_t j = 0; j < q.members.size(); ++j) {
      if (q.rel[i][j]) out.emplace_back(q.color[j], static_cast<int>(q.members[j].size()));
      if (q.rel[j][i]) in.emplace_back(q.color[j], static_cast<int>(q.members[j].size()));
    }
    std::sort(out.begin(), out.end());
    std::sort(in.begin(), in.end());
    sig.push_back(static_cast<std::int64_t>(out.size()));
    for (auto& [c, s] : out) {
      sig.push_back(c);
      sig.push_back(s);
    }
    for (auto& [c, s] : in) {
      sig.push_back(c);
      sig.push_back(s);
    }
    return sig;
  };
  int colors = 1;
  for (size_t round = 0; round < ca + cb; ++round) {
    std::map<std::vector<std::int64_t>, int> ids;
    std::vector<int> na(ca), nb(cb);
    for (size_t i = 0; i < ca; ++i)
      na[i] = ids.emplace(signature(qa, i), static_cast<int>(ids.size())).first->second;
    for (size_t i = 0; i < cb; ++i)
      nb[i] = ids.emplace(signature(qb, i), static_cast<int>(ids.size())).first->second;
    qa.color = na;
    qb.color = nb;
    int now = static_cast<int>(ids.size());
    if (now == colors) break;
    colors = now;
  }
}

Witness find_isomorphism(const BitMatrix& a, const BitMatrix& b) {
  if (a.size() != b.size()) return {};
  Quotient qa = make_quotient(a);
  Quotient qb = make_quotient(b);
  if (qa.members.size() != qb.members.size()) return {};
  refine_colors(qa, qb);

  size_t c = qa.members.size();
  std::vector<int> order(c);
  std::iota(order.begin(), order.end(), 0);
  int max_color = 0;
  for (size_t i = 0; i < c; ++i) max_color = std::max(max_color, qa.color[i]);
  std::vector<int> freq(static_cast<size_t>(max_color) + 1, 0);
  for (size_t i = 0; i < c; ++i) ++freq[static_cast<size_t>(qa.color[i])];
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    int fx = freq[static_cast<size_t>(qa.color[static_cast<size_t>(x)])];
    int fy = freq[static_cast<size_t>(qa.color[static_cast<size_t>(y)])];
    return std::tuple(fx, x) < std::tuple(fy, y);
  });

  std::vector<int> cmap(c, -1);
  std::vector<char> used(c, 0);
  auto bt = [&](auto&& self, size_t pos) -> bool {
    if (pos == c) return true;
    int x = order[pos];
    for (size_t y = 0; y < c; ++y) {
      if (used[y] || qb.color[y] != qa.color[static_cast<size_t>(x)] ||
          qb.members[y].size() != qa.members[static_cast<size_t>(x)].size())
        continue;
      bool ok = true;
      for (size_t prev = 0; prev < pos && ok; ++prev) {
        int x2 = order[prev];
        int y2 = cmap[static_cast<size_t>(x2)];
        if (qa.rel[static_cast<size_t>(x)][static_cast<size_t>(x2)] !=
                qb.rel[y][static_cast<size_t>(y2)] ||
            qa.rel[static_cast<size_t>(x2)][static_cast<size_t>(x)] !=
                qb.rel[static_cast<size_t>(y2)][y])
          ok = false;
      }
      if (!ok) continue;
      cmap[static_cast<size_t>(x)] = static_cast<int>(y);
      used[y] = 1;
      if (self(self, pos + 1)) return true;
      used[y] = 0;
      cmap[static_cast<size_t>(x)] = -1;
    }
    return false;
  };
  if (!bt(bt, 0)) return {};

  Witness w;
  w.found = true;
  w.map.assign(static_cast<size_t>(a.size()), -1);
  for (size_t x = 0; x < c; ++x) {
    const auto& ma = qa.members[x];
    const auto& mb = qb.members[static_cast<size_t>(cmap[x])];
    for (size_t i = 0; i < ma.size(); ++i)
      w.map[static_cast<size_t>(ma[i])] = mb[i];
  }
  return w;
}

}  // namespace

Witness is_self_dual(const FinitePoset& p) { return find_isomorphism(p.less, p.less.transposed()); }

Witness is_isomorphic(const FinitePoset& p, const FinitePoset& q) {
  return find_isomorphism(p.less, q.less);
}

OrderRevReport order_reversal_scan(const FinitePoset& src, const FinitePoset& dst,
                                   const std::vector<int>& img) {
  OrderRevReport rep;
  for (int i = 0; i < src.size(); ++i) rep.pairs += src.less.row_count(i);
  auto bad = kernels::first_orderrev_violation(src.less, dst.less, img, kernels::exec::parallel);
  if (bad) {
    auto [x, y] = *bad;
    rep.pass = false;
    rep.violation = src.labels[static_cast<size_t>(x)] + " < " + src.labels[static_cast<size_t>(y)] +
                    " but images are not reversed";
  } else {
    rep.pass = true;
  }
  return rep;
}

OrderRevReport check_order_reversing(const std::string& map_name, int n) {
  FinitePoset src, dst;
  std::vector<int> img;
  auto images_by_label = [&](const std::vector<std::string>& out_labels) {
    img.clear();
    for (const auto& lbl : out_labels) {
      int idx = dst.index_of(lbl);
      if (idx < 0) fail(errc::bad_input, "check_order_reversing: image not in target: " + lbl);
      img.push_back(idx);
    }
  };

  if (map_name == "f" || map_name == "g") {
    src = build_poset("NCA", n);
    dst = map_name == "f" ? build_poset("PA", n) : src;
    std::vector<std::string> out;
    for (const auto& lbl : src.labels) {
      PartitionA pi = parse_partition_a(lbl);
      out.push_back(map_name == "f" ? format(f_map(pi)) : format(kreweras_g(pi)));
    }
    images_by_label(out);
  } else if (map_name == "lr" || map_name == "h") {
    src = build_poset("NCB", n);
    dst = map_name == "lr" ? build_poset("PB", n) : src;
    std::vector<std::string> out;
    for (const auto& lbl : src.labels) {
      PartitionB pi = parse_partition_b(lbl);
      if (map_name == "lr") {
        auto [l, r] = lr_encoding_B(pi);
        out.push_back(format(b_decode(PairEncoding{l, r, n})));
      } else {
        out.push_back(format(kreweras_h(pi)));
      }
    }
    images_by_label(out);
  } else if (map_name == "s") {
    src = build_poset("QA", n);
    dst = build_poset("PA", n);
    std::vector<std::string> out;
    for (const auto& lbl : src.labels) out.push_back(format(s_map(parse_permutation(lbl))));
    images_by_label(out);
  } else if (map_name == "pbdual" || map_name == "qbdual") {
    src = build_poset(map_name == "pbdual" ? "PB" : "QB", n);
    dst = src;
    std::vector<std::string> out;
    for (const auto& lbl : src.labels) {
      SignedPermutation b = parse_signed(lbl);
      out.push_back(format(map_name == "pbdual" ? pb_dual(b) : qb_dual(b)));
    }
    images_by_label(out);
  } else if (map_name == "alphapair") {
    // pair the elements with descent set S, in index order, against those
    // with descent set alpha(S)
    src = build_poset("PA", n);
    dst = src;
    std::map<IndexSet, std::vector<int>> classes;
    std::vector<IndexSet> des(static_cast<size_t>(src.size()));
    for (int i = 0; i < src.size(); ++i) {
      des[static_cast<size_t>(i)] = descent_set_A(parse_permutation(src.labels[static_cast<size_t>(i)]));
      classes[des[static_cast<size_t>(i)]].push_back(i);
    }
    img.assign(static_cast<size_t>(src.size()), -1);
    for (auto& [s, members] : classes) {
      auto it = classes.find(reverse_complement_alpha(s, n));
      if (it == classes.end() || it->second.size() != members.size()) {
        OrderRevReport rep;
        rep.pass = false;
        rep.violation = "descent classes " + format_set(s) + " and its reverse complement differ in size";
        return rep;
      }
      for (size_t i = 0; i < members.size(); ++i)
        img[static_cast<size_t>(members[i])] = it->second[i];
    }
  } else {
    fail(errc::unknown_map, "check_order_reversing: unknown map '" + map_name + "'");
  }

  std::vector<char> seen(static_cast<size_t>(dst.size()), 0);
  for (int t : img) {
    if (seen[static_cast<size_t>(t)]) {
      OrderRevReport rep;
      rep.pass = false;
      rep.violation = "map is not injective";
      return rep;
    }
    seen[static_cast<size_t>(t)] = 1;
  }
  return order_reversal_scan(src, dst, img);
}

// ---------------------------------------------------------------------------
// embeddings

namespace {

struct SmallBitset {
  std::vector<std::uint64_t> w;
  explicit SmallBitset(int n) : w(static_cast<size_t>((n + 63) / 64), 0) {}
  void set(int i) { w[static_cast<size_t>(i) >> 6] |= 1ull << (i & 63); }
  void reset(int i) { w[static_cast<size_t>(i) >> 6] &= ~(1ull << (i & 63)); }
  bool test(int i) const { return (w[static_cast<size_t>(i) >> 6] >> (i & 63)) & 1u; }
  int count() const {
    int c = 0;
    for (auto x : w) c += __builtin_popcountll(x);
    return c;
  }
  void and_words(const std::uint64_t* other) {
    for (size_t i = 0; i < w.size(); ++i) w[i] &= other[i];
  }
  void andnot_words(const std::uint64_t* other) {
    for (size_t i = 0; i < w.size(); ++i) w[i] &= ~other[i];
  }
};

}  // namespace

EmbedResult find_embedding(const FinitePoset& s, const FinitePoset& t, const EmbedOptions& opts) {
  EmbedResult res;
  if (s.size() > t.size()) {
    res.exhausted = true;  // no injection exists
    return res;
  }
  bool reversing = opts.rank_mode == EmbedOptions::RankMode::complement;
  int ns = s.size(), nt = t.size();
  BitMatrix sless = s.less, tless = t.less;
  BitMatrix sdown = sless.transposed(), tdown = tless.transposed();
  int tmax = t.max_rank();

  std::vector<SmallBitset> cand(static_cast<size_t>(ns), SmallBitset(nt));
  for (int x = 0; x < ns; ++x) {
    int xup = sless.row_count(x), xdown = sdown.row_count(x);
    for (int y = 0; y < nt; ++y) {
      if (opts.rank_mode == EmbedOptions::RankMode::same &&
          t.rank[static_cast<size_t>(y)] != s.rank[static_cast<size_t>(x)])
        continue;
      if (reversing && t.rank[static_cast<size_t>(y)] != tmax - s.rank[static_cast<size_t>(x)])
        continue;
      int yup = tless.row_count(y), ydown = tdown.row_count(y);
      if (!reversing && (yup < xup || ydown < xdown)) continue;
      if (reversing && (yup < xdown || ydown < xup)) continue;
      cand[static_cast<size_t>(x)].set(y);
    }
  }

  std::vector<int> assigned(static_cast<size_t>(ns), -1);
  std::vector<char> done(static_cast<size_t>(ns), 0);

  auto bt = [&](auto&& self, int depth) -> bool {
    ++res.nodes;
    if (depth == ns) return true;
    // most constrained variable
    int x = -1, best = INT32_MAX;
    for (int i = 0; i < ns; ++i) {
      if (done[static_cast<size_t>(i)]) continue;
      int c = cand[static_cast<size_t>(i)].count();
      if (c < best) {
        best = c;
        x = i;
      }
    }
    if (best == 0) return false;
    done[static_cast<size_t>(x)] = 1;
    for (int y = 0; y < nt; ++y) {
      if (!cand[static_cast<size_t>(x)].test(y)) continue;
      auto saved = cand;
      assigned[static_cast<size_t>(x)] = y;
      bool ok = true;
      for (int z = 0; z < ns && ok; ++z) {
        if (done[static_cast<size_t>(z)]) continue;
        auto& cz = cand[static_cast<size_t>(z)];
        bool z_above = sless.test(x, z), z_below = sless.test(z, x);
        if (z_above != z_below) {
          bool use_up = z_above != reversing;
          cz.and_words(use_up ? tless.row(y) : tdown.row(y));
        } else if (opts.reflecting) {
          cz.andnot_words(tless.row(y));
          cz.andnot_words(tdown.row(y));
          cz.reset(y);
        } else {
          cz.reset(y);
        }
        if (cz.count() == 0) ok = false;
      }
      if (ok && self(self, depth + 1)) return true;
      cand = saved;
      assigned[static_cast<size_t>(x)] = -1;
    }
    done[static_cast<size_t>(x)] = 0;
    return false;
  };

  res.found = bt(bt, 0);
  res.exhausted = true;
  if (res.found) res.map = assigned;
  return res;
}

// ---------------------------------------------------------------------------
// exports

std::string to_json(const FinitePoset& p) {
  nlohmann::ordered_json doc;
  doc["family"] = p.family;
  doc["n"] = p.n;
  doc["labels"] = p.labels;
  auto covers = nlohmann::ordered_json::array();
  for (auto [lo, hi] : p.covers) covers.push_back({lo, hi});
  doc["covers"] = covers;
  return doc.dump();
}

std::string to_dot(const FinitePoset& p) {
  std::ostringstream out;
  out << "digraph \"" << p.family << "_" << p.n << "\" {\n";
  out << "  rankdir=BT;\n  node [shape=box];\n";
  for (int i = 0; i < p.size(); ++i)
    out << "  v" << i << " [label=\"" << p.labels[static_cast<size_t>(i)] << "\"];\n";
  for (int r = 0; r <= p.max_rank(); ++r) {
    out << "  { rank=same;";
    for (int i = 0; i < p.size(); ++i)
      if (p.rank[static_cast<size_t>(i)] == r) out << " v" << i << ";";
    out << " }\n";
  }
  for (auto [lo, hi] : p.covers) out << "  v" << lo << " -> v" << hi << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace ncposet
