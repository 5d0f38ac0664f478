#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "ncposet/kernels.hpp"
#include "ncposet/types.hpp"

namespace ncposet {

// Finite poset with a designated rank statistic. Families:
//   PA  132-avoiders under descent-set containment
//   QA  321-avoiders under excedence-set containment
//   PB  restricted signed permutations under type-B descent containment
//   QB  restricted signed permutations under containment of S(b) + barred fixed points
//   NCA / NCB  noncrossing partitions under refinement
struct FinitePoset {
  std::string family;
  int n = 0;
  std::vector<std::string> labels;  // canonical text forms, generator order
  BitMatrix less;                   // strict order, irreflexive + transitive
  std::vector<int> rank;
  std::vector<std::pair<int, int>> covers;  // (lo, hi) sorted by (rank[lo], lo, hi)

  int size() const { return static_cast<int>(labels.size()); }
  bool is_less(int i, int j) const { return less.test(i, j); }
  std::optional<int> bottom() const;
  std::optional<int> top() const;
  int max_rank() const;
  int index_of(const std::string& label) const;  // -1 when absent

  std::map<std::string, int> label_index;  // filled by builders
};

struct RankProfile {
  std::vector<std::int64_t> sizes;  // by rank, starting at rank 0
  bool ranked = false;
  bool unimodal = false;
  bool symmetric = false;
};

FinitePoset build_poset(const std::string& family, int n);

// Fixture constructor: strict order = transitive closure of the cover list.
FinitePoset from_covers(std::vector<std::string> labels, std::vector<int> ranks,
                        const std::vector<std::pair<int, int>>& covers,
                        std::string family = "fixture");

FinitePoset dual_of(const FinitePoset& p);

RankProfile rank_profile(const FinitePoset& p);

std::int64_t mobius(const FinitePoset& p, int x, int y);

// Chains bottom < x_1 < ... < x_m < top; m = 0 counts the empty chain once.
std::int64_t count_chains(const FinitePoset& p, int m);

// Largest antichain via minimum chain cover (bipartite matching).
int max_antichain(const FinitePoset& p);

// Largest union of k antichains via min-cost chain-cover flow.
int max_k_family(const FinitePoset& p, int k);

bool is_strongly_sperner(const FinitePoset& p);

struct Witness {
  bool found = false;
  std::vector<int> map;  // element -> element
};

Witness is_self_dual(const FinitePoset& p);
Witness is_isomorphic(const FinitePoset& p, const FinitePoset& q);

struct OrderRevReport {
  bool pass = false;
  std::int64_t pairs = 0;
  std::string violation;
};

// Exhaustively verifies x < y implies image(y) < image(x) for one of the named
// maps: f, lr, theta-free... tokens: f, lr, g, h, s, pbdual, qbdual, alphapair.
OrderRevReport check_order_reversing(const std::string& map_name, int n);

// Same scan for an explicit image vector (used by fixtures and tests).
OrderRevReport order_reversal_scan(const FinitePoset& src, const FinitePoset& dst,
                                   const std::vector<int>& img);

struct EmbedOptions {
  enum class RankMode { none, same, complement };
  RankMode rank_mode = RankMode::none;
  bool reflecting = false;  // also require incomparability to be preserved
};

struct EmbedResult {
  bool found = false;
  std::vector<int> map;
  bool exhausted = false;  // search space fully explored
  std::int64_t nodes = 0;
};

// Injective order-preserving map S -> T (order-reversing when rank_mode is
// complement); backtracking with forward checking, exhaustive within limits.
EmbedResult find_embedding(const FinitePoset& s, const FinitePoset& t, const EmbedOptions& opts);

std::string to_json(const FinitePoset& p);
std::string to_dot(const FinitePoset& p);

}  // namespace ncposet
