#pragma once

#include "ncposet/poset.hpp"

namespace ncposet::fixtures {

// Graded on ranks (1,3,3) but with the antichain {a,b,e,f} of size 4:
// x below a,b,c; d above a,b,c; e,f above c only. Not Sperner at k=1.
inline FinitePoset non_sperner() {
  return from_covers({"x", "a", "b", "c", "d", "e", "f"}, {0, 1, 1, 1, 2, 2, 2},
                     {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}, {3, 5}, {3, 6}},
                     "non-sperner");
}

// one bottom under two maximal elements
inline FinitePoset vee() {
  return from_covers({"a", "b", "c"}, {0, 1, 1}, {{0, 1}, {0, 2}}, "vee");
}

inline FinitePoset chain(int len) {
  std::vector<std::string> labels;
  std::vector<int> ranks;
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i < len; ++i) {
    labels.push_back("c" + std::to_string(i));
    ranks.push_back(i);
    if (i) covers.emplace_back(i - 1, i);
  }
  return from_covers(std::move(labels), std::move(ranks), covers, "chain");
}

inline FinitePoset boolean_square() {
  return from_covers({"00", "01", "10", "11"}, {0, 1, 1, 2}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}},
                     "square");
}

inline FinitePoset antichain(int size) {
  std::vector<std::string> labels;
  std::vector<int> ranks(static_cast<size_t>(size), 0);
  for (int i = 0; i < size; ++i) labels.push_back("a" + std::to_string(i));
  return from_covers(std::move(labels), std::move(ranks), {}, "antichain");
}

}  // namespace ncposet::fixtures
