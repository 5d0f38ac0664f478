#include "ncposet/types.hpp"

#include <algorithm>
#include <sstream>

namespace ncposet {

void fail(errc code, const std::string& msg) { throw error(code, msg); }

namespace {

std::vector<int> parse_ints(const std::string& text, char sep) {
  std::vector<int> out;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, sep)) {
    if (token.empty()) continue;
    size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(token, &used);
    } catch (const std::exception&) {
      fail(errc::bad_input, "cannot parse integer from '" + token + "'");
    }
    while (used < token.size() && std::isspace(static_cast<unsigned char>(token[used]))) ++used;
    if (used != token.size()) fail(errc::bad_input, "trailing junk in '" + token + "'");
    out.push_back(v);
  }
  return out;
}

void check_is_permutation(const std::vector<int>& magnitudes, const std::string& what) {
  int n = static_cast<int>(magnitudes.size());
  if (n < 1) fail(errc::bad_input, what + ": empty word");
  std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
  for (int v : magnitudes) {
    if (v < 1 || v > n) fail(errc::bad_input, what + ": value out of range");
    if (seen[static_cast<size_t>(v)]) fail(errc::bad_input, what + ": repeated value");
    seen[static_cast<size_t>(v)] = true;
  }
}

}  // namespace

void validate(const Permutation& p) { check_is_permutation(p.entries, "permutation"); }

void validate(const SignedPermutation& b) {
  std::vector<int> mags;
  mags.reserve(b.word.size());
  for (int s : b.word) {
    if (s == 0) fail(errc::bad_input, "signed permutation: zero symbol");
    mags.push_back(s > 0 ? s : -s);
  }
  check_is_permutation(mags, "signed permutation");
}

void validate(const PartitionA& pi) {
  if (pi.n < 1) fail(errc::invalid_partition, "partition: n must be positive");
  std::vector<bool> seen(static_cast<size_t>(pi.n) + 1, false);
  size_t total = 0;
  for (const auto& blk : pi.blocks) {
    if (blk.empty()) fail(errc::invalid_partition, "partition: empty block");
    for (int e : blk) {
      if (e < 1 || e > pi.n) fail(errc::invalid_partition, "partition: element out of range");
      if (seen[static_cast<size_t>(e)]) fail(errc::invalid_partition, "partition: repeated element");
      seen[static_cast<size_t>(e)] = true;
      ++total;
    }
  }
  if (total != static_cast<size_t>(pi.n)) fail(errc::invalid_partition, "partition: does not cover [n]");
}

void validate(const PartitionB& pi) {
  if (pi.n < 1) fail(errc::invalid_partition, "type-B partition: n must be positive");
  std::vector<bool> seen(static_cast<size_t>(2 * pi.n), false);
  size_t total = 0;
  for (const auto& blk : pi.blocks) {
    if (blk.empty()) fail(errc::invalid_partition, "type-B partition: empty block");
    for (int e : blk) {
      if (e == 0 || e > pi.n || e < -pi.n)
        fail(errc::invalid_partition, "type-B partition: element out of range");
      size_t pos = static_cast<size_t>(circle_pos(e, pi.n));
      if (seen[pos]) fail(errc::invalid_partition, "type-B partition: repeated element");
      seen[pos] = true;
      ++total;
    }
  }
  if (total != static_cast<size_t>(2 * pi.n))
    fail(errc::invalid_partition, "type-B partition: does not cover the signed ground set");
}

void validate_type_b(const PartitionB& pi) {
  validate(pi);
  // block id per circle position
  std::vector<int> blk(static_cast<size_t>(2 * pi.n), -1);
  for (size_t i = 0; i < pi.blocks.size(); ++i)
    for (int e : pi.blocks[i]) blk[static_cast<size_t>(circle_pos(e, pi.n))] = static_cast<int>(i);
  int invariant = 0;
  for (const auto& block : pi.blocks) {
    int image = blk[static_cast<size_t>(circle_pos(-block.front(), pi.n))];
    bool self = true;
    for (int e : block) {
      if (blk[static_cast<size_t>(circle_pos(-e, pi.n))] != image)
        fail(errc::invalid_partition, "type-B partition: bar image of a block is not a block");
      if (blk[static_cast<size_t>(circle_pos(-e, pi.n))] != blk[static_cast<size_t>(circle_pos(e, pi.n))])
        self = false;
    }
    if (self) ++invariant;
  }
  if (invariant > 1) fail(errc::invalid_partition, "type-B partition: more than one invariant block");
}

PartitionA make_partition_a(int n, std::vector<std::vector<int>> blocks) {
  for (auto& blk : blocks) std::sort(blk.begin(), blk.end());
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  PartitionA pi{n, std::move(blocks)};
  validate(pi);
  return pi;
}

PartitionB make_partition_b(int n, std::vector<std::vector<int>> blocks) {
  for (auto& blk : blocks)
    std::sort(blk.begin(), blk.end(),
              [n](int a, int b) { return circle_pos(a, n) < circle_pos(b, n); });
  std::sort(blocks.begin(), blocks.end(), [n](const auto& a, const auto& b) {
    return circle_pos(a.front(), n) < circle_pos(b.front(), n);
  });
  PartitionB pi{n, std::move(blocks)};
  validate(pi);
  return pi;
}

bool has_zero_block(const PartitionB& pi) {
  for (const auto& blk : pi.blocks) {
    bool self = true;
    for (int e : blk)
      if (std::find(blk.begin(), blk.end(), -e) == blk.end()) {
        self = false;
        break;
      }
    if (self) return true;
  }
  return false;
}

int nonzero_block_pairs(const PartitionB& pi) {
  int nz = static_cast<int>(pi.blocks.size()) - (has_zero_block(pi) ? 1 : 0);
  return nz / 2;
}

namespace {

std::string join_ints(const std::vector<int>& v, const char* sep) {
  std::ostringstream out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out << sep;
    out << v[i];
  }
  return out.str();
}

std::string format_blocks(const std::vector<std::vector<int>>& blocks) {
  std::ostringstream out;
  for (size_t i = 0; i < blocks.size(); ++i) {
    if (i) out << '/';
    out << join_ints(blocks[i], ",");
  }
  return out.str();
}

}  // namespace

std::string format(const Permutation& p) { return join_ints(p.entries, " "); }
std::string format(const SignedPermutation& b) { return join_ints(b.word, " "); }
std::string format(const PartitionA& pi) { return format_blocks(pi.blocks); }
std::string format(const PartitionB& pi) { return format_blocks(pi.blocks); }

std::string format_set(const IndexSet& s) { return "{" + join_ints(s, ",") + "}"; }

std::string format_set_pair(const IndexSet& l, const IndexSet& r) {
  return "(" + format_set(l) + "," + format_set(r) + ")";
}

Permutation parse_permutation(const std::string& text) {
  Permutation p{parse_ints(text, ' ')};
  validate(p);
  return p;
}

SignedPermutation parse_signed(const std::string& text) {
  SignedPermutation b{parse_ints(text, ' ')};
  validate(b);
  return b;
}

namespace {

std::vector<std::vector<int>> parse_blocks(const std::string& text) {
  std::vector<std::vector<int>> blocks;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, '/')) blocks.push_back(parse_ints(token, ','));
  return blocks;
}

}  // namespace

PartitionA parse_partition_a(const std::string& text) {
  auto blocks = parse_blocks(text);
  int n = 0;
  for (const auto& blk : blocks)
    for (int e : blk) n = std::max(n, e);
  return make_partition_a(n, std::move(blocks));
}

PartitionB parse_partition_b(const std::string& text) {
  auto blocks = parse_blocks(text);
  int n = 0;
  for (const auto& blk : blocks)
    for (int e : blk) n = std::max(n, std::abs(e));
  return make_partition_b(n, std::move(blocks));
}

IndexSet parse_set(const std::string& text) {
  std::string body = text;
  auto l = body.find('{');
  auto r = body.rfind('}');
  if (l != std::string::npos || r != std::string::npos) {
    if (l == std::string::npos || r == std::string::npos || l > r)
      fail(errc::bad_input, "unbalanced braces in set '" + text + "'");
    body = body.substr(l + 1, r - l - 1);
  }
  IndexSet s = parse_ints(body, ',');
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end())
    fail(errc::bad_input, "repeated element in set '" + text + "'");
  return s;
}

std::pair<IndexSet, IndexSet> parse_set_pair(const std::string& text) {
  // "({2,5,6},{1,4,6})"
  auto open1 = text.find('{');
  auto close1 = text.find('}', open1 == std::string::npos ? 0 : open1);
  auto open2 = text.find('{', close1 == std::string::npos ? 0 : close1);
  auto close2 = text.find('}', open2 == std::string::npos ? 0 : open2);
  if (open1 == std::string::npos || close1 == std::string::npos || open2 == std::string::npos ||
      close2 == std::string::npos)
    fail(errc::bad_input, "cannot parse set pair '" + text + "'");
  return {parse_set(text.substr(open1, close1 - open1 + 1)),
          parse_set(text.substr(open2, close2 - open2 + 1))};
}

}  // namespace ncposet
