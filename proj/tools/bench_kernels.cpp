// Times the OpenMP kernels against their serial references on the poset
// construction hot spots: pairwise order matrix, transitive reduction, and
// the exhaustive order-reversal scan.

#include <chrono>
#include <cstdio>
#include <numeric>
#include <string>
#include <vector>

#include "ncposet/kernels.hpp"
#include "ncposet/objects.hpp"
#include "ncposet/parallel.hpp"
#include "ncposet/poset.hpp"
#include "ncposet/stats.hpp"

using namespace ncposet;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

template <typename F>
double best_of(int iters, F f) {
  double best = 1e100;
  for (int i = 0; i < iters; ++i) {
    auto t0 = Clock::now();
    f();
    best = std::min(best, ms_since(t0));
  }
  return best;
}

void bench_family(const std::string& family, int n, int iters) {
  FinitePoset p = build_poset(family, n);
  int size = p.size();

  std::vector<std::uint32_t> masks;
  masks.reserve(static_cast<size_t>(size));
  if (family == "PA")
    for (const auto& lbl : p.labels) {
      std::uint32_t m = 0;
      for (int e : descent_set_A(parse_permutation(lbl))) m |= 1u << e;
      masks.push_back(m);
    }
  else if (family == "PB")
    for (const auto& lbl : p.labels) {
      std::uint32_t m = 0;
      for (int e : descent_set_B(parse_signed(lbl))) m |= 1u << e;
      masks.push_back(m);
    }

  kernels::LessFn cmp;
  if (!masks.empty()) {
    cmp = [&masks](int i, int j) {
      auto a = masks[static_cast<size_t>(i)], b = masks[static_cast<size_t>(j)];
      return a != b && (a & ~b) == 0;
    };
  } else {
    const BitMatrix& less = p.less;  // replay the built order
    cmp = [&less](int i, int j) { return less.test(i, j); };
  }

  double rel_ref = best_of(iters, [&] { kernels::reference::relation_matrix(size, cmp); });
  double rel_s = best_of(iters, [&] { kernels::relation_matrix(size, cmp, kernels::exec::serial); });
  double rel_p = best_of(iters, [&] { kernels::relation_matrix(size, cmp, kernels::exec::parallel); });

  double red_ref = best_of(iters, [&] { kernels::reference::transitive_reduction(p.less); });
  double red_s =
      best_of(iters, [&] { kernels::transitive_reduction(p.less, kernels::exec::serial); });
  double red_p =
      best_of(iters, [&] { kernels::transitive_reduction(p.less, kernels::exec::parallel); });

  std::vector<int> identity(static_cast<size_t>(size));
  std::iota(identity.begin(), identity.end(), 0);
  BitMatrix dualm = p.less.transposed();
  double scan_ref = best_of(
      iters, [&] { kernels::reference::first_orderrev_violation(p.less, dualm, identity); });
  double scan_s = best_of(iters, [&] {
    kernels::first_orderrev_violation(p.less, dualm, identity, kernels::exec::serial);
  });
  double scan_p = best_of(iters, [&] {
    kernels::first_orderrev_violation(p.less, dualm, identity, kernels::exec::parallel);
  });

  std::printf("%-4s n=%d  %6d elements\n", family.c_str(), n, size);
  std::printf("  %-20s reference %9.2f ms   serial %9.2f ms   parallel %9.2f ms   x%.2f\n",
              "relation matrix", rel_ref, rel_s, rel_p, rel_s / rel_p);
  std::printf("  %-20s reference %9.2f ms   serial %9.2f ms   parallel %9.2f ms   x%.2f\n",
              "transitive reduction", red_ref, red_s, red_p, red_s / red_p);
  std::printf("  %-20s reference %9.2f ms   serial %9.2f ms   parallel %9.2f ms   x%.2f\n",
              "order-reversal scan", scan_ref, scan_s, scan_p, scan_s / scan_p);
}

}  // namespace

int main(int argc, char** argv) {
  int iters = 3;
  bool quick = false;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--quick") quick = true;
    if (arg == "--iters" && i + 1 < argc) iters = std::atoi(argv[++i]);
  }
  std::printf("threads: %d (OpenMP %s)\n", max_threads(), openmp_enabled() ? "on" : "off");
  if (quick) {
    bench_family("PA", 6, iters);
    bench_family("NCB", 4, iters);
  } else {
    bench_family("PA", 8, iters);
    bench_family("PB", 6, iters);
    bench_family("NCB", 6, iters);
  }
  return 0;
}
