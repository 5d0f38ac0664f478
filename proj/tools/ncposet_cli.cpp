#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "ncposet/maps.hpp"
#include "ncposet/objects.hpp"
#include "ncposet/oracle.hpp"
#include "ncposet/parallel.hpp"
#include "ncposet/poset.hpp"
#include "ncposet/stats.hpp"
#include "ncposet/verify.hpp"

namespace {

using namespace ncposet;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::vector<std::string> gen_labels(const std::string& family, int n) {
  std::vector<std::string> out;
  if (family == "perm132")
    for (const auto& p : gen_avoiding_132(n)) out.push_back(format(p));
  else if (family == "perm321")
    for (const auto& p : gen_avoiding_321(n)) out.push_back(format(p));
  else if (family == "signed")
    for (const auto& b : gen_B_restricted(n)) out.push_back(format(b));
  else if (family == "ncA")
    for (const auto& pi : gen_nc_A(n)) out.push_back(format(pi));
  else if (family == "ncB")
    for (const auto& pi : gen_nc_B(n)) out.push_back(format(pi));
  else
    fail(errc::unknown_family, "gen: unknown family '" + family + "'");
  return out;
}

int run_gen(const std::string& family, int n, bool count_only, const std::string& fmt) {
  auto labels = gen_labels(family, n);
  if (count_only) {
    std::cout << labels.size() << "\n";
    return kExitPass;
  }
  if (fmt == "json") {
    std::cout << "[";
    for (size_t i = 0; i < labels.size(); ++i) {
      if (i) std::cout << ",";
      std::cout << "\"" << labels[i] << "\"";
    }
    std::cout << "]\n";
  } else {
    for (const auto& l : labels) std::cout << l << "\n";
  }
  return kExitPass;
}

int run_stat(const std::string& stat, int n) {
  std::string line;
  while (std::getline(std::cin, line)) {
    if (line.empty()) continue;
    std::string value;
    if (stat == "desA")
      value = format_set(descent_set_A(parse_permutation(line)));
    else if (stat == "excA")
      value = format_set(excedence_set_A(parse_permutation(line)));
    else if (stat == "lrmin")
      value = format_set(left_to_right_minima(parse_permutation(line)));
    else if (stat == "desB")
      value = format_set(descent_set_B(parse_signed(line)));
    else if (stat == "excB1")
      value = format_set(excedence_set_B1(parse_signed(line)));
    else if (stat == "excB2")
      value = format_set(excedence_set_B2(parse_signed(line)));
    else if (stat == "bmin")
      value = format_set(block_minima(parse_partition_a(line)));
    else if (stat == "lrB") {
      auto [l, r] = lr_encoding_B(parse_partition_b(line));
      value = format_set_pair(l, r);
    } else if (stat == "alpha") {
      if (n <= 0) fail(errc::bad_input, "alpha needs --n");
      value = format_set(reverse_complement_alpha(parse_set(line), n));
    } else {
      fail(errc::bad_input, "unknown statistic '" + stat + "'");
    }
    std::cout << line << "\t" << stat << "\t" << value << "\n";
  }
  return kExitPass;
}

int run_map(const std::string& bijection, int n) {
  std::string line;
  while (std::getline(std::cin, line)) {
    if (line.empty()) continue;
    std::string out;
    if (bijection == "f")
      out = format(f_map(parse_partition_a(line)));
    else if (bijection == "finv")
      out = format(f_inverse(parse_permutation(line)));
    else if (bijection == "theta")
      out = format(theta_map(parse_partition_a(line)));
    else if (bijection == "s")
      out = format(s_map(parse_permutation(line)));
    else if (bijection == "g")
      out = format(kreweras_g(parse_partition_a(line)));
    else if (bijection == "h")
      out = format(kreweras_h(parse_partition_b(line)));
    else if (bijection == "pbdual")
      out = format(pb_dual(parse_signed(line)));
    else if (bijection == "qbdual")
      out = format(qb_dual(parse_signed(line)));
    else if (bijection == "bencode") {
      PairEncoding enc = b_encode(parse_signed(line));
      out = format_set_pair(enc.left, enc.right);
    } else if (bijection == "bdecode") {
      if (n <= 0) fail(errc::bad_input, "bdecode needs --n");
      auto [l, r] = parse_set_pair(line);
      out = format(b_decode(PairEncoding{l, r, n}));
    } else {
      fail(errc::unknown_map, "unknown bijection '" + bijection + "'");
    }
    std::cout << out << "\n";
  }
  return kExitPass;
}

int run_poset(const std::string& family, int n, bool show_mobius, int chains_m, bool antichain,
              int kfam, bool selfdual) {
  FinitePoset p = build_poset(family, n);
  RankProfile prof = rank_profile(p);
  std::cout << "family=" << p.family << " n=" << p.n << " elements=" << p.size()
            << " covers=" << p.covers.size() << "\n";
  std::cout << "ranks=";
  for (size_t i = 0; i < prof.sizes.size(); ++i) std::cout << (i ? "," : "") << prof.sizes[i];
  std::cout << (prof.ranked ? " ranked" : " unranked") << (prof.symmetric ? " symmetric" : "")
            << (prof.unimodal ? " unimodal" : "") << "\n";
  auto bot = p.bottom(), top = p.top();
  if (bot) std::cout << "bottom=" << p.labels[static_cast<size_t>(*bot)] << "\n";
  if (top) std::cout << "top=" << p.labels[static_cast<size_t>(*top)] << "\n";
  if (show_mobius && bot && top)
    std::cout << "mobius(bottom,top)=" << mobius(p, *bot, *top) << "\n";
  if (chains_m >= 0) std::cout << "chains(m=" << chains_m << ")=" << count_chains(p, chains_m) << "\n";
  if (antichain) std::cout << "max_antichain=" << max_antichain(p) << "\n";
  if (kfam >= 1) std::cout << "max_k_family(k=" << kfam << ")=" << max_k_family(p, kfam) << "\n";
  if (selfdual) std::cout << "self_dual=" << (is_self_dual(p).found ? "true" : "false") << "\n";
  return kExitPass;
}

int run_export(const std::string& family, int n, const std::string& fmt, const std::string& path) {
  FinitePoset p = build_poset(family, n);
  std::string body = fmt == "dot" ? to_dot(p) : to_json(p);
  if (fmt == "json") body += "\n";
  if (path.empty()) {
    std::cout << body;
    return kExitPass;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "cannot open " << path << "\n";
    return kExitFail;
  }
  out << body;
  return out.good() ? kExitPass : kExitFail;
}

EmbedOptions::RankMode parse_rank_mode(const std::string& mode) {
  if (mode == "none") return EmbedOptions::RankMode::none;
  if (mode == "same") return EmbedOptions::RankMode::same;
  if (mode == "complement") return EmbedOptions::RankMode::complement;
  fail(errc::bad_input, "unknown rank mode '" + mode + "'");
}

int run_verify(const std::string& check, const std::string& family, int n, int max_m,
               const std::string& map_token, const std::string& expect,
               const std::string& rank_mode, bool reflecting) {
  std::string fam1 = family, fam2;
  if (auto comma = family.find(','); comma != std::string::npos) {
    fam1 = family.substr(0, comma);
    fam2 = family.substr(comma + 1);
  }
  VerificationReport rep;
  if (check == "cardinality")
    rep = verify_cardinality(fam1, n);
  else if (check == "ranks")
    rep = verify_ranks(fam1, n);
  else if (check == "selfdual")
    rep = verify_selfdual(fam1, n);
  else if (check == "sperner")
    rep = verify_sperner(fam1, n);
  else if (check == "orderrev")
    rep = verify_orderrev(map_token, n);
  else if (check == "iso") {
    if (fam2.empty()) fail(errc::bad_input, "iso needs --family P,Q");
    rep = verify_iso(fam1, fam2, n);
  } else if (check == "embedding") {
    if (fam2.empty()) fail(errc::bad_input, "embedding needs --family S,T");
    rep = verify_embedding(fam1, fam2, n, parse_rank_mode(rank_mode), reflecting);
  } else if (check == "chains")
    rep = verify_chains(n, max_m);
  else if (check == "mobius")
    rep = verify_mobius(fam1, n);
  else
    fail(errc::bad_input, "unknown check '" + check + "'");

  std::cout << report_json(rep) << "\n";
  bool expected = expect != "false";
  return rep.pass == expected ? kExitPass : kExitFail;
}

int run_oracle_gen(const std::string& family, int n, bool count_only) {
  std::vector<std::string> labels;
  if (family == "perm132")
    for (const auto& p : oracle::pattern_filter(n, Permutation{{1, 3, 2}})) labels.push_back(format(p));
  else if (family == "perm321")
    for (const auto& p : oracle::pattern_filter(n, Permutation{{3, 2, 1}})) labels.push_back(format(p));
  else if (family == "signed")
    for (const auto& b : oracle::signed_filter(n)) labels.push_back(format(b));
  else if (family == "ncA") {
    for (const auto& pi : oracle::all_partitions_A(n))
      if (is_noncrossing_A(pi)) labels.push_back(format(pi));
  } else if (family == "ncB") {
    for (const auto& pi : oracle::all_partitions_B(n))
      if (oracle::noncrossing_B_by_chords(pi)) labels.push_back(format(pi));
  } else {
    fail(errc::unknown_family, "oracle gen: unknown family '" + family + "'");
  }
  std::sort(labels.begin(), labels.end());
  if (count_only)
    std::cout << labels.size() << "\n";
  else
    for (const auto& l : labels) std::cout << l << "\n";
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"noncrossing partition and restricted permutation posets"};
  app.require_subcommand(1);

  int override_n = 0;
  app.add_option("--max-n-override", override_n, "raise the generation guards (use with care)");
  if (const char* env = std::getenv("NCPOSET_MAX_N")) {
    int v = std::atoi(env);
    if (v > 0) set_global_max_n(v);
  }

  // gen
  auto* gen = app.add_subcommand("gen", "generate a ground-set family");
  std::string gen_family;
  int gen_n = 0;
  bool gen_count = false;
  std::string gen_fmt = "text";
  gen->add_option("--family", gen_family, "perm132|perm321|signed|ncA|ncB")->required();
  gen->add_option("--n", gen_n, "size")->required();
  gen->add_flag("--count", gen_count, "print cardinality only");
  gen->add_option("--format", gen_fmt, "text|json");

  // stat
  auto* stat = app.add_subcommand("stat", "statistics over stdin lines");
  std::string stat_token;
  int stat_n = 0;
  stat->add_option("--stat", stat_token, "desA|desB|excA|excB1|excB2|lrmin|bmin|lrB|alpha")
      ->required();
  stat->add_option("--n", stat_n, "ambient n (alpha)");

  // map
  auto* mapc = app.add_subcommand("map", "bijections over stdin lines");
  std::string map_token;
  int map_n = 0;
  mapc->add_option("--bijection", map_token, "f|finv|theta|s|g|h|pbdual|qbdual|bencode|bdecode")
      ->required();
  mapc->add_option("--n", map_n, "ambient n (bdecode)");

  // poset
  auto* pos = app.add_subcommand("poset", "poset summary and queries");
  std::string pos_family;
  int pos_n = 0, pos_chains = -1, pos_kfam = 0;
  bool pos_mobius = false, pos_anti = false, pos_selfdual = false;
  pos->add_option("--family", pos_family, "PA|QA|PB|QB|NCA|NCB")->required();
  pos->add_option("--n", pos_n, "size")->required();
  pos->add_flag("--mobius", pos_mobius, "print mobius(bottom, top)");
  pos->add_option("--chains", pos_chains, "print the m-chain count");
  pos->add_flag("--antichain", pos_anti, "print the largest antichain size");
  pos->add_option("--kfamily", pos_kfam, "print the largest k-family size");
  pos->add_flag("--selfdual", pos_selfdual, "test self-duality");

  // verify
  auto* ver = app.add_subcommand("verify", "machine checks; exit 1 on failure");
  std::string ver_check, ver_family, ver_map, ver_expect = "true", ver_rank_mode = "same";
  int ver_n = 0, ver_m = 3;
  bool ver_reflecting = false;
  ver->add_option("--check", ver_check,
                  "cardinality|ranks|selfdual|sperner|embedding|iso|chains|mobius|orderrev")
      ->required();
  ver->add_option("--family", ver_family, "family (or pair S,T)");
  ver->add_option("--n", ver_n, "size")->required();
  ver->add_option("--m", ver_m, "max chain length for --check chains");
  ver->add_option("--map", ver_map, "map token for --check orderrev");
  ver->add_option("--expect", ver_expect, "true|false; pass when the result matches");
  ver->add_option("--rank-mode", ver_rank_mode, "none|same|complement (embedding)");
  ver->add_flag("--reflecting", ver_reflecting, "require order-reflecting embedding");

  // export
  auto* exp = app.add_subcommand("export", "write a poset document");
  std::string exp_family, exp_fmt = "json", exp_path;
  int exp_n = 0;
  exp->add_option("--family", exp_family, "PA|QA|PB|QB|NCA|NCB")->required();
  exp->add_option("--n", exp_n, "size")->required();
  exp->add_option("--format", exp_fmt, "dot|json");
  exp->add_option("--path", exp_path, "output file (stdout when absent)");

  // oracle
  auto* ora = app.add_subcommand("oracle", "exhaustive reference computations");
  ora->require_subcommand(1);
  auto* ora_gen = ora->add_subcommand("gen", "filter the full word/partition space");
  std::string ora_family, ora_method = "exhaustive";
  int ora_n = 0;
  bool ora_count = false;
  ora_gen->add_option("--family", ora_family, "perm132|perm321|signed|ncA|ncB")->required();
  ora_gen->add_option("--n", ora_n, "size")->required();
  ora_gen->add_flag("--count", ora_count, "print cardinality only");
  ora_gen->add_option("--method", ora_method, "exhaustive");

  auto* ora_kf = ora->add_subcommand("kfamily", "largest k-family by subset scan");
  std::string ora_kf_family;
  int ora_kf_n = 0, ora_kf_k = 1;
  ora_kf->add_option("--family", ora_kf_family)->required();
  ora_kf->add_option("--n", ora_kf_n)->required();
  ora_kf->add_option("--k", ora_kf_k)->required();
  ora_kf->add_option("--method", ora_method, "exhaustive");

  auto* ora_ch = ora->add_subcommand("chains", "chain count by depth-first enumeration");
  std::string ora_ch_family;
  int ora_ch_n = 0, ora_ch_m = 1;
  ora_ch->add_option("--family", ora_ch_family)->required();
  ora_ch->add_option("--n", ora_ch_n)->required();
  ora_ch->add_option("--m", ora_ch_m)->required();
  ora_ch->add_option("--method", ora_method, "exhaustive");

  auto* ora_mo = ora->add_subcommand("mobius", "bottom-top mobius by zeta inversion");
  std::string ora_mo_family;
  int ora_mo_n = 0;
  ora_mo->add_option("--family", ora_mo_family)->required();
  ora_mo->add_option("--n", ora_mo_n)->required();
  ora_mo->add_option("--method", ora_method, "exhaustive");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (override_n > 0) {
      std::cerr << "warning: raising generation guards to n=" << override_n << "\n";
      set_global_max_n(override_n);
    }
    if (ora_method != "exhaustive") fail(errc::bad_input, "oracle: unknown method");
    if (gen->parsed()) return run_gen(gen_family, gen_n, gen_count, gen_fmt);
    if (stat->parsed()) return run_stat(stat_token, stat_n);
    if (mapc->parsed()) return run_map(map_token, map_n);
    if (pos->parsed())
      return run_poset(pos_family, pos_n, pos_mobius, pos_chains, pos_anti, pos_kfam, pos_selfdual);
    if (ver->parsed())
      return run_verify(ver_check, ver_family, ver_n, ver_m, ver_map, ver_expect, ver_rank_mode,
                        ver_reflecting);
    if (exp->parsed()) return run_export(exp_family, exp_n, exp_fmt, exp_path);
    if (ora->parsed()) {
      if (ora_gen->parsed()) return run_oracle_gen(ora_family, ora_n, ora_count);
      if (ora_kf->parsed()) {
        FinitePoset p = build_poset(ora_kf_family, ora_kf_n);
        std::cout << oracle::k_family(p, ora_kf_k) << "\n";
        return kExitPass;
      }
      if (ora_ch->parsed()) {
        FinitePoset p = build_poset(ora_ch_family, ora_ch_n);
        std::cout << oracle::chain_count(p, ora_ch_m) << "\n";
        return kExitPass;
      }
      if (ora_mo->parsed()) {
        FinitePoset p = build_poset(ora_mo_family, ora_mo_n);
        auto matrix = oracle::mobius_matrix(p);
        auto bot = p.bottom(), top = p.top();
        if (!bot || !top) fail(errc::no_bounds, "oracle mobius: poset lacks unique bounds");
        std::cout << matrix[static_cast<size_t>(*bot)][static_cast<size_t>(*top)] << "\n";
        return kExitPass;
      }
    }
  } catch (const ncposet::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
