#pragma once

#include <string>

#include "ncposet/poset.hpp"

namespace ncposet {

struct VerificationReport {
  std::string check;
  std::string family;
  int n = 0;
  bool pass = false;
  std::string details;
  std::int64_t elapsed_ms = 0;
};

std::string report_json(const VerificationReport& rep);

// Each check compares a construction against its closed form or oracle and
// reports the first discrepancy in `details`.
VerificationReport verify_cardinality(const std::string& family, int n);
VerificationReport verify_ranks(const std::string& family, int n);
VerificationReport verify_selfdual(const std::string& family, int n);
VerificationReport verify_sperner(const std::string& family, int n);
VerificationReport verify_orderrev(const std::string& map_name, int n);
VerificationReport verify_iso(const std::string& fam_p, const std::string& fam_q, int n);
VerificationReport verify_embedding(const std::string& fam_s, const std::string& fam_t, int n,
                                    EmbedOptions::RankMode rank_mode, bool reflecting);
VerificationReport verify_chains(int n, int max_m);  // PB closed form vs engine vs oracle
VerificationReport verify_mobius(const std::string& family, int n);

}  // namespace ncposet
