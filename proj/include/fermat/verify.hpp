#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fermat {

struct VerifyOptions {
  // Genus cap for the sweeps; 0 picks each checker's own default (2000 for
  // the formula-vs-counter sweeps, 50 for the exhaustive oracle sweep).
  std::uint64_t max_genus = 0;
  std::uint64_t max_p = 13;
  unsigned jobs = 1;  // 0 = hardware default
};

struct VerifyResult {
  std::string suite;
  unsigned long long checked = 0;
  unsigned long long failed = 0;
  unsigned long long skipped = 0;  // instances beyond closed-case/enumeration reach
  std::vector<std::string> mismatches;  // first few failure descriptions
  bool ok() const { return failed == 0; }
};

// Each checker sweeps one verification theme exhaustively over its grid.
VerifyResult check_bassa_beelen(const VerifyOptions& opt);      // counter vs (p(p+1)/2)^h - 3(p^h-1)
VerifyResult check_family_formulas(const VerifyOptions& opt);   // catalog closed forms vs counter
VerifyResult check_zero_families(const VerifyOptions& opt);     // zero-p-rank families vs counter
VerifyResult check_twisted_bridge(const VerifyOptions& opt);    // formula vs gamma(C_2n) - gamma(C_n)
VerifyResult check_block_formula(const VerifyOptions& opt);     // (m0(p+1), n0(p+1)) closed form
VerifyResult check_cofactor_identity(const VerifyOptions& opt); // odd-cofactor curve pair identity
VerifyResult check_oracle_agreement(const VerifyOptions& opt);  // Cartier rank vs counter + diagonal
VerifyResult check_counted_sets(const VerifyOptions& opt);     // closed_count vs enumerate_count
VerifyResult check_congruence_box(const VerifyOptions& opt);    // box count vs brute force
VerifyResult check_kani_rosen(const VerifyOptions& opt);        // tower identities

// suite in {formulas, oracle, counted-sets, kani-rosen, congruence-box, all}
std::vector<VerifyResult> run_suite(const std::string& suite, const VerifyOptions& opt);
std::vector<std::string> all_suites();

}  // namespace fermat
