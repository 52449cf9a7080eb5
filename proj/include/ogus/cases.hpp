#pragma once

#include "ogus/fzip.hpp"
#include "ogus/reps.hpp"
#include "ogus/vanishing.hpp"
#include "ogus/weyl.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ogus {

enum class CaseId {
  GLn_wedge_dualsum,  // unitary GL(n), signature (n-1, 1), top wedge of Std + twisted dual
  GSp2n_wedge_dual,   // Siegel, top wedge of Std dual
  SO_odd_std,
  SO_even_std,
  GL4_wedge2,
  Sp2n_std_Cn,  // the designed failure
  GSpin_spin_odd,
  GSpin_spin_even,
};

const std::vector<CaseId>& all_cases();
std::string case_key(CaseId id);  // CLI spelling, e.g. "so-odd"
std::string case_name(CaseId id);  // enum spelling
CaseId parse_case(const std::string& s);
int min_rank(CaseId id);
int max_rank(CaseId id);

struct CaseSpec {
  CaseId id = CaseId::SO_odd_std;
  int rank = 3;  // m for SO/GSpin, n for GL/GSp/Sp; ignored for GL4_wedge2
  long long p = 3;
};

struct StratumReport {
  Perm w;  // EO representative in IW
  Word word;
  int length = 0;
  Perm bruhat;  // representative in IW^J
  Word bruhat_word;
  long long ord = 0;
  std::optional<long long> clp;
  std::optional<bool> ogus_holds;
  std::optional<bool> ineq_holds;
  std::optional<bool> hasse_nonzero;
};

struct CaseData {
  CaseSpec spec;
  WeylGroup weyl;
  CocharacterDatum datum;
  Weight lambda;        // minus the Hasse character, root-system coordinates
  Weight hasse_weight;  // full Hasse character including central coordinates
  bool has_zip = true;  // false for spin, which is not of CY type
};

CaseData case_data(const CaseSpec& spec);
// the CY F-zip whose clp is reported for the EO stratum u
StandardFZip case_zip(const CaseData& cd, const Perm& u);
std::map<Perm, long long> case_ord_table(const CaseData& cd, const FormulaOptions& opt = {});

struct CaseResult {
  CaseSpec spec;
  std::string group;  // root system name
  std::vector<StratumReport> strata;
};

CaseResult run_case(const CaseSpec& spec, const FormulaOptions& opt = {});

struct CheckOutcome {
  bool ok = true;
  std::string detail;  // first counterexample, or a summary
};

// identification of simple roots D3 -> A3; the default is the Dynkin isomorphism
std::vector<int> a3_d3_letter_map(bool mismatched = false);
CheckOutcome functoriality_check_A3_D3(long long p, bool mismatched = false);
// distinct-letter and adjacent aba words of GL(n) against the cell oracle, for every
// non-increasing weight with entries in {0, .., max_entry}
CheckOutcome gl_formula_vs_oracle(int n, int max_entry, const FormulaOptions& opt = {},
                                  unsigned long long seed = 1);
CheckOutcome siegel_cross_check(int n, long long p, unsigned long long seed = 1);

}  // namespace ogus
