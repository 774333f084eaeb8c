#pragma once
#include <string>
#include <vector>

#include "ht/rootsys.hpp"

namespace ht {

struct RhoDecomposition {
  long long n = 0;
  long long odd_part = 0;
  int alpha = 0;  // n = odd_part * 2^(4*alpha + beta)
  int beta = 0;   // beta in 0..3
  long long rho = 0;
};

RhoDecomposition rho_decompose(long long n);
long long rho(long long n);

struct ScreenVerdict {
  GradingSpec spec;
  GradingDims dims;
  bool passes_rhe = false;   // d2 <= rho(d1) - 1
  bool passes_div4 = false;  // 4 | d1
  bool candidate = false;    // passes_rhe and (d2 <= 1 or passes_div4)
};

ScreenVerdict screen_dims(const GradingSpec& spec, GradingDims dims);
ScreenVerdict screen_grading(const GradingSpec& spec);  // dims via closed form / roots

// sl(n+1) divisibility exclusions for sigma {i,j}
bool an_divisibility_excluded(int n, int i, int j);

// One family of candidate gradings of sl(n+1) with a given center dimension:
// i divides d2 and j = n + 1 - d2/i, so d1 = c (n + 1 - c) with c = i + d2/i.
struct AnFamily {
  int d2 = 0;
  int i = 0;
  int j_offset = 0;   // j = n - (j_offset - 1), i.e. j = n + 1 - d2/i
  int c = 0;          // i + d2/i; d1 = c * (n + 1 - c)
  int min_module = 0; // least minimal-admissible-module dimension for this d2
  int modulus = 1;    // admissible n satisfy n == residue (mod modulus)
  int residue = 0;
  int n_min = 0;      // smallest n with d1 > 0
  std::vector<int> instances;  // admissible n up to the search bound
};

struct AnInstance {
  int n, i, j, d1;
};

std::vector<AnFamily> search_an(int d2, int n_max);
std::vector<AnInstance> search_an_instances(int d2, int n_max);

struct BnTraceRow {
  int n, i, d1, d2;
  long long rho_d1;
  bool candidate;
};

// Exhaustive screen of so(2n+1) gradings; candidates with d2 > 1 never occur.
std::vector<BnTraceRow> verify_bn_empty(int n_max);

struct CnCell {
  bool shown = false;
  int n = 0;
  bool bold = false;  // RHE holds
};

struct CnTable {
  std::vector<int> columns;   // i values
  std::vector<int> d2_row;    // i(i+1)/2 per column
  std::vector<int> d1_rows;
  std::vector<std::vector<CnCell>> cells;  // [row][col]
};

// sp(2n) dimension table: for each column i and row d1 (multiple of 4) the
// solution n of d1 = 2i(n-i) when integral; entries with d2 >= d1 are
// suppressed (they cannot satisfy the screen); bold marks the RHE condition.
CnTable build_cn_table(const std::vector<int>& i_columns, const std::vector<int>& d1_rows);
CnTable build_cn_table_default();  // i = 2..10, d1 = 4..64 step 4 plus 640

struct CnClassification {
  int n, i, d1, d2;
  bool admissible;
  std::string clause;
};

// Case analysis for the sp(2n) grading sigma_i: which structural clause
// admits or rejects the pair; agrees with screen_grading everywhere.
CnClassification cn_structural_filter(int n, int i);

struct DnSurvivor {
  int n;
  GradingSpec spec;
  GradingDims dims;
};

// Screen of so(2n) pair-choice gradings sigma_{1,n} and sigma_{n-1,n}.
std::vector<DnSurvivor> dn_pair_choice_search(int n_max);

// Screen over every depth-2 grading of the five exceptional algebras.
std::vector<ScreenVerdict> exceptional_screen();

}  // namespace ht
