#pragma once
#include <string>
#include <vector>

#include "ht/jsonio.hpp"
#include "ht/prolong.hpp"
#include "ht/rhe.hpp"

namespace ht {

// A generated reference table: a canonical JSON payload used for diffing plus
// a flat rendering for the human-readable formats.
struct TableDoc {
  std::string id;
  json canonical;
  std::vector<std::string> headers;
  std::vector<std::vector<std::string>> cells;
};

// classical dimension formulas, cross-checked against root counts
TableDoc make_table2(int verify_max_rank = 12);
// contact gradings of the classical families (affine d1 fitted from the data)
TableDoc make_table3(int verify_max_rank = 12);
// sl(n+1) families per center dimension 2..8 with residue constraints
TableDoc make_table3a();
// sp(2n) dimension table with RHE bold marks
TableDoc make_table4a();
// depth-2 gradings of the exceptional algebras
TableDoc make_table5();
// prolongations for center dimension <= 4
TableDoc make_table8(const ProgressFn& progress = {});
// prolongations for center dimension 5..8 (7 and 8 only when long_runs)
TableDoc make_table9(bool long_runs, const ProgressFn& progress = {});

std::string render_markdown(const TableDoc& t);
std::string render_csv(const TableDoc& t);

// cell-level difference report ("path: expected ... got ...")
std::vector<std::string> diff_json(const json& expected, const json& got);

// the d1 rows printed in the reference sp(2n) table
std::vector<int> cn_reference_rows();

}  // namespace ht
