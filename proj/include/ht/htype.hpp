#pragma once
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ht/clifford.hpp"
#include "ht/matrix.hpp"

namespace ht {

// Two-step graded nilpotent algebra n_{-2} (+) n_{-1}, given by the structure
// constants of [n_{-1}, n_{-1}] in an ordered basis. d2 = 0 encodes an abelian
// algebra concentrated in degree -1 (accepted for testing only).
struct GradedNilpotentAlgebra {
  int d1 = 0;
  int d2 = 0;
  std::vector<Mat> bracket;  // d2 antisymmetric d1 x d1 matrices: c^k(i,j)
  std::vector<std::string> labels1, labels2;

  int depth() const { return d2 > 0 ? 2 : 1; }
  void default_labels();
  void validate() const;                      // shapes and antisymmetry
  bool generated_in_degree_minus_one() const; // [n_{-1}, n_{-1}] = n_{-2}
};

struct HTypeMetric {
  Mat form_center;  // diag(+1 x r, -1 x s)
  Mat form_module;  // the admissible form on n_{-1}
};

// The pseudo H-type algebra of a Clifford module: the bracket is recovered
// from <J_z x, y> = <[x,y], z> over an orthonormal center basis.
std::pair<GradedNilpotentAlgebra, HTypeMetric> build_htype(const CliffordModuleRep& rep);

// ------------------------------------------------------------------ fixture

// Bit-exact verification of the embedded su(3,3) example: the sixteen complex
// 6x6 basis matrices, their commutator table, the four displayed J matrices
// (which pair against the dual basis of the center), the Clifford relations,
// and membership in su(3,3).
struct FixtureReport {
  bool commutators_ok = false;
  bool j_matrices_ok = false;
  bool clifford_ok = false;
  bool su33_ok = false;
  std::vector<std::string> diffs;

  bool all_ok() const { return commutators_ok && j_matrices_ok && clifford_ok && su33_ok; }
};

FixtureReport verify_su33_fixture();

// ------------------------------------------------------- sl(n+1,R) gradings

// dim(ker(ad_{E_kl})^perp  intersect  g_{-1}) for the sigma_{i,j} grading of
// sl(n+1,R), computed over the orthonormal elementary-matrix basis. Indices
// k, l are 1-based; E_kl must lie in g_{-1}.
int sl_grading_kernel_dims(int n, int i, int j, int k, int l);

// For every sigma_{i,j} grading of sl(n+1,R) with n <= n_max, tests the
// surjective-isometry dimension criterion: ad_{E_kl} maps ker^perp onto
// g_{-2} with matching dimension for every basis element. Returns survivors.
struct HeisenbergCheckRow {
  int n, i, j, d1, d2;
  int min_rank, max_rank;  // over all E_kl in g_{-1}
  bool survives;           // min_rank == max_rank == d2
};

std::vector<HeisenbergCheckRow> heisenberg_uniqueness_check(int n_max);

}  // namespace ht
