#pragma once
#include <optional>
#include <utility>
#include <vector>

#include "ht/matrix.hpp"

namespace ht {

struct Signature {
  int r = 0;  // generators squaring to -Id  (<z,z> = +1)
  int s = 0;  // generators squaring to +Id  (<z,z> = -1)

  bool operator==(const Signature&) const = default;
  bool operator<(const Signature& o) const { return std::pair(r, s) < std::pair(o.r, o.s); }
  int total() const { return r + s; }
};

// Representation of Cl(r,s) on a module with an admissible symmetric form:
// every generator is skew-adjoint for the form.
struct CliffordModuleRep {
  Signature sig;
  int module_dim = 0;
  std::vector<Mat> generators;  // r "positive" generators first, then s
  Mat form;                     // symmetric, non-degenerate
};

// Generators of the irreducible module, built by tensor recursion from fixed
// 2x2 blocks; every entry is in {-1, 0, 1}. Clifford relations are checked on
// construction.
std::vector<Mat> irreducible_generators(Signature sig);

// Solves { B symmetric, J^T B = -B J for every generator } and searches the
// solution space deterministically (single basis elements, then integer
// combinations of increasing max-norm) for a non-degenerate representative.
std::optional<Mat> find_admissible_form(const std::vector<Mat>& gens, int dim);

// The admissible module of least dimension: the irreducible module if it
// carries a form, otherwise a doubled module. For a definite signature (r,0)
// the form is normalized positive definite.
CliffordModuleRep minimal_admissible_module(Signature sig);

// Inertia (p, q) of the admissible form.
std::pair<int, int> module_form_signature(const CliffordModuleRep& rep);

// Cached dimension of the minimal admissible module.
int minimal_admissible_dim(Signature sig);

// Least minimal-admissible dimension over all signatures with r + s = d2
// (supported for d2 <= 8).
int minimal_admissible_dim_for_center(int d2);

}  // namespace ht
