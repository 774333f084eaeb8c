#pragma once
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ht/htype.hpp"
#include "ht/rootsys.hpp"

namespace ht {

using Sparse = std::vector<std::pair<int, Rat>>;  // (basis index, coefficient)

// Basis element of a non-negative level, represented by its action on the
// negative part: act1 maps n_{-1} into the level one degree down, act2 maps
// n_{-2} two degrees down. The element is zero iff both matrices vanish, so
// transitivity holds by construction.
struct LevelElement {
  Mat act1;  // dim(p-1) x d1
  Mat act2;  // dim(p-2) x d2
};

struct Level {
  int degree = 0;
  std::vector<LevelElement> basis;
};

struct KillingReport {
  bool nondegenerate = false;
  bool offdiag_zero = false;                       // B(g_p, g_q) = 0 for p + q != 0
  std::vector<std::pair<int, int>> pair_ranks;     // degree p -> rank of B|_{g_p x g_-p}
  std::size_t total_rank = 0;
  std::size_t total_dim = 0;
};

struct ComplexTypeMatch {
  SimpleType type;
  std::vector<int> sigma;
  bool operator==(const ComplexTypeMatch&) const = default;
};

class ProlongationResult {
 public:
  GradedNilpotentAlgebra input;
  int max_degree = 6;
  bool terminated = false;
  int top = -1;                 // highest degree carrying a (nonzero) level
  std::vector<Level> levels;    // degrees 0..top

  int depth() const { return input.depth(); }
  int dim(int degree) const;
  int total_dim() const;
  std::vector<int> growth_vector() const;

  // bracket of basis elements in g_{p+q} coordinates (empty when the target
  // degree carries no level); defined for p + q <= top, and for everything
  // when the prolongation terminated
  Sparse bracket(int p, int i, int q, int j) const;
  std::vector<Rat> bracket_vec(int p, int i, int q, const std::vector<Rat>& v) const;
  bool bracket_defined(int p, int q) const;

  // tables are filled by prolong(); key (p, q) with p <= q
  std::map<std::pair<int, int>, std::vector<std::vector<Sparse>>> table;
};

using ProgressFn = std::function<void(int degree, int dim)>;

// Level-by-level prolongation: g_{p+1} is the exact kernel of the linear
// system [z(x), y] + [x, z(y)] = z([x, y]) over all pairs from the negative
// part; stops at the first zero level or at max_degree.
ProlongationResult prolong(const GradedNilpotentAlgebra& n, int max_degree,
                           const ProgressFn& progress = {});

// Basis of the grading-preserving derivations (the degree-0 level).
std::vector<LevelElement> degree_zero_part(const GradedNilpotentAlgebra& n);

// Killing form B(x, y) = trace(ad x ad y) on a terminated prolongation.
KillingReport killing_form(const ProlongationResult& result);

struct IdentifyOutcome {
  std::vector<ComplexTypeMatch> matches;
  std::optional<ComplexTypeMatch> unique;
};

// Looks up (growth vector, total dimension) in the catalogue of depth-2
// graded simple algebras up to the given rank. Ambiguity is reported, never
// silently resolved.
IdentifyOutcome identify_complex_type(const ProlongationResult& result, int max_rank = 8);

enum class SimplicityVerdict { Simple, Semisimple, NotSemisimple };

struct SimplicityCertificate {
  bool killing_nondegenerate = false;
  bool bottom_generates = false;  // ideal generated by g_{-depth} is everything
  IdentifyOutcome identification;
  SimplicityVerdict verdict = SimplicityVerdict::NotSemisimple;
  std::string text;
};

SimplicityCertificate simplicity_certificate(const ProlongationResult& result, int max_rank = 8);

// Exact Jacobi check over every basis triple whose brackets stay inside the
// computed truncation.
bool verify_jacobi(const ProlongationResult& result);

}  // namespace ht
