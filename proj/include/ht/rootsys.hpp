#pragma once
#include <stdexcept>
#include <string>
#include <vector>

#include "ht/matrix.hpp"

namespace ht {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct SimpleType {
  Family family;
  int rank;

  bool operator==(const SimpleType&) const = default;
  std::string name() const { return std::string(1, static_cast<char>(family)) + std::to_string(rank); }
};

// rank ranges admitting a simple Lie algebra of each family (Bourbaki)
bool valid_simple_type(SimpleType t);
SimpleType parse_simple_type(const std::string& s);  // "E6", "A12", ...

struct NotTwoGrading : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UnsupportedFamily : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RootSystem {
  SimpleType type;
  std::vector<std::vector<int>> cartan;          // rank x rank
  std::vector<std::vector<int>> positive_roots;  // simple-root coordinates,
                                                 // graded-lex order (height, then lex)

  const std::vector<int>& highest_root() const { return positive_roots.back(); }
};

// Positive roots by inductive closure from the Cartan matrix. Counts are
// asserted against the classical values.
RootSystem generate_positive_roots(SimpleType type);

std::vector<std::vector<int>> cartan_matrix(SimpleType type);

struct GradingSpec {
  SimpleType type;
  std::vector<int> sigma;  // 1-based simple-root indices, ascending

  bool operator==(const GradingSpec&) const = default;
  std::string sigma_label() const;  // "{2}" -> "s2", "{1,6}" -> "s1,6"
};

struct GradingDims {
  int d1 = 0;  // dim g_{-1}
  int d2 = 0;  // dim g_{-2}
  bool operator==(const GradingDims&) const = default;
};

int sigma_height(const std::vector<int>& root, const std::vector<int>& sigma);

// Dimension counts from the root data. Throws NotTwoGrading if the highest
// root has sigma-height != 2.
GradingDims grading_dims_by_roots(const RootSystem& rs, const std::vector<int>& sigma);
GradingDims grading_dims_by_roots(const GradingSpec& spec);

// Closed-form dimensions for the classical families. Throws UnsupportedFamily
// for E/F/G and std::invalid_argument for a sigma outside the known patterns.
GradingDims grading_dims_closed_form(const GradingSpec& spec);

// All sigma giving a depth-2 grading, one representative per diagram-
// automorphism orbit (A_n reflection, D_n last-pair swap, E6 flip).
std::vector<GradingSpec> enumerate_two_gradings(SimpleType type);

struct ContactGrading {
  SimpleType type;
  std::vector<int> sigma;
  int d1;  // d2 = 1 always
};

// The unique contact grading of a given simple type.
ContactGrading contact_grading(SimpleType type);

// Catalogue row: a |2|-graded simple algebra with its negative dimensions and
// total dimension; used to identify prolongation outputs.
struct GradedSimpleEntry {
  GradingSpec spec;
  GradingDims dims;
  int total_dim;
};

int algebra_dim(SimpleType type);
std::vector<GradedSimpleEntry> graded_simple_catalogue(int max_rank);

}  // namespace ht
