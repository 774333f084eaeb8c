#include <catch2/catch_amalgamated.hpp>

#include "ht/clifford.hpp"
#include "ht/linalg.hpp"

using namespace ht;

namespace {

void check_clifford_relations(const std::vector<Mat>& gens, int r, int dim) {
  Mat id = Mat::identity(dim);
  for (std::size_t k = 0; k < gens.size(); ++k) {
    REQUIRE(gens[k] * gens[k] == (static_cast<int>(k) < r ? -id : id));
    for (std::size_t l = k + 1; l < gens.size(); ++l)
      REQUIRE((gens[k] * gens[l] + gens[l] * gens[k]).is_zero());
  }
}

bool entries_in_unit_range(const Mat& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0 && m(i, j) != 1 && m(i, j) != -1) return false;
  return true;
}

}  // namespace

TEST_CASE("irreducible generators, base cases") {
  auto g10 = irreducible_generators({1, 0});
  REQUIRE(g10.size() == 1);
  REQUIRE(g10[0] == Mat{{0, -1}, {1, 0}});

  auto g01 = irreducible_generators({0, 1});
  REQUIRE(g01.size() == 1);
  REQUIRE(g01[0].rows() <= 2);
  REQUIRE(g01[0] * g01[0] == Mat::identity(g01[0].rows()));

  auto g30 = irreducible_generators({3, 0});
  REQUIRE(g30.size() == 3);
  REQUIRE(g30[0].rows() == 4);
  check_clifford_relations(g30, 3, 4);
}

TEST_CASE("generator entries stay in {-1,0,1}") {
  for (int m = 1; m <= 8; ++m)
    for (int r = 0; r <= m; ++r)
      for (const auto& g : irreducible_generators({r, m - r})) REQUIRE(entries_in_unit_range(g));
}

TEST_CASE("admissible form existence and skew-adjointness") {
  auto gens = irreducible_generators({1, 0});
  auto form = find_admissible_form(gens, 2);
  REQUIRE(form.has_value());
  REQUIRE(form->is_symmetric());
  REQUIRE(determinant(*form) != 0);
  REQUIRE((gens[0].transpose() * *form + *form * gens[0]).is_zero());
}

TEST_CASE("irreducible modules without an admissible form trigger doubling") {
  // the solution space of the (1,1) irreducible contains no symmetric
  // non-degenerate element
  auto g11 = irreducible_generators({1, 1});
  REQUIRE_FALSE(find_admissible_form(g11, 2).has_value());
  REQUIRE(minimal_admissible_module({1, 1}).module_dim == 4);

  auto g21 = irreducible_generators({2, 1});
  REQUIRE_FALSE(find_admissible_form(g21, 4).has_value());
  REQUIRE(minimal_admissible_module({2, 1}).module_dim == 8);
}

TEST_CASE("doubled modules are block-diagonal over the irreducible") {
  // (1,1): plain doubling with identical blocks
  auto irr = irreducible_generators({1, 1});
  auto rep = minimal_admissible_module({1, 1});
  REQUIRE(rep.module_dim == 4);
  for (std::size_t k = 0; k < rep.generators.size(); ++k)
    REQUIRE(rep.generators[k] == Mat::block_diag(irr[k], irr[k]));

  // (4,1): the split case needs the parity-twisted second block
  auto irr41 = irreducible_generators({4, 1});
  auto rep41 = minimal_admissible_module({4, 1});
  REQUIRE(rep41.module_dim == 16);
  for (std::size_t k = 0; k < rep41.generators.size(); ++k)
    REQUIRE(rep41.generators[k] == Mat::block_diag(irr41[k], -irr41[k]));
}

TEST_CASE("minimal admissible modules match the reference dimensions") {
  // (r, s) -> least admissible module dimension, r+s <= 6 plus the listed
  // cases with r+s = 7, 8
  struct Fixture { int r, s, dim; };
  static const Fixture fixtures[] = {
      {1, 0, 2},  {0, 1, 2},
      {2, 0, 4},  {1, 1, 4},  {0, 2, 4},
      {3, 0, 4},  {2, 1, 8},  {1, 2, 4},  {0, 3, 8},
      {4, 0, 8},  {3, 1, 8},  {2, 2, 8},  {1, 3, 8},  {0, 4, 8},
      {5, 0, 8},  {4, 1, 16}, {3, 2, 8},  {2, 3, 8},  {1, 4, 8},  {0, 5, 16},
      {6, 0, 8},  {5, 1, 16}, {4, 2, 16}, {3, 3, 8},  {2, 4, 8},  {1, 5, 16}, {0, 6, 16},
      {7, 0, 8},  {3, 4, 8},
      {8, 0, 16}, {7, 1, 16}, {4, 4, 16}, {3, 5, 16},
  };
  for (const auto& f : fixtures) {
    INFO("signature (" << f.r << "," << f.s << ")");
    REQUIRE(minimal_admissible_dim({f.r, f.s}) == f.dim);
  }
}

TEST_CASE("constructed modules satisfy all invariants") {
  for (int m = 1; m <= 6; ++m)
    for (int r = 0; r <= m; ++r) {
      Signature sig{r, m - r};
      INFO("signature (" << sig.r << "," << sig.s << ")");
      auto rep = minimal_admissible_module(sig);
      check_clifford_relations(rep.generators, sig.r, rep.module_dim);
      REQUIRE(rep.form.is_symmetric());
      REQUIRE(determinant(rep.form) != 0);
      for (const auto& j : rep.generators)
        REQUIRE((j.transpose() * rep.form + rep.form * j).is_zero());
      if (m > 1) REQUIRE(rep.module_dim % 4 == 0);
    }
}

TEST_CASE("definite signatures get a positive definite form") {
  for (int r = 1; r <= 6; ++r) {
    auto rep = minimal_admissible_module({r, 0});
    auto [p, q] = module_form_signature(rep);
    REQUIRE(p == rep.module_dim);
    REQUIRE(q == 0);
  }
}

TEST_CASE("form signature of mixed modules") {
  auto rep = minimal_admissible_module({1, 3});
  REQUIRE(rep.module_dim == 8);
  REQUIRE(module_form_signature(rep) == std::pair<int, int>{4, 4});

  auto r01 = minimal_admissible_module({0, 1});
  auto [p, q] = module_form_signature(r01);
  REQUIRE(p + q == r01.module_dim);  // non-degenerate
  REQUIRE(p == 1);
  REQUIRE(q == 1);
}

TEST_CASE("least admissible dimension per center dimension") {
  REQUIRE(minimal_admissible_dim_for_center(2) == 4);
  REQUIRE(minimal_admissible_dim_for_center(3) == 4);
  REQUIRE(minimal_admissible_dim_for_center(4) == 8);
  REQUIRE(minimal_admissible_dim_for_center(7) == 8);
  REQUIRE(minimal_admissible_dim_for_center(8) == 16);
  REQUIRE_THROWS_AS(minimal_admissible_dim_for_center(9), std::invalid_argument);
}

TEST_CASE("construction respects the dimension bound from the rho function") {
  // r + s <= rho(dim) - 1, with the shift for one-dimensional centers
  for (int m = 1; m <= 8; ++m)
    for (int r = 0; r <= m; ++r) {
      long long dim = minimal_admissible_dim({r, m - r});
      long long bound = 0;
      {
        long long u = dim;
        int v = 0;
        while (u % 2 == 0) { u /= 2; ++v; }
        bound = 8 * (v / 4) + (1 << (v % 4));
      }
      REQUIRE(m <= bound - 1 + (m == 1 ? 1 : 0));
    }
}
