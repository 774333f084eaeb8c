#include <catch2/catch_amalgamated.hpp>

#include "ht/rootsys.hpp"

using namespace ht;

TEST_CASE("positive root generation, small cases") {
  auto a2 = generate_positive_roots({Family::A, 2});
  REQUIRE(a2.positive_roots.size() == 3);
  REQUIRE(a2.highest_root() == std::vector<int>{1, 1});

  REQUIRE(generate_positive_roots({Family::F, 4}).positive_roots.size() == 24);
  REQUIRE(generate_positive_roots({Family::G, 2}).positive_roots.size() == 6);
  REQUIRE(generate_positive_roots({Family::E, 6}).positive_roots.size() == 36);
  REQUIRE(generate_positive_roots({Family::E, 7}).positive_roots.size() == 63);
  REQUIRE(generate_positive_roots({Family::E, 8}).positive_roots.size() == 120);
  REQUIRE(generate_positive_roots({Family::B, 5}).positive_roots.size() == 25);
  REQUIRE(generate_positive_roots({Family::D, 6}).positive_roots.size() == 30);

  REQUIRE_THROWS_AS(generate_positive_roots({Family::E, 9}), std::invalid_argument);
}

TEST_CASE("highest root coefficients") {
  REQUIRE(generate_positive_roots({Family::G, 2}).highest_root() == std::vector<int>{3, 2});
  REQUIRE(generate_positive_roots({Family::F, 4}).highest_root() == std::vector<int>{2, 3, 4, 2});
  REQUIRE(generate_positive_roots({Family::E, 6}).highest_root() ==
          std::vector<int>{1, 2, 2, 3, 2, 1});
}

TEST_CASE("roots are sorted by height then lexicographically") {
  auto rs = generate_positive_roots({Family::C, 4});
  auto height = [](const std::vector<int>& r) {
    int h = 0;
    for (int c : r) h += c;
    return h;
  };
  for (std::size_t k = 1; k < rs.positive_roots.size(); ++k) {
    int h0 = height(rs.positive_roots[k - 1]), h1 = height(rs.positive_roots[k]);
    REQUIRE((h0 < h1 || (h0 == h1 && rs.positive_roots[k - 1] < rs.positive_roots[k])));
  }
}

TEST_CASE("dimension counts by roots") {
  // E6 with {1,6} has sigma-height 2 on the highest root
  auto e6 = generate_positive_roots({Family::E, 6});
  REQUIRE(sigma_height(e6.highest_root(), {1, 6}) == 2);
  REQUIRE(grading_dims_by_roots(e6, {1, 6}) == GradingDims{16, 8});

  REQUIRE(grading_dims_by_roots({{Family::F, 4}, {4}}) == GradingDims{8, 7});
  REQUIRE(grading_dims_by_roots({{Family::E, 8}, {1}}) == GradingDims{64, 14});
  REQUIRE(grading_dims_by_roots({{Family::A, 2}, {1, 2}}) == GradingDims{2, 1});

  // not a depth-2 grading: F4 sigma {2} has height 3 on the highest root
  REQUIRE_THROWS_AS(grading_dims_by_roots({{Family::F, 4}, {2}}), NotTwoGrading);
}

TEST_CASE("closed-form dimensions") {
  REQUIRE(grading_dims_closed_form({{Family::A, 5}, {2, 4}}) == GradingDims{8, 4});
  REQUIRE(grading_dims_closed_form({{Family::A, 7}, {1, 7}}) == GradingDims{2 * 7 - 2, 1});
  REQUIRE(grading_dims_closed_form({{Family::D, 5}, {4, 5}}) == GradingDims{8, 6});
  REQUIRE_THROWS_AS(grading_dims_closed_form({{Family::F, 4}, {4}}), UnsupportedFamily);
  REQUIRE_THROWS_AS(grading_dims_closed_form({{Family::A, 5}, {3}}), std::invalid_argument);
}

TEST_CASE("closed form agrees with root counting across the classical families") {
  for (Family fam : {Family::A, Family::B, Family::C, Family::D}) {
    int min_rank = fam == Family::A ? 2 : (fam == Family::B ? 2 : (fam == Family::C ? 3 : 4));
    for (int n = min_rank; n <= 9; ++n) {
      auto rs = generate_positive_roots({fam, n});
      for (const auto& spec : enumerate_two_gradings({fam, n}))
        REQUIRE(grading_dims_closed_form(spec) == grading_dims_by_roots(rs, spec.sigma));
    }
  }
}

TEST_CASE("heights partition the positive roots") {
  for (auto t : {SimpleType{Family::A, 6}, SimpleType{Family::D, 6}, SimpleType{Family::E, 7}}) {
    auto rs = generate_positive_roots(t);
    for (const auto& spec : enumerate_two_gradings(t)) {
      auto d = grading_dims_by_roots(rs, spec.sigma);
      int h0 = 0;
      for (const auto& alpha : rs.positive_roots)
        if (sigma_height(alpha, spec.sigma) == 0) ++h0;
      REQUIRE(d.d1 + d.d2 + h0 == static_cast<int>(rs.positive_roots.size()));
    }
  }
}

TEST_CASE("A_n reflection symmetry of the dimensions") {
  const int n = 7;
  auto rs = generate_positive_roots({Family::A, n});
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      auto d = grading_dims_by_roots(rs, {i, j});
      auto refl = grading_dims_by_roots(rs, {n + 1 - j, n + 1 - i});
      REQUIRE(d == refl);
    }
}

TEST_CASE("grading enumeration matches the reference lists") {
  auto specs = [](SimpleType t) {
    std::vector<std::vector<int>> out;
    for (const auto& s : enumerate_two_gradings(t)) out.push_back(s.sigma);
    return out;
  };
  REQUIRE(specs({Family::B, 3}) == std::vector<std::vector<int>>{{2}, {3}});
  REQUIRE(specs({Family::D, 4}) == std::vector<std::vector<int>>{{2}, {1, 4}, {3, 4}});
  REQUIRE(specs({Family::G, 2}) == std::vector<std::vector<int>>{{2}});
  REQUIRE(specs({Family::E, 6}) == std::vector<std::vector<int>>{{2}, {3}, {1, 6}});
  REQUIRE(specs({Family::E, 7}) == std::vector<std::vector<int>>{{1}, {2}, {6}});
  REQUIRE(specs({Family::E, 8}) == std::vector<std::vector<int>>{{1}, {8}});
  REQUIRE(specs({Family::F, 4}) == std::vector<std::vector<int>>{{1}, {4}});
  // A_4: orbit representatives with i <= [n/2], j <= n+1-i
  REQUIRE(specs({Family::A, 4}) ==
          std::vector<std::vector<int>>{{1, 2}, {1, 3}, {1, 4}, {2, 3}});
}

TEST_CASE("contact gradings") {
  REQUIRE(contact_grading({Family::B, 4}).d1 == 10);
  REQUIRE(contact_grading({Family::C, 3}).d1 == 4);
  REQUIRE(contact_grading({Family::G, 2}).d1 == 4);
  REQUIRE(contact_grading({Family::E, 8}).d1 == 56);
  // every contact grading has a one-dimensional center
  for (auto t : {SimpleType{Family::A, 5}, SimpleType{Family::B, 4}, SimpleType{Family::C, 4},
                 SimpleType{Family::D, 5}, SimpleType{Family::E, 6}, SimpleType{Family::E, 7},
                 SimpleType{Family::E, 8}, SimpleType{Family::F, 4}, SimpleType{Family::G, 2}}) {
    auto cg = contact_grading(t);
    REQUIRE(grading_dims_by_roots({t, cg.sigma}) == GradingDims{cg.d1, 1});
  }
}

TEST_CASE("catalogue entries are consistent") {
  for (const auto& e : graded_simple_catalogue(6)) {
    int g0 = e.total_dim - 2 * (e.dims.d1 + e.dims.d2);
    REQUIRE(g0 >= e.spec.type.rank);  // contains the Cartan subalgebra
  }
}
