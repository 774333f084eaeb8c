// Acceptance suite: every check below is exact (rational arithmetic), no
// tolerances anywhere. One PASS/FAIL line is printed per criterion.

#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <vector>

#include "ht/expected_data.hpp"
#include "ht/jsonio.hpp"
#include "ht/linalg.hpp"
#include "ht/tables.hpp"

using namespace ht;

namespace {

int g_failures = 0;

void report(int number, const std::string& what, bool pass, const std::string& detail = "") {
  std::cout << "[" << (pass ? "PASS" : "FAIL") << "] criterion " << number << ": " << what;
  if (!pass && !detail.empty()) std::cout << " -- " << detail;
  std::cout << std::endl;
  if (!pass) ++g_failures;
}

// prolongation cache shared by criteria 10-13
struct ProlongCase {
  Signature sig;
  ProlongationResult result;
  bool killing_nondeg = false;
  IdentifyOutcome ident;
};
std::map<std::pair<int, int>, ProlongCase> g_runs;

const ProlongCase& run_case(Signature sig, int max_degree) {
  auto key = std::make_pair(sig.r, sig.s);
  auto it = g_runs.find(key);
  if (it != g_runs.end()) return it->second;
  ProlongCase pc;
  pc.sig = sig;
  auto algebra = build_htype(minimal_admissible_module(sig)).first;
  pc.result = prolong(algebra, max_degree);
  if (pc.result.terminated) {
    pc.killing_nondeg = killing_form(pc.result).nondegenerate;
    if (pc.killing_nondeg) pc.ident = identify_complex_type(pc.result);
  }
  return g_runs.emplace(key, std::move(pc)).first->second;
}

std::string vec_str(const std::vector<int>& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

// ------------------------------------------------------------ criterion 1

void criterion1() {
  bool ok = rho(20) == 4 && rho(16) == 9 && rho(15) == 1 && rho(32) == 10 && rho(64) == 12 &&
            rho(8) == 8;
  for (int r = 0; r <= 40 && ok; ++r) {
    long long expect = (r % 4 == 0)   ? 2 * r + 1
                       : (r % 4 == 3) ? 2 * r + 2
                                      : 2 * r;
    if (rho(1LL << r) != expect) ok = false;
    if (r <= 30 && rho(7LL << r) != expect) ok = false;
  }
  report(1, "rho values and the full case formula for r <= 40", ok);
}

// ------------------------------------------------------------ criterion 2

void criterion2() {
  bool ok = true;
  std::string detail;
  for (Family fam : {Family::A, Family::B, Family::C, Family::D}) {
    int min_rank = fam == Family::A ? 2 : (fam == Family::B ? 2 : (fam == Family::C ? 3 : 4));
    for (int n = min_rank; n <= 12; ++n) {
      auto rs = generate_positive_roots({fam, n});
      for (const auto& spec : enumerate_two_gradings({fam, n})) {
        if (grading_dims_closed_form(spec) != grading_dims_by_roots(rs, spec.sigma)) {
          ok = false;
          detail = spec.type.name() + " " + spec.sigma_label();
        }
      }
    }
  }
  report(2, "closed-form dimensions agree with root counts (classical, rank <= 12)", ok, detail);
}

// ------------------------------------------------------------ criterion 3

void criterion3() {
  struct Row { const char* type; std::vector<int> sigma; int d1, d2; };
  static const Row expect[] = {
      {"E6", {2}, 20, 1},  {"E6", {3}, 20, 5},  {"E6", {1, 6}, 16, 8},
      {"E7", {1}, 32, 1},  {"E7", {2}, 35, 7},  {"E7", {6}, 32, 10},
      {"E8", {1}, 64, 14}, {"E8", {8}, 56, 1},
      {"F4", {1}, 14, 1},  {"F4", {4}, 8, 7},
      {"G2", {2}, 4, 1},
  };
  auto verdicts = exceptional_screen();
  bool ok = verdicts.size() == 11;
  std::string detail;
  for (std::size_t k = 0; ok && k < verdicts.size(); ++k) {
    const auto& v = verdicts[k];
    const auto& e = expect[k];
    if (v.spec.type.name() != e.type || v.spec.sigma != e.sigma || v.dims.d1 != e.d1 ||
        v.dims.d2 != e.d2) {
      ok = false;
      detail = "row " + std::to_string(k) + ": got " + v.spec.type.name() + " " +
               v.spec.sigma_label() + " (" + std::to_string(v.dims.d1) + "," +
               std::to_string(v.dims.d2) + ")";
    }
  }
  report(3, "exceptional table reproduced exactly (11 rows, generated root systems)", ok, detail);
}

// ------------------------------------------------------------ criterion 4

void criterion4() {
  std::vector<std::string> survivors;
  for (const auto& v : exceptional_screen())
    if (v.candidate && v.dims.d2 > 1) survivors.push_back(v.spec.type.name() + v.spec.sigma_label());
  bool ok = survivors == std::vector<std::string>{"E6s1,6", "F4s4"};
  report(4, "exceptional screen survivors are exactly E6 {1,6} and F4 {4}", ok);
}

// ------------------------------------------------------------ criterion 5

void criterion5() {
  bool ok = true;
  for (const auto& row : verify_bn_empty(50))
    if (row.candidate) ok = false;
  auto survivors = dn_pair_choice_search(50);
  if (survivors.size() != 1 || survivors[0].n != 5 ||
      survivors[0].spec.sigma != std::vector<int>{4, 5} ||
      !(survivors[0].dims == GradingDims{8, 6}))
    ok = false;
  report(5, "B_n screen empty and D_n pair-choice screen has the unique survivor (5, {4,5}), n <= 50",
         ok);
}

// ------------------------------------------------------------ criterion 6

void criterion6() {
  json expected = json::parse(embedded::table4a);
  auto doc = make_table4a();
  auto diffs = diff_json(expected, doc.canonical);
  // spot checks frozen independently of the data file
  auto cell = [&](int d1, int i) {
    const auto& rows = doc.canonical["rows"];
    for (const auto& row : rows)
      if (row["d1"] == d1) return row["cells"][i - 2];
    return json();
  };
  bool spot = cell(4, 2)["n"] == 3 && cell(4, 2)["bold"] == true && cell(64, 4)["n"] == 12 &&
              cell(64, 4)["bold"] == true && cell(24, 3)["n"] == 7 && cell(24, 3)["bold"] == true &&
              cell(640, 10)["n"] == 42 && cell(640, 10)["bold"] == false &&
              cell(640, 5)["n"] == 69 && cell(640, 5)["bold"] == true &&
              cell(640, 2)["n"] == 162 && cell(640, 2)["bold"] == true;
  report(6, "sp(2n) dimension table with bold marks (i <= 10, d1 <= 64 and 640)",
         diffs.empty() && spot, diffs.empty() ? "spot-check failed" : diffs.front());
}

// ------------------------------------------------------------ criterion 7

void criterion7() {
  json expected = json::parse(embedded::table3a);
  auto doc = make_table3a();
  auto diffs = diff_json(expected, doc.canonical);
  // frozen rows for the prime centers
  const auto& rows = doc.canonical["rows"];
  bool spot = false;
  for (const auto& r : rows)
    if (r["d2"] == 3 && r["d1"] == "4(n-3)" && r["restrictions"] == "n>3") spot = true;
  bool spot2 = false;
  for (const auto& r : rows)
    if (r["d2"] == 4 && r["i"] == 2 && r["d1"] == "4(n-3)" &&
        r["restrictions"] == "n>3, n odd")
      spot2 = true;
  report(7, "sl(n+1) families for center dimensions 2..8 with residue constraints",
         diffs.empty() && spot && spot2, diffs.empty() ? "spot-check failed" : diffs.front());
}

// ------------------------------------------------------------ criterion 8

void criterion8() {
  auto rpt = verify_su33_fixture();
  std::string detail;
  if (!rpt.diffs.empty()) detail = rpt.diffs.front();
  report(8, "su(3,3) fixture: commutator table, J matrices, Clifford relations, membership",
         rpt.all_ok(), detail);
}

// ------------------------------------------------------------ criterion 9

void criterion9() {
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
  bool ok = true;
  std::string detail;
  std::map<std::pair<int, int>, int> pinned;
  for (const auto& f : fixtures) pinned[{f.r, f.s}] = f.dim;

  for (int m = 1; m <= 8 && ok; ++m)
    for (int r = m; r >= 0 && ok; --r) {
      Signature sig{r, m - r};
      auto rep = minimal_admissible_module(sig);
      Mat id = Mat::identity(rep.module_dim);
      for (int k = 0; k < m && ok; ++k) {
        if (!(rep.generators[k] * rep.generators[k] == (k < sig.r ? -id : id))) ok = false;
        for (int l = k + 1; l < m && ok; ++l)
          if (!(rep.generators[k] * rep.generators[l] + rep.generators[l] * rep.generators[k])
                   .is_zero())
            ok = false;
        if (!(rep.generators[k].transpose() * rep.form + rep.form * rep.generators[k]).is_zero())
          ok = false;
      }
      if (!rep.form.is_symmetric() || determinant(rep.form) == 0) ok = false;
      auto it = pinned.find({sig.r, sig.s});
      if (it != pinned.end() && rep.module_dim != it->second) ok = false;
      if (!ok) detail = "signature (" + std::to_string(sig.r) + "," + std::to_string(sig.s) + ")";
    }
  report(9, "Clifford relations, skew-adjointness and minimal dimensions for r+s <= 8", ok, detail);
}

// ----------------------------------------------------- criteria 10, 11, 12

void criterion10() {
  bool ok = true;
  std::string detail;
  auto expect_growth = [&](Signature sig, std::vector<int> growth, bool want_killing,
                           const char* type, std::vector<int> sigma) {
    const auto& pc = run_case(sig, sig.total() <= 2 ? 2 : 6);
    if (pc.result.growth_vector() != growth ||
        (sig.total() > 2) != pc.result.terminated ||
        pc.killing_nondeg != want_killing) {
      ok = false;
      detail = "n^{" + std::to_string(sig.r) + "," + std::to_string(sig.s) + "} growth " +
               vec_str(pc.result.growth_vector());
      return;
    }
    if (type) {
      if (!pc.ident.unique || pc.ident.unique->type.name() != type ||
          pc.ident.unique->sigma != sigma) {
        ok = false;
        detail = "n^{" + std::to_string(sig.r) + "," + std::to_string(sig.s) + "} complex type";
      }
    }
  };
  // contact prefixes
  for (Signature sig : {Signature{1, 0}, Signature{0, 1}})
    expect_growth(sig, {1, 2, 4, 6, 9}, false, nullptr, {});
  for (Signature sig : {Signature{2, 0}, Signature{1, 1}, Signature{0, 2}})
    expect_growth(sig, {2, 4, 8, 12, 18}, false, nullptr, {});
  // center dimension 3: sp(6,C) and sp(8,C)
  expect_growth({3, 0}, {3, 4, 7, 4, 3}, true, "C3", {2});
  expect_growth({1, 2}, {3, 4, 7, 4, 3}, true, "C3", {2});
  expect_growth({2, 1}, {3, 8, 14, 8, 3}, true, "C4", {2});
  expect_growth({0, 3}, {3, 8, 14, 8, 3}, true, "C4", {2});
  // center dimension 4: sl(6,C)
  for (int r = 4; r >= 0; --r)
    expect_growth({r, 4 - r}, {4, 8, 11, 8, 4}, true, "A5", {2, 4});
  report(10, "growth vectors for r+s <= 4 with Killing and complex types", ok, detail);
}

void criterion11() {
  bool ok = true;
  std::string detail;
  auto expect = [&](Signature sig, std::vector<int> growth) {
    const auto& pc = run_case(sig, 6);
    if (pc.result.growth_vector() != growth || !pc.result.terminated || pc.killing_nondeg) {
      ok = false;
      detail = "n^{" + std::to_string(sig.r) + "," + std::to_string(sig.s) + "} growth " +
               vec_str(pc.result.growth_vector());
    }
  };
  expect({5, 0}, {5, 8, 12});
  expect({4, 1}, {5, 16, 17});
  expect({3, 2}, {5, 8, 12});
  expect({2, 3}, {5, 8, 12});
  expect({1, 4}, {5, 8, 12});
  expect({0, 5}, {5, 16, 17});
  expect({6, 0}, {6, 8, 16});
  expect({5, 1}, {6, 16, 18});
  expect({4, 2}, {6, 16, 18});
  expect({3, 3}, {6, 8, 16});
  expect({2, 4}, {6, 8, 16});
  expect({1, 5}, {6, 16, 18});
  expect({0, 6}, {6, 16, 18});
  report(11, "prolongations for r+s in {5,6} vanish at order 1 with the listed g_0 dimensions", ok,
         detail);
}

void criterion12() {
  bool ok = true;
  std::string detail;
  auto expect = [&](Signature sig, std::vector<int> growth, const char* type,
                    std::vector<int> sigma) {
    const auto& pc = run_case(sig, 6);
    if (pc.result.growth_vector() != growth || !pc.result.terminated || !pc.killing_nondeg ||
        !pc.ident.unique || pc.ident.unique->type.name() != type ||
        pc.ident.unique->sigma != sigma) {
      ok = false;
      detail = "n^{" + std::to_string(sig.r) + "," + std::to_string(sig.s) + "} growth " +
               vec_str(pc.result.growth_vector());
      return;
    }
    // the certificate must come out simple for these
    auto cert = simplicity_certificate(pc.result);
    if (cert.verdict != SimplicityVerdict::Simple) {
      ok = false;
      detail = "n^{" + std::to_string(sig.r) + "," + std::to_string(sig.s) + "} certificate: " +
               cert.text;
    }
  };
  expect({7, 0}, {7, 8, 22, 8, 7}, "F4", {4});
  expect({3, 4}, {7, 8, 22, 8, 7}, "F4", {4});
  expect({8, 0}, {8, 16, 30, 16, 8}, "E6", {1, 6});
  expect({7, 1}, {8, 16, 30, 16, 8}, "E6", {1, 6});
  expect({4, 4}, {8, 16, 30, 16, 8}, "E6", {1, 6});
  expect({3, 5}, {8, 16, 30, 16, 8}, "E6", {1, 6});
  report(12, "growth vectors for r+s in {7,8}: F4 and E6 real-form prolongations", ok, detail);
}

// ------------------------------------------------------------ criterion 13

// brute-force derivation oracle, set up without the level decomposition
int derivation_oracle_dim(const GradedNilpotentAlgebra& n) {
  const int N = n.d1 + n.d2;
  auto bracket_full = [&](int a, int b) {
    std::vector<Rat> v(N);
    if (a < n.d1 && b < n.d1)
      for (int k = 0; k < n.d2; ++k) v[n.d1 + k] = n.bracket[k](a, b);
    return v;
  };
  EchelonBasis ech(static_cast<std::size_t>(N) * N);
  auto unk = [N](int i, int j) { return static_cast<std::size_t>(i) * N + j; };
  std::vector<Rat> row(static_cast<std::size_t>(N) * N);
  for (int x = 0; x < N; ++x)
    for (int y = x + 1; y < N; ++y) {
      auto bxy = bracket_full(x, y);
      for (int out = 0; out < N; ++out) {
        std::fill(row.begin(), row.end(), Rat(0));
        for (int m = 0; m < N; ++m)
          if (bxy[m] != 0) row[unk(out, m)] += bxy[m];
        for (int m = 0; m < N; ++m) {
          auto bmy = bracket_full(m, y);
          if (bmy[out] != 0) row[unk(m, x)] -= bmy[out];
          auto bxm = bracket_full(x, m);
          if (bxm[out] != 0) row[unk(m, y)] -= bxm[out];
        }
        bool nz = false;
        for (const auto& c : row)
          if (c != 0) { nz = true; break; }
        if (nz) ech.add_row(row);
      }
    }
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      if ((i < n.d1) != (j < n.d1)) {
        std::fill(row.begin(), row.end(), Rat(0));
        row[unk(i, j)] = 1;
        ech.add_row(row);
      }
  return static_cast<int>(static_cast<std::size_t>(N) * N - ech.rank());
}

void criterion13() {
  bool ok = true;
  std::string detail;

  // Jacobi, Killing block structure and transitivity on every cached run
  for (const auto& [key, pc] : g_runs) {
    if (!verify_jacobi(pc.result)) {
      ok = false;
      detail = "Jacobi failed for n^{" + std::to_string(key.first) + "," +
               std::to_string(key.second) + "}";
    }
    if (pc.result.terminated) {
      auto kil = killing_form(pc.result);
      if (!kil.offdiag_zero) {
        ok = false;
        detail = "Killing off-diagonal block nonzero for n^{" + std::to_string(key.first) + "," +
                 std::to_string(key.second) + "}";
      }
    }
    for (const auto& level : pc.result.levels) {
      const auto& b = level.basis;
      if (b.empty()) continue;
      std::size_t rows = b[0].act1.rows() * b[0].act1.cols() + b[0].act2.rows() * b[0].act2.cols();
      Mat stacked(rows, b.size());
      for (std::size_t w = 0; w < b.size(); ++w) {
        std::size_t rr = 0;
        for (std::size_t i = 0; i < b[w].act1.rows(); ++i)
          for (std::size_t j = 0; j < b[w].act1.cols(); ++j) stacked(rr++, w) = b[w].act1(i, j);
        for (std::size_t i = 0; i < b[w].act2.rows(); ++i)
          for (std::size_t j = 0; j < b[w].act2.cols(); ++j) stacked(rr++, w) = b[w].act2(i, j);
      }
      if (rank(stacked) != b.size()) {
        ok = false;
        detail = "transitivity failed";
      }
    }
  }

  // degree-zero dimension vs the brute-force oracle on small algebras
  {
    GradedNilpotentAlgebra h3;
    h3.d1 = 2;
    h3.d2 = 1;
    h3.bracket = {Mat{{0, 1}, {-1, 0}}};
    h3.default_labels();
    GradedNilpotentAlgebra ab2;
    ab2.d1 = 2;
    ab2.d2 = 0;
    ab2.default_labels();
    std::vector<GradedNilpotentAlgebra> smalls{h3, ab2};
    for (Signature sig : {Signature{1, 0}, Signature{0, 1}, Signature{2, 0}, Signature{1, 1},
                          Signature{0, 2}, Signature{3, 0}, Signature{1, 2}})
      smalls.push_back(build_htype(minimal_admissible_module(sig)).first);
    for (const auto& n : smalls) {
      if (n.d1 + n.d2 > 8) continue;
      if (static_cast<int>(degree_zero_part(n).size()) != derivation_oracle_dim(n)) {
        ok = false;
        detail = "derivation oracle mismatch (d1=" + std::to_string(n.d1) + ")";
      }
    }
  }

  // rref/kernel identities on seeded random matrices
  {
    std::mt19937 rng(314159);
    std::uniform_int_distribution<int> dist(-5, 5);
    for (int trial = 0; trial < 40; ++trial) {
      std::size_t rows = 3 + trial % 5, cols = 3 + (trial * 7) % 6;
      Mat m(rows, cols);
      for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = dist(rng);
      auto ker = kernel_basis(m);
      if (rref(m).pivots.size() + ker.size() != cols) ok = false;
      for (const auto& v : ker)
        if (!(m * v).is_zero()) ok = false;
      Mat r = rref(m).reduced;
      if (!(rref(r).reduced == r)) ok = false;
    }
  }
  report(13, "property suites: Jacobi, Killing blocks, transitivity, derivation oracle, rref/kernel",
         ok, detail);
}

// ------------------------------------------------------------ criterion 14

void criterion14() {
  bool ok = true;
  std::string detail;
  auto rows = heisenberg_uniqueness_check(12);
  for (const auto& r : rows) {
    if (r.survives != (r.d2 == 1)) {
      ok = false;
      detail = "n=" + std::to_string(r.n) + " sigma{" + std::to_string(r.i) + "," +
               std::to_string(r.j) + "}";
    }
  }
  report(14, "surjective-isometry survivors for n <= 12 are exactly the d2 = 1 gradings", ok,
         detail);
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  criterion11();
  criterion12();
  criterion13();
  criterion14();
  std::cout << (g_failures == 0 ? "all criteria passed" : std::to_string(g_failures) + " criteria failed")
            << std::endl;
  return g_failures == 0 ? 0 : 1;
}
