#include "ht/htype.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

#include "ht/linalg.hpp"

namespace ht {

void GradedNilpotentAlgebra::default_labels() {
  labels1.clear();
  labels2.clear();
  for (int a = 1; a <= d1; ++a) labels1.push_back("e" + std::to_string(a));
  for (int k = 1; k <= d2; ++k) labels2.push_back("z" + std::to_string(k));
}

void GradedNilpotentAlgebra::validate() const {
  if (d1 < 1 || d2 < 0) throw std::invalid_argument("bad dimensions");
  if (static_cast<int>(bracket.size()) != d2) throw std::invalid_argument("bracket count != d2");
  for (const auto& c : bracket) {
    if (c.rows() != static_cast<std::size_t>(d1) || c.cols() != static_cast<std::size_t>(d1))
      throw std::invalid_argument("bracket matrix shape mismatch");
    for (std::size_t a = 0; a < c.rows(); ++a)
      for (std::size_t b = a; b < c.cols(); ++b)
        if (c(a, b) != -c(b, a)) throw std::invalid_argument("bracket not antisymmetric");
  }
}

bool GradedNilpotentAlgebra::generated_in_degree_minus_one() const {
  if (d2 == 0) return true;
  // the span of [n_{-1}, n_{-1}] is the column space of the d2 x (d1*d1) flattening
  Mat flat(d2, static_cast<std::size_t>(d1) * d1);
  for (int k = 0; k < d2; ++k)
    for (int a = 0; a < d1; ++a)
      for (int b = 0; b < d1; ++b) flat(k, static_cast<std::size_t>(a) * d1 + b) = bracket[k](a, b);
  return rank(flat) == static_cast<std::size_t>(d2);
}

std::pair<GradedNilpotentAlgebra, HTypeMetric> build_htype(const CliffordModuleRep& rep) {
  const int dim = rep.module_dim;
  const int m = rep.sig.total();
  if (determinant(rep.form) == 0) throw std::invalid_argument("degenerate module form");

  GradedNilpotentAlgebra n;
  n.d1 = dim;
  n.d2 = m;
  // [x,y] = sum_k eps_k <J_k x, y> z_k, so c^k = eps_k J_k^T B
  for (int k = 0; k < m; ++k) {
    Rat eps = k < rep.sig.r ? 1 : -1;
    n.bracket.push_back(rep.generators[k].transpose() * rep.form * eps);
  }
  n.default_labels();
  n.validate();

  HTypeMetric metric;
  metric.form_center = Mat(m, m);
  for (int k = 0; k < m; ++k) metric.form_center(k, k) = k < rep.sig.r ? 1 : -1;
  metric.form_module = rep.form;
  return {std::move(n), std::move(metric)};
}

// =======================================================================
// su(3,3) fixture
// =======================================================================

namespace {

struct CMat {
  Mat re, im;

  CMat() = default;
  CMat(std::size_t r, std::size_t c) : re(r, c), im(r, c) {}

  CMat operator*(const CMat& o) const {
    CMat out;
    out.re = re * o.re - im * o.im;
    out.im = re * o.im + im * o.re;
    return out;
  }
  CMat operator+(const CMat& o) const { return {re + o.re, im + o.im}; }
  CMat operator-(const CMat& o) const { return {re - o.re, im - o.im}; }
  CMat operator*(const Rat& c) const { return {re * c, im * c}; }
  bool operator==(const CMat& o) const { return re == o.re && im == o.im; }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  CMat conj_transpose() const { return {re.transpose(), -im.transpose()}; }

 private:
  CMat(Mat r, Mat i) : re(std::move(r)), im(std::move(i)) {}
};

// elementary matrix with a complex coefficient
void add_unit(CMat& m, int i, int j, long re, long im) {
  m.re(i - 1, j - 1) += re;
  m.im(i - 1, j - 1) += im;
}

}  // namespace

FixtureReport verify_su33_fixture() {
  FixtureReport rpt;

  std::vector<CMat> e(8, CMat(6, 6)), z(4, CMat(6, 6));
  // degree -1 basis, ordered to be consistent with the commutator table and
  // the J matrices below
  add_unit(e[0], 4, 1, 1, 0); add_unit(e[0], 6, 3, -1, 0); add_unit(e[0], 3, 2, 1, 0); add_unit(e[0], 5, 4, -1, 0);
  add_unit(e[1], 3, 1, 1, 0); add_unit(e[1], 6, 4, -1, 0); add_unit(e[1], 4, 2, -1, 0); add_unit(e[1], 5, 3, 1, 0);
  add_unit(e[2], 4, 1, 0, 1); add_unit(e[2], 6, 3, 0, 1); add_unit(e[2], 3, 2, 0, -1); add_unit(e[2], 5, 4, 0, -1);
  add_unit(e[3], 3, 1, 0, 1); add_unit(e[3], 6, 4, 0, 1); add_unit(e[3], 4, 2, 0, 1); add_unit(e[3], 5, 3, 0, 1);
  add_unit(e[4], 4, 1, 1, 0); add_unit(e[4], 6, 3, -1, 0); add_unit(e[4], 3, 2, -1, 0); add_unit(e[4], 5, 4, 1, 0);
  add_unit(e[5], 3, 1, 1, 0); add_unit(e[5], 6, 4, -1, 0); add_unit(e[5], 4, 2, 1, 0); add_unit(e[5], 5, 3, -1, 0);
  add_unit(e[6], 4, 1, 0, 1); add_unit(e[6], 6, 3, 0, 1); add_unit(e[6], 3, 2, 0, 1); add_unit(e[6], 5, 4, 0, 1);
  add_unit(e[7], 3, 1, 0, 1); add_unit(e[7], 6, 4, 0, 1); add_unit(e[7], 4, 2, 0, -1); add_unit(e[7], 5, 3, 0, -1);
  // degree -2 basis
  add_unit(z[0], 5, 1, 2, 0); add_unit(z[0], 6, 2, -2, 0);
  add_unit(z[1], 5, 1, 0, 2); add_unit(z[1], 6, 2, 0, 2);
  add_unit(z[2], 5, 2, 0, 2); add_unit(z[2], 6, 1, 0, -2);
  add_unit(z[3], 5, 2, 0, 2); add_unit(z[3], 6, 1, 0, 2);

  // commutator table: entry (a,b) -> signed z index (1-based), 0 = vanishes
  static const int table[8][8] = {
      {0, 0, 0, -4, -1, 0, -2, +3},
      {0, 0, -4, 0, 0, +1, +3, +2},
      {0, +4, 0, 0, -2, -3, +1, 0},
      {+4, 0, 0, 0, -3, +2, 0, -1},
      {+1, 0, +2, +3, 0, 0, 0, -4},
      {0, -1, +3, -2, 0, 0, -4, 0},
      {+2, -3, -1, 0, 0, +4, 0, 0},
      {-3, -2, 0, +1, +4, 0, 0, 0},
  };

  // (a) all 64 commutators match the table
  rpt.commutators_ok = true;
  // c[k](a,b): coefficient of z_{k+1} in [e_a, e_b]
  std::vector<Mat> c(4, Mat(8, 8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      CMat br = e[a] * e[b] - e[b] * e[a];
      CMat expect(6, 6);
      if (table[a][b] != 0) {
        int k = std::abs(table[a][b]) - 1;
        expect = z[k] * Rat(table[a][b] > 0 ? 1 : -1);
        c[k](a, b) = table[a][b] > 0 ? 1 : -1;
      }
      if (!(br == expect)) {
        rpt.commutators_ok = false;
        std::ostringstream os;
        os << "commutator [e" << a + 1 << ", e" << b + 1 << "] does not match the table";
        rpt.diffs.push_back(os.str());
      }
    }

  // scalar products: <e_a, e_a> = +1 for a <= 4, -1 for a >= 5;
  // <z_k, z_k> = -1 for k <= 3, +1 for k = 4
  auto eta = [](int b) { return b < 4 ? Rat(1) : Rat(-1); };

  // (b) displayed J matrices: these pair against the dual center basis,
  //     <J~_k x, y> = coefficient of z_k in [x, y], i.e. (J~_k)_{ba} = eta_b c^k(a,b)
  static const int j_expected[4][8][8] = {
      {{0,0,0,0,1,0,0,0},{0,0,0,0,0,-1,0,0},{0,0,0,0,0,0,-1,0},{0,0,0,0,0,0,0,1},
       {1,0,0,0,0,0,0,0},{0,-1,0,0,0,0,0,0},{0,0,-1,0,0,0,0,0},{0,0,0,1,0,0,0,0}},
      {{0,0,0,0,0,0,1,0},{0,0,0,0,0,0,0,-1},{0,0,0,0,1,0,0,0},{0,0,0,0,0,-1,0,0},
       {0,0,1,0,0,0,0,0},{0,0,0,-1,0,0,0,0},{1,0,0,0,0,0,0,0},{0,-1,0,0,0,0,0,0}},
      {{0,0,0,0,0,0,0,-1},{0,0,0,0,0,0,-1,0},{0,0,0,0,0,1,0,0},{0,0,0,0,1,0,0,0},
       {0,0,0,1,0,0,0,0},{0,0,1,0,0,0,0,0},{0,-1,0,0,0,0,0,0},{-1,0,0,0,0,0,0,0}},
      {{0,0,0,1,0,0,0,0},{0,0,1,0,0,0,0,0},{0,-1,0,0,0,0,0,0},{-1,0,0,0,0,0,0,0},
       {0,0,0,0,0,0,0,-1},{0,0,0,0,0,0,-1,0},{0,0,0,0,0,1,0,0},{0,0,0,0,1,0,0,0}}};

  rpt.j_matrices_ok = true;
  std::vector<Mat> jmat(4, Mat(8, 8));
  for (int k = 0; k < 4; ++k) {
    for (int b = 0; b < 8; ++b)
      for (int a = 0; a < 8; ++a) jmat[k](b, a) = eta(b) * c[k](a, b);
    Mat expect(8, 8);
    for (int x = 0; x < 8; ++x)
      for (int y = 0; y < 8; ++y) expect(x, y) = j_expected[k][x][y];
    if (jmat[k] != expect) {
      rpt.j_matrices_ok = false;
      rpt.diffs.push_back("J_z" + std::to_string(k + 1) + " does not match the displayed matrix");
    }
  }

  // (c) J_1^2 = J_2^2 = J_3^2 = -J_4^2 = Id and pairwise anticommutation
  rpt.clifford_ok = true;
  Mat id8 = Mat::identity(8);
  for (int k = 0; k < 4; ++k) {
    Mat sq = jmat[k] * jmat[k];
    Mat expect = k < 3 ? id8 : -id8;
    if (sq != expect) {
      rpt.clifford_ok = false;
      rpt.diffs.push_back("J_z" + std::to_string(k + 1) + " has the wrong square");
    }
    for (int l = k + 1; l < 4; ++l)
      if (!(jmat[k] * jmat[l] + jmat[l] * jmat[k]).is_zero()) {
        rpt.clifford_ok = false;
        rpt.diffs.push_back("J_z" + std::to_string(k + 1) + ", J_z" + std::to_string(l + 1) +
                            " do not anticommute");
      }
  }

  // (d) membership in su(3,3): X + sigma X* sigma = 0
  Mat sigma(6, 6);
  for (int i = 0; i < 6; ++i) sigma(i, 5 - i) = 1;
  rpt.su33_ok = true;
  auto check_su = [&](const CMat& x, const std::string& name) {
    CMat xs = x.conj_transpose();
    Mat re = x.re + sigma * xs.re * sigma;
    Mat im = x.im + sigma * xs.im * sigma;
    if (!re.is_zero() || !im.is_zero()) {
      rpt.su33_ok = false;
      rpt.diffs.push_back(name + " is not in su(3,3)");
    }
  };
  for (int a = 0; a < 8; ++a) check_su(e[a], "e" + std::to_string(a + 1));
  for (int k = 0; k < 4; ++k) check_su(z[k], "z" + std::to_string(k + 1));

  return rpt;
}

// =======================================================================
// sl(n+1,R) gradings over the elementary-matrix basis
// =======================================================================

namespace {

enum class Side { L, R };

bool in_g_minus1(int n, int i, int j, int k, int l, Side* side = nullptr) {
  if (i < k && k <= j && 1 <= l && l <= i) {
    if (side) *side = Side::L;
    return true;
  }
  if (j < k && k <= n + 1 && i < l && l <= j) {
    if (side) *side = Side::R;
    return true;
  }
  return false;
}

}  // namespace

int sl_grading_kernel_dims(int n, int i, int j, int k, int l) {
  if (!(1 <= i && i < j && j <= n)) throw std::invalid_argument("bad sigma {i,j}");
  if (!in_g_minus1(n, i, j, k, l))
    throw std::invalid_argument("E_{" + std::to_string(k) + "," + std::to_string(l) +
                                "} is not in g_{-1}");
  const int N = n + 1;
  // ad_{E_kl} on gl(N) in the elementary basis: [E_kl, E_pq] = d_{lp} E_kq - d_{qk} E_pl
  Mat ad(N * N, N * N);
  auto idx = [N](int p, int q) { return (p - 1) * N + (q - 1); };
  for (int p = 1; p <= N; ++p)
    for (int q = 1; q <= N; ++q) {
      if (l == p) ad(idx(k, q), idx(p, q)) += 1;
      if (q == k) ad(idx(p, l), idx(p, q)) -= 1;
    }
  auto ker = kernel_basis(ad);

  // coordinates of g_{-1} inside gl(N)
  std::vector<int> gm1;
  for (int p = 1; p <= N; ++p)
    for (int q = 1; q <= N; ++q)
      if (in_g_minus1(n, i, j, p, q)) gm1.push_back(idx(p, q));

  // dim of (ker^perp intersect g_{-1}) = d1 - rank of the kernel restricted
  // to the g_{-1} coordinates (the elementary basis is orthonormal)
  Mat restr(ker.size(), gm1.size());
  for (std::size_t r = 0; r < ker.size(); ++r)
    for (std::size_t cidx = 0; cidx < gm1.size(); ++cidx) restr(r, cidx) = ker[r](gm1[cidx], 0);
  return static_cast<int>(gm1.size() - rank(restr));
}

std::vector<HeisenbergCheckRow> heisenberg_uniqueness_check(int n_max) {
  if (n_max < 2) throw std::invalid_argument("n_max must be at least 2");
  std::vector<HeisenbergCheckRow> rows;
  for (int n = 2; n <= n_max; ++n) {
    for (int i = 1; 2 * i <= n; ++i)
      for (int j = i + 1; j <= n + 1 - i; ++j) {
        if (j > n) continue;
        const int d1 = (n + 1 - (j - i)) * (j - i);
        const int d2 = i * (n + 1 - j);

        // basis of g_{-1} and g_{-2}
        std::vector<std::pair<int, int>> b1, b2;
        for (int p = 1; p <= n + 1; ++p)
          for (int q = 1; q <= n + 1; ++q) {
            if (in_g_minus1(n, i, j, p, q)) b1.push_back({p, q});
            if (j < p && p <= n + 1 && 1 <= q && q <= i) b2.push_back({p, q});
          }

        int min_rank = d2 + d1, max_rank = -1;
        for (auto [k, l] : b1) {
          // rank of ad_{E_kl}: g_{-1} -> g_{-2}. Each basis bracket
          // [E_kl, E_pq] = d_{lp} E_kq - d_{qk} E_pl is a single signed
          // elementary matrix here (never both terms at once inside the
          // grading), so the rank is the number of distinct targets hit.
          std::set<std::pair<int, int>> hit;
          for (auto [p, q] : b1) {
            if (l == p && q == k) throw std::logic_error("unexpected diagonal bracket");
            if (l == p) hit.insert({k, q});
            if (q == k) hit.insert({p, l});
          }
          int rk = 0;
          for (auto [rp, rq] : hit)
            if (j < rp && rp <= n + 1 && 1 <= rq && rq <= i) ++rk;  // inside g_{-2}
          min_rank = std::min(min_rank, rk);
          max_rank = std::max(max_rank, rk);
        }
        rows.push_back({n, i, j, d1, d2, min_rank, max_rank,
                        min_rank == d2 && max_rank == d2});
      }
  }
  return rows;
}

}  // namespace ht
