#include "ht/prolong.hpp"

#include <algorithm>
#include <stdexcept>

#include "ht/linalg.hpp"

namespace ht {

int ProlongationResult::dim(int degree) const {
  const int mu = depth();
  if (degree < -mu) return 0;
  if (degree == -1) return input.d1;
  if (degree == -2) return input.d2;
  if (degree < 0) return 0;
  if (degree <= top) return static_cast<int>(levels[degree].basis.size());
  return terminated ? 0 : -1;  // -1: outside the computed truncation
}

int ProlongationResult::total_dim() const {
  int n = 0;
  for (int p = -depth(); p <= top; ++p) n += dim(p);
  return n;
}

std::vector<int> ProlongationResult::growth_vector() const {
  std::vector<int> g;
  for (int p = -depth(); p <= top; ++p) g.push_back(dim(p));
  return g;
}

bool ProlongationResult::bracket_defined(int p, int q) const {
  const int mu = depth();
  if (p < -mu || q < -mu || p > top || q > top) return false;
  return terminated || p + q <= top;
}

Sparse ProlongationResult::bracket(int p, int i, int q, int j) const {
  if (!bracket_defined(p, q)) throw std::logic_error("bracket outside computed truncation");
  if (p > q) {
    Sparse s = bracket(q, j, p, i);
    for (auto& [idx, c] : s) c = -c;
    return s;
  }
  auto it = table.find({p, q});
  if (it == table.end()) return {};
  return it->second[i][j];
}

std::vector<Rat> ProlongationResult::bracket_vec(int p, int i, int q,
                                                 const std::vector<Rat>& v) const {
  const int target = std::max(0, dim(p + q));
  std::vector<Rat> out(static_cast<std::size_t>(target));
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (v[j] == 0) continue;
    for (const auto& [idx, c] : bracket(p, i, q, static_cast<int>(j))) out[idx] += v[j] * c;
  }
  return out;
}

namespace {

// Solve A X = B column by column; A must have full column rank and every
// column of B must be consistent.
Mat solve_columns(const Mat& a, const Mat& b) {
  EchelonBasis e(a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::vector<Rat> row(a.cols() + b.cols());
    for (std::size_t j = 0; j < a.cols(); ++j) row[j] = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) row[a.cols() + j] = b(i, j);
    e.add_row(std::move(row));
  }
  e.reduce_fully();
  if (e.pivot_cols().size() < a.cols())
    throw std::logic_error("solve_columns: coefficient matrix is rank-deficient");
  for (std::size_t r = 0; r < e.pivot_cols().size(); ++r)
    if (e.pivot_cols()[r] >= a.cols())
      throw std::logic_error("solve_columns: inconsistent right-hand side");
  Mat x(a.cols(), b.cols());
  for (std::size_t r = 0; r < e.rank(); ++r)
    for (std::size_t j = 0; j < b.cols(); ++j) x(e.pivot_cols()[r], j) = e.rows()[r][a.cols() + j];
  return x;
}

struct Builder {
  const GradedNilpotentAlgebra& n;
  ProlongationResult& res;
  int mu;

  int dim(int p) const {
    if (p == -1) return n.d1;
    if (p == -2) return mu == 2 ? n.d2 : 0;
    if (p < 0) return 0;
    if (p <= res.top) return static_cast<int>(res.levels[p].basis.size());
    return 0;
  }

  // action of a basis element of g_p (p can be negative) on n_{-1} / n_{-2}
  Mat act1(int p, int i) const {
    if (p >= 0) return res.levels[p].basis[i].act1;
    if (p == -1) {
      // [e_i, e_b] in n_{-2} coordinates
      Mat m(dim(-2), n.d1);
      for (int k = 0; k < dim(-2); ++k)
        for (int b = 0; b < n.d1; ++b) m(k, b) = n.bracket[k](i, b);
      return m;
    }
    return Mat(0, n.d1);  // degree -2 elements act by zero
  }

  Mat act2(int p, int i) const {
    if (p >= 0) return res.levels[p].basis[i].act2;
    return Mat(0, dim(-2));  // brackets with n_{-2} vanish below degree -2
  }

  // ---------------------------------------------------------------- levels

  // Kernel of the defining equation at target degree p+1. Unknowns: Z1
  // (n_{-1} -> g_p) then Z2 (n_{-2} -> g_{p-1}), ordered domain-major.
  int compute_level(int next_degree) {
    const int p = next_degree - 1;
    const int dp = dim(p), dp1 = dim(p - 1), dp2 = dim(p - 2), dp3 = dim(p - 3);
    const int d1 = n.d1, d2 = dim(-2);
    const std::size_t nu1 = static_cast<std::size_t>(d1) * dp;
    const std::size_t nu = nu1 + static_cast<std::size_t>(d2) * dp1;
    auto u1 = [&](int x, int w) { return static_cast<std::size_t>(x) * dp + w; };
    auto u2 = [&](int y, int v) { return nu1 + static_cast<std::size_t>(y) * dp1 + v; };

    // cache actions of the level-p and level-(p-1) bases
    std::vector<Mat> p_act1, p_act2, pm1_act1, pm1_act2;
    for (int w = 0; w < dp; ++w) {
      p_act1.push_back(act1(p, w));
      p_act2.push_back(act2(p, w));
    }
    for (int v = 0; v < dp1; ++v) {
      pm1_act1.push_back(act1(p - 1, v));
      pm1_act2.push_back(act2(p - 1, v));
    }

    EchelonBasis ech(nu);
    std::vector<Rat> row(nu);
    auto flush = [&]() {
      bool nz = false;
      for (const auto& c : row)
        if (c != 0) { nz = true; break; }
      if (nz) ech.add_row(row);
      std::fill(row.begin(), row.end(), Rat(0));
    };

    // (x, y) in n_{-1} x n_{-1}: [z(x),y] + [x,z(y)] = z([x,y]) in g_{p-1}
    for (int x = 0; x < d1; ++x)
      for (int y = x + 1; y < d1; ++y)
        for (int k = 0; k < dp1; ++k) {
          for (int w = 0; w < dp; ++w) {
            if (p_act1[w](k, y) != 0) row[u1(x, w)] += p_act1[w](k, y);
            if (p_act1[w](k, x) != 0) row[u1(y, w)] -= p_act1[w](k, x);
          }
          for (int l = 0; l < d2; ++l)
            if (n.bracket[l](x, y) != 0) row[u2(l, k)] -= n.bracket[l](x, y);
          flush();
        }

    // (x, y) in n_{-1} x n_{-2}: [z(x),y] + [x,z(y)] = 0 in g_{p-2}
    for (int x = 0; x < d1; ++x)
      for (int y = 0; y < d2; ++y)
        for (int k = 0; k < dp2; ++k) {
          for (int w = 0; w < dp; ++w)
            if (p_act2[w](k, y) != 0) row[u1(x, w)] += p_act2[w](k, y);
          for (int v = 0; v < dp1; ++v)
            if (pm1_act1[v](k, x) != 0) row[u2(y, v)] -= pm1_act1[v](k, x);
          flush();
        }

    // (x, y) in n_{-2} x n_{-2}: [z(x),y] + [x,z(y)] = 0 in g_{p-3}
    for (int x = 0; x < d2; ++x)
      for (int y = x + 1; y < d2; ++y)
        for (int k = 0; k < dp3; ++k) {
          for (int v = 0; v < dp1; ++v) {
            if (pm1_act2[v](k, y) != 0) row[u2(x, v)] += pm1_act2[v](k, y);
            if (pm1_act2[v](k, x) != 0) row[u2(y, v)] -= pm1_act2[v](k, x);
          }
          flush();
        }

    auto kernel = ech.kernel();
    Level level;
    level.degree = next_degree;
    for (const auto& vec : kernel) {
      LevelElement el;
      el.act1 = Mat(dp, d1);
      for (int x = 0; x < d1; ++x)
        for (int w = 0; w < dp; ++w) el.act1(w, x) = vec[u1(x, w)];
      el.act2 = Mat(dp1, d2);
      for (int y = 0; y < d2; ++y)
        for (int v = 0; v < dp1; ++v) el.act2(v, y) = vec[u2(y, v)];
      level.basis.push_back(std::move(el));
    }
    const int found = static_cast<int>(level.basis.size());
    if (found > 0) {
      res.levels.push_back(std::move(level));
      res.top = next_degree;
    }
    return found;
  }

  // ---------------------------------------------------------- bracket table

  // coordinates of an action pair (a1, a2) in the basis of level `degree`
  Mat coords_in_level(int degree, const std::vector<Mat>& a1s, const std::vector<Mat>& a2s) {
    const int d = dim(degree);
    const int rows1 = dim(degree - 1), rows2 = dim(degree - 2);
    const std::size_t stacked = static_cast<std::size_t>(rows1) * n.d1 +
                                static_cast<std::size_t>(rows2) * dim(-2);
    Mat a(stacked, d);
    for (int w = 0; w < d; ++w) {
      const auto& el = res.levels[degree].basis[w];
      std::size_t r = 0;
      for (int i = 0; i < rows1; ++i)
        for (int x = 0; x < n.d1; ++x) a(r++, w) = el.act1(i, x);
      for (int i = 0; i < rows2; ++i)
        for (int y = 0; y < dim(-2); ++y) a(r++, w) = el.act2(i, y);
    }
    Mat b(stacked, a1s.size());
    for (std::size_t col = 0; col < a1s.size(); ++col) {
      std::size_t r = 0;
      for (int i = 0; i < rows1; ++i)
        for (int x = 0; x < n.d1; ++x) b(r++, col) = a1s[col](i, x);
      for (int i = 0; i < rows2; ++i)
        for (int y = 0; y < dim(-2); ++y) b(r++, col) = a2s[col](i, y);
    }
    return solve_columns(a, b);
  }

  std::vector<Rat> table_bracket_vec(int p, int i, int q, const std::vector<Rat>& v) {
    // [u^p_i, sum v_j u^q_j] with q possibly negative; result in g_{p+q}
    std::vector<Rat> out(std::max(0, dim(p + q)));
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (v[j] == 0) continue;
      Sparse br;
      if (p <= q) {
        br = res.table.at({p, q})[i][j];
      } else {
        br = res.table.at({q, p})[j][i];
        for (auto& [idx, c] : br) c = -c;
      }
      for (const auto& [idx, c] : br) out[idx] += v[j] * c;
    }
    return out;
  }

  void fill_tables() {
    const int top = res.top;
    // negative-negative
    {
      std::vector<std::vector<Sparse>> t11(n.d1, std::vector<Sparse>(n.d1));
      for (int i = 0; i < n.d1; ++i)
        for (int j = 0; j < n.d1; ++j)
          for (int k = 0; k < dim(-2); ++k)
            if (n.bracket[k](i, j) != 0) t11[i][j].push_back({k, n.bracket[k](i, j)});
      res.table[{-1, -1}] = std::move(t11);
      res.table[{-2, -1}] = std::vector<std::vector<Sparse>>(
          std::max(0, dim(-2)), std::vector<Sparse>(n.d1));
      res.table[{-2, -2}] = std::vector<std::vector<Sparse>>(
          std::max(0, dim(-2)), std::vector<Sparse>(std::max(0, dim(-2))));
    }
    // negative x non-negative: [x, w] = -w(x)
    for (int q = 0; q <= top; ++q) {
      for (int pneg = -mu; pneg <= -1; ++pneg) {
        std::vector<std::vector<Sparse>> t(dim(pneg), std::vector<Sparse>(dim(q)));
        for (int j = 0; j < dim(q); ++j) {
          Mat a = pneg == -1 ? act1(q, j) : act2(q, j);
          for (int i = 0; i < dim(pneg); ++i)
            for (std::size_t r = 0; r < a.rows(); ++r)
              if (a(r, i) != 0) t[i][j].push_back({static_cast<int>(r), -a(r, i)});
        }
        res.table[{pneg, q}] = std::move(t);
      }
    }
    // non-negative pairs in ascending order of p+q, so the recursion below
    // only consults already-filled tables
    for (int sum = 0; sum <= 2 * top; ++sum) {
      for (int p = 0; p <= std::min(sum, top); ++p) {
        int q = sum - p;
        if (q < p || q > top) continue;
        const bool target_exists = sum <= top;
        if (!target_exists && !res.terminated) continue;  // outside truncation
        std::vector<std::vector<Sparse>> t(dim(p), std::vector<Sparse>(dim(q)));
        std::vector<Mat> a1s, a2s;  // one action pair per (i, j), row-major
        for (int i = 0; i < dim(p); ++i) {
          const Mat& ai1 = res.levels[p].basis[i].act1;
          const Mat& ai2 = res.levels[p].basis[i].act2;
          for (int j = 0; j < dim(q); ++j) {
            const Mat& aj1 = res.levels[q].basis[j].act1;
            const Mat& aj2 = res.levels[q].basis[j].act2;
            // action of [u_i, u_j] on n_{-1} and n_{-2} via Jacobi
            Mat a1(std::max(0, dim(sum - 1)), n.d1);
            Mat a2(std::max(0, dim(sum - 2)), dim(-2));
            for (int x = 0; x < n.d1; ++x) {
              // [u_i, [u_j, x]] - [u_j, [u_i, x]]
              auto t1 = table_bracket_vec(p, i, q - 1, aj1.col(x));
              auto t2 = table_bracket_vec(q, j, p - 1, ai1.col(x));
              for (int r = 0; r < dim(sum - 1); ++r) a1(r, x) = t1[r] - t2[r];
            }
            for (int y = 0; y < dim(-2); ++y) {
              auto t1 = table_bracket_vec(p, i, q - 2, aj2.col(y));
              auto t2 = table_bracket_vec(q, j, p - 2, ai2.col(y));
              for (int r = 0; r < dim(sum - 2); ++r) a2(r, y) = t1[r] - t2[r];
            }
            if (!target_exists && (!a1.is_zero() || !a2.is_zero()))
              throw std::logic_error("bracket escapes the terminated prolongation");
            a1s.push_back(std::move(a1));
            a2s.push_back(std::move(a2));
          }
        }
        if (target_exists && dim(sum) > 0 && dim(p) > 0) {
          Mat coords = coords_in_level(sum, a1s, a2s);  // one solve per pair of levels
          for (int i = 0; i < dim(p); ++i)
            for (int j = 0; j < dim(q); ++j) {
              std::size_t col = static_cast<std::size_t>(i) * dim(q) + j;
              for (int r = 0; r < dim(sum); ++r)
                if (coords(r, col) != 0) t[i][j].push_back({r, coords(r, col)});
            }
        }
        res.table[{p, q}] = std::move(t);
      }
    }
  }
};

}  // namespace

ProlongationResult prolong(const GradedNilpotentAlgebra& n, int max_degree,
                           const ProgressFn& progress) {
  if (max_degree < 0) throw std::invalid_argument("max_degree must be non-negative");
  n.validate();
  if (n.depth() == 2 && !n.generated_in_degree_minus_one())
    throw std::invalid_argument("algebra is not generated in degree -1");

  ProlongationResult res;
  res.input = n;
  res.max_degree = max_degree;
  res.top = -1;
  Builder bld{n, res, n.depth()};

  res.terminated = false;
  for (int next = 0; next <= max_degree; ++next) {
    int found = bld.compute_level(next);
    if (progress) progress(next, found);
    if (found == 0) {
      res.terminated = true;
      break;
    }
  }
  bld.fill_tables();
  return res;
}

std::vector<LevelElement> degree_zero_part(const GradedNilpotentAlgebra& n) {
  auto res = prolong(n, 0);
  if (res.top < 0) return {};
  return res.levels[0].basis;
}

namespace {

struct BasisIndex {
  std::vector<std::pair<int, int>> elems;  // (degree, index within level)
  std::map<int, int> offset;               // degree -> first flat index

  explicit BasisIndex(const ProlongationResult& r) {
    for (int p = -r.depth(); p <= r.top; ++p) {
      offset[p] = static_cast<int>(elems.size());
      for (int i = 0; i < r.dim(p); ++i) elems.push_back({p, i});
    }
  }
};

}  // namespace

KillingReport killing_form(const ProlongationResult& result) {
  if (!result.terminated) throw std::invalid_argument("Killing form needs a terminated prolongation");
  BasisIndex bi(result);
  const std::size_t N = bi.elems.size();

  // ad matrices, sparse by construction of the tables
  std::vector<std::vector<Sparse>> ad(N, std::vector<Sparse>(N));
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = 0; b < N; ++b) {
      auto [p, i] = bi.elems[a];
      auto [q, j] = bi.elems[b];
      if (p + q < -result.depth() || p + q > result.top) continue;
      Sparse s = result.bracket(p, i, q, j);
      int off = bi.offset.at(p + q);
      for (auto& [idx, c] : s) ad[a][b].push_back({off + idx, c});
    }

  Mat B(N, N);
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = a; b < N; ++b) {
      // tr(ad_a ad_b) = sum_w <[a, [b, w]], w*>
      Rat tr(0);
      for (std::size_t w = 0; w < N; ++w)
        for (const auto& [m, c] : ad[b][w])
          for (const auto& [k, c2] : ad[a][m])
            if (k == static_cast<int>(w)) tr += c * c2;
      B(a, b) = tr;
      B(b, a) = tr;
    }

  KillingReport rep;
  rep.total_dim = N;
  rep.total_rank = rank(B);
  rep.nondegenerate = rep.total_rank == N;
  rep.offdiag_zero = true;
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = 0; b < N; ++b) {
      auto [p, i] = bi.elems[a];
      auto [q, j] = bi.elems[b];
      (void)i; (void)j;
      if (p + q != 0 && B(a, b) != 0) rep.offdiag_zero = false;
    }
  for (int p = 0; p <= result.top; ++p) {
    if (result.dim(-p) <= 0 && result.dim(p) <= 0) continue;
    Mat block(result.dim(p), std::max(result.dim(-p), 0));
    for (int i = 0; i < result.dim(p); ++i)
      for (int j = 0; j < std::max(result.dim(-p), 0); ++j)
        block(i, j) = B(bi.offset.at(p) + i, bi.offset.at(-p) + j);
    rep.pair_ranks.push_back({p, static_cast<int>(rank(block))});
  }
  return rep;
}

IdentifyOutcome identify_complex_type(const ProlongationResult& result, int max_rank) {
  IdentifyOutcome out;
  if (!result.terminated) return out;
  auto growth = result.growth_vector();
  const int total = result.total_dim();
  for (const auto& entry : graded_simple_catalogue(max_rank)) {
    std::vector<int> g = {entry.dims.d2, entry.dims.d1,
                          entry.total_dim - 2 * (entry.dims.d1 + entry.dims.d2),
                          entry.dims.d1, entry.dims.d2};
    if (g == growth && entry.total_dim == total)
      out.matches.push_back({entry.spec.type, entry.spec.sigma});
  }
  if (out.matches.size() == 1) out.unique = out.matches.front();
  return out;
}

SimplicityCertificate simplicity_certificate(const ProlongationResult& result, int max_rank) {
  if (!result.terminated) throw std::invalid_argument("certificate needs a terminated prolongation");
  SimplicityCertificate cert;
  cert.killing_nondegenerate = killing_form(result).nondegenerate;

  // ideal generated by the bottom level under repeated bracketing
  BasisIndex bi(result);
  const std::size_t N = bi.elems.size();
  EchelonBasis span(N);
  std::vector<std::vector<Rat>> frontier;
  const int mu = result.depth();
  for (int i = 0; i < result.dim(-mu); ++i) {
    std::vector<Rat> v(N);
    v[bi.offset.at(-mu) + i] = 1;
    if (span.add_row(v)) frontier.push_back(v);
  }
  while (!frontier.empty()) {
    std::vector<std::vector<Rat>> next;
    for (const auto& v : frontier) {
      for (std::size_t a = 0; a < N; ++a) {
        auto [p, i] = bi.elems[a];
        std::vector<Rat> w(N);
        bool nz = false;
        for (std::size_t b = 0; b < N; ++b) {
          if (v[b] == 0) continue;
          auto [q, j] = bi.elems[b];
          if (p + q < -mu || p + q > result.top) continue;
          for (const auto& [idx, c] : result.bracket(p, i, q, j)) {
            w[bi.offset.at(p + q) + idx] += v[b] * c;
            nz = true;
          }
        }
        if (nz && span.add_row(w)) next.push_back(std::move(w));
      }
    }
    frontier = std::move(next);
  }
  cert.bottom_generates = span.rank() == N;

  cert.identification = identify_complex_type(result, max_rank);
  if (cert.killing_nondegenerate && cert.bottom_generates && cert.identification.unique) {
    cert.verdict = SimplicityVerdict::Simple;
    cert.text = "simple (certified against catalogue: " + cert.identification.unique->type.name() + ")";
  } else if (cert.killing_nondegenerate) {
    cert.verdict = SimplicityVerdict::Semisimple;
    cert.text = "semisimple";
  } else {
    cert.verdict = SimplicityVerdict::NotSemisimple;
    cert.text = "not semisimple";
  }
  return cert;
}

bool verify_jacobi(const ProlongationResult& result) {
  const int mu = result.depth();
  auto dims_ok = [&](int d) { return d >= -mu && d <= result.top; };
  auto evaluable = [&](int d) { return result.terminated || d <= result.top; };

  for (int p = -mu; p <= result.top; ++p)
    for (int q = p; q <= result.top; ++q)
      for (int r = q; r <= result.top; ++r) {
        if (!evaluable(p + q) || !evaluable(q + r) || !evaluable(p + r) || !evaluable(p + q + r))
          continue;
        const int d = p + q + r;
        for (int i = 0; i < result.dim(p); ++i)
          for (int j = 0; j < result.dim(q); ++j)
            for (int k = 0; k < result.dim(r); ++k) {
              std::vector<Rat> lhs(std::max(0, dims_ok(d) ? result.dim(d) : 0));
              auto add = [&](int s1, int i1, int s2, int i2, int s3, int i3, int sign) {
                // sign * [u_{s1,i1}, [u_{s2,i2}, u_{s3,i3}]]
                if (s2 + s3 < -mu || s2 + s3 > result.top) return;
                auto inner = result.bracket(s2, i2, s3, i3);
                for (const auto& [m, c] : inner) {
                  if (s1 + s2 + s3 < -mu || s1 + s2 + s3 > result.top) {
                    // the outer bracket must vanish only if inner was nonzero
                    // and the target is below depth; above top means terminated
                    continue;
                  }
                  for (const auto& [w, c2] : result.bracket(s1, i1, s2 + s3, m))
                    lhs[w] += Rat(sign) * c * c2;
                }
              };
              // [[x,y],z] + [[y,z],x] + [[z,x],y] = 0 rewritten with inner first
              add(p, i, q, j, r, k, 1);   // [x, [y, z]]
              add(q, j, r, k, p, i, 1);   // [y, [z, x]]
              add(r, k, p, i, q, j, 1);   // [z, [x, y]]
              for (const auto& c : lhs)
                if (c != 0) return false;
            }
      }
  return true;
}

}  // namespace ht
