#include "ht/clifford.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "ht/linalg.hpp"

namespace ht {

namespace {

// 2x2 building blocks: P, Q square to +Id, R to -Id; any two anticommute.
const Mat kE{{1, 0}, {0, 1}};
const Mat kP{{0, 1}, {1, 0}};
const Mat kQ{{1, 0}, {0, -1}};
const Mat kR{{0, -1}, {1, 0}};

Mat kron(const Mat& a, const Mat& b) {
  Mat r(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          if (b(k, l) != 0) r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return r;
}

struct GenSet {
  std::vector<Mat> neg_sq;  // square to -Id  (r-type)
  std::vector<Mat> pos_sq;  // square to +Id  (s-type)
  int dim = 1;
};

GenSet tensor_step(const GenSet& g) {
  GenSet out;
  out.dim = g.dim * 2;
  Mat id = Mat::identity(g.dim);
  for (const auto& a : g.neg_sq) out.neg_sq.push_back(kron(a, kQ));
  out.neg_sq.push_back(kron(id, kR));
  for (const auto& b : g.pos_sq) out.pos_sq.push_back(kron(b, kQ));
  out.pos_sq.push_back(kron(id, kP));
  return out;
}

GenSet build(int r, int s) {
  if (r < 0 || s < 0) throw std::invalid_argument("negative signature");
  if (r == 0 && s == 0) return {};
  if (r >= 1 && s >= 1) return tensor_step(build(r - 1, s - 1));
  if (s == 0) {
    switch (r) {
      case 1: return {{kR}, {}, 2};
      case 2: return {{kron(kR, kQ), kron(kR, kP)}, {}, 4};
      case 3: return {{kron(kR, kQ), kron(kR, kP), kron(kE, kR)}, {}, 4};
      case 4: {
        GenSet g3 = build(3, 0);
        GenSet g;
        g.dim = 8;
        for (const auto& a : g3.neg_sq) g.neg_sq.push_back(kron(a, kQ));
        g.neg_sq.push_back(kron(Mat::identity(4), kR));
        return g;
      }
      default: {
        // Cl(r,0) from Cl(r-4,4): the product of the four +Id generators
        // squares to +Id and anticommutes with each of them
        GenSet g = build(r - 4, 4);
        Mat t = g.pos_sq[0] * g.pos_sq[1] * g.pos_sq[2] * g.pos_sq[3];
        GenSet out;
        out.dim = g.dim;
        out.neg_sq = g.neg_sq;
        for (int j = 0; j < 4; ++j) out.neg_sq.push_back(g.pos_sq[j] * t);
        return out;
      }
    }
  }
  // r == 0
  switch (s) {
    case 1: return {{}, {Mat{{1}}}, 1};
    case 2: return {{}, {kP, kQ}, 2};
    case 3: return {{}, {kron(kQ, kE), kron(kP, kQ), kron(kP, kP)}, 4};
    case 4: {
      GenSet g3 = build(0, 3);
      GenSet g;
      g.dim = 8;
      for (const auto& b : g3.pos_sq) g.pos_sq.push_back(kron(b, kQ));
      g.pos_sq.push_back(kron(Mat::identity(4), kP));
      return g;
    }
    default: {
      GenSet g = build(4, s - 4);
      Mat t = g.neg_sq[0] * g.neg_sq[1] * g.neg_sq[2] * g.neg_sq[3];
      GenSet out;
      out.dim = g.dim;
      for (int j = 0; j < 4; ++j) out.pos_sq.push_back(g.neg_sq[j] * t);
      for (const auto& b : g.pos_sq) out.pos_sq.push_back(b);
      return out;
    }
  }
}

void check_relations(const std::vector<Mat>& gens, int r, int dim) {
  Mat id = Mat::identity(dim);
  for (std::size_t k = 0; k < gens.size(); ++k) {
    Mat sq = gens[k] * gens[k];
    Mat expect = static_cast<int>(k) < r ? -id : id;
    if (sq != expect) throw std::logic_error("Clifford square relation violated");
    for (std::size_t l = k + 1; l < gens.size(); ++l)
      if (!(gens[k] * gens[l] + gens[l] * gens[k]).is_zero())
        throw std::logic_error("Clifford anticommutation violated");
  }
}

}  // namespace

std::vector<Mat> irreducible_generators(Signature sig) {
  if (sig.r < 0 || sig.s < 0 || sig.total() < 1) throw std::invalid_argument("bad signature");
  GenSet g = build(sig.r, sig.s);
  std::vector<Mat> gens = g.neg_sq;  // positive generators (J^2 = -Id) first
  gens.insert(gens.end(), g.pos_sq.begin(), g.pos_sq.end());
  check_relations(gens, sig.r, g.dim);
  return gens;
}

namespace {

Mat sym_from_vec(const std::vector<Rat>& v, int dim) {
  Mat b(dim, dim);
  std::size_t idx = 0;
  for (int i = 0; i < dim; ++i)
    for (int j = i; j < dim; ++j) {
      b(i, j) = v[idx];
      b(j, i) = v[idx];
      ++idx;
    }
  return b;
}

}  // namespace

std::optional<Mat> find_admissible_form(const std::vector<Mat>& gens, int dim) {
  // unknowns: entries b_{ij}, i <= j, of a symmetric matrix
  const std::size_t nunk = static_cast<std::size_t>(dim) * (dim + 1) / 2;
  auto unk = [&](int i, int j) {
    if (i > j) std::swap(i, j);
    return static_cast<std::size_t>(i) * dim - static_cast<std::size_t>(i) * (i - 1) / 2 + (j - i);
  };

  EchelonBasis ech(nunk);
  std::vector<Rat> row(nunk);
  for (const auto& J : gens) {
    // (J^T B + B J)_{xy} = 0; the left side is symmetric in (x,y)
    for (int x = 0; x < dim; ++x)
      for (int y = x; y < dim; ++y) {
        std::fill(row.begin(), row.end(), Rat(0));
        bool nonzero = false;
        for (int k = 0; k < dim; ++k) {
          if (J(k, x) != 0) { row[unk(k, y)] += J(k, x); nonzero = true; }
          if (J(k, y) != 0) { row[unk(x, k)] += J(k, y); nonzero = true; }
        }
        if (nonzero) ech.add_row(row);
      }
  }
  auto basis = ech.kernel();
  if (basis.empty()) return std::nullopt;
  const std::size_t m = basis.size();

  auto candidate = [&](const std::vector<long>& coeff) -> std::optional<Mat> {
    std::vector<Rat> v(nunk);
    for (std::size_t t = 0; t < m; ++t) {
      if (coeff[t] == 0) continue;
      for (std::size_t u = 0; u < nunk; ++u)
        if (basis[t][u] != 0) v[u] += Rat(coeff[t]) * basis[t][u];
    }
    Mat b = sym_from_vec(v, dim);
    if (determinant(b) != 0) return b;
    return std::nullopt;
  };

  // single basis elements first
  for (std::size_t t = 0; t < m; ++t) {
    std::vector<long> c(m, 0);
    c[t] = 1;
    if (auto b = candidate(c)) return b;
  }
  // then integer combinations with coefficients of increasing max-norm
  const long max_norm = 4;
  std::vector<long> c(m, 0);
  for (long h = 1; h <= max_norm; ++h) {
    std::fill(c.begin(), c.end(), -h);
    while (true) {
      long norm = 0;
      for (long x : c) norm = std::max(norm, std::abs(x));
      if (norm == h) {
        if (auto b = candidate(c)) return b;
      }
      std::size_t pos = m;
      while (pos > 0 && c[pos - 1] == h) c[--pos] = -h;
      if (pos == 0) break;
      ++c[pos - 1];
    }
  }
  return std::nullopt;
}

CliffordModuleRep minimal_admissible_module(Signature sig) {
  std::vector<Mat> gens = irreducible_generators(sig);
  int dim = static_cast<int>(gens.empty() ? 1 : gens[0].rows());

  auto doubled = [](const std::vector<Mat>& gs, bool twist) {
    std::vector<Mat> out;
    out.reserve(gs.size());
    for (const auto& g : gs) out.push_back(Mat::block_diag(g, twist ? -g : g));
    return out;
  };

  std::optional<Mat> form = find_admissible_form(gens, dim);
  if (!form) {
    auto d1 = doubled(gens, false);
    form = find_admissible_form(d1, 2 * dim);
    if (form) {
      gens = std::move(d1);
    } else {
      // the two irreducibles of a split algebra may only pair with each other;
      // the parity twist J -> -J realizes the second one
      auto d2 = doubled(gens, true);
      form = find_admissible_form(d2, 2 * dim);
      if (!form) throw std::logic_error("no admissible form after doubling for Cl(" +
                                        std::to_string(sig.r) + "," + std::to_string(sig.s) + ")");
      gens = std::move(d2);
    }
    dim *= 2;
  }

  // sign normalization: prefer the positive definite representative
  auto [p, q] = inertia(*form);
  if (p == 0 && q == dim) form = -*form;

  if (sig.total() > 1 && dim % 4 != 0)
    throw std::logic_error("admissible module dimension not divisible by 4");
  return {sig, dim, std::move(gens), std::move(*form)};
}

std::pair<int, int> module_form_signature(const CliffordModuleRep& rep) {
  return inertia(rep.form);
}

int minimal_admissible_dim(Signature sig) {
  static std::mutex mtx;
  static std::map<Signature, int> cache;
  {
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(sig);
    if (it != cache.end()) return it->second;
  }
  int dim = minimal_admissible_module(sig).module_dim;
  std::lock_guard<std::mutex> lock(mtx);
  cache.emplace(sig, dim);
  return dim;
}

int minimal_admissible_dim_for_center(int d2) {
  if (d2 < 1 || d2 > 8) throw std::invalid_argument("center dimension outside supported range 1..8");
  int best = -1;
  for (int r = 0; r <= d2; ++r) {
    int dim = minimal_admissible_dim({r, d2 - r});
    if (best < 0 || dim < best) best = dim;
  }
  return best;
}

}  // namespace ht
