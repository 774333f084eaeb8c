#include "ht/rootsys.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

namespace ht {

bool valid_simple_type(SimpleType t) {
  switch (t.family) {
    case Family::A: return t.rank >= 1;
    case Family::B: return t.rank >= 2;
    case Family::C: return t.rank >= 3;
    case Family::D: return t.rank >= 4;
    case Family::E: return t.rank >= 6 && t.rank <= 8;
    case Family::F: return t.rank == 4;
    case Family::G: return t.rank == 2;
  }
  return false;
}

SimpleType parse_simple_type(const std::string& s) {
  if (s.size() < 2 || std::string("ABCDEFG").find(s[0]) == std::string::npos)
    throw std::invalid_argument("bad type string: " + s);
  int rank = std::stoi(s.substr(1));
  SimpleType t{static_cast<Family>(s[0]), rank};
  if (!valid_simple_type(t)) throw std::invalid_argument("invalid rank for family: " + s);
  return t;
}

std::vector<std::vector<int>> cartan_matrix(SimpleType t) {
  if (!valid_simple_type(t)) throw std::invalid_argument("invalid simple type " + t.name());
  const int n = t.rank;
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto link = [&](int i, int j) { a[i][j] = -1; a[j][i] = -1; };  // 0-based
  switch (t.family) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case Family::B:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      a[n - 1][n - 2] = -2;  // alpha_n short
      break;
    case Family::C:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      a[n - 2][n - 1] = -2;  // alpha_n long
      break;
    case Family::D:
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case Family::E:
      // Bourbaki: chain 1-3-4-5-6(-7)(-8), node 2 attached to 4
      link(0, 2);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
      link(1, 3);
      break;
    case Family::F:
      link(0, 1);
      link(1, 2);
      link(2, 3);
      a[2][1] = -2;  // alpha_3, alpha_4 short
      break;
    case Family::G:
      a[0][1] = -3;  // alpha_1 short
      a[1][0] = -1;
      break;
  }
  return a;
}

namespace {

int classical_positive_root_count(SimpleType t) {
  const int n = t.rank;
  switch (t.family) {
    case Family::A: return n * (n + 1) / 2;
    case Family::B:
    case Family::C: return n * n;
    case Family::D: return n * (n - 1);
    case Family::G: return 6;
    case Family::F: return 24;
    case Family::E: return t.rank == 6 ? 36 : (t.rank == 7 ? 63 : 120);
  }
  return -1;
}

int height(const std::vector<int>& root) {
  int h = 0;
  for (int c : root) h += c;
  return h;
}

}  // namespace

RootSystem generate_positive_roots(SimpleType t) {
  if (!valid_simple_type(t)) throw std::invalid_argument("invalid simple type " + t.name());
  const int n = t.rank;
  auto cartan = cartan_matrix(t);

  std::set<std::vector<int>> roots;
  std::vector<std::vector<int>> layer;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    roots.insert(e);
    layer.push_back(e);
  }

  // closure by root strings: alpha + alpha_i is a root iff p - <alpha, alpha_i^v> > 0,
  // where p is the length of the descending string alpha - k alpha_i
  while (!layer.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& alpha : layer) {
      for (int i = 0; i < n; ++i) {
        int pairing = 0;
        for (int j = 0; j < n; ++j) pairing += cartan[i][j] * alpha[j];
        int p = 0;
        std::vector<int> down = alpha;
        while (true) {
          down[i] -= 1;
          bool nonneg = std::all_of(down.begin(), down.end(), [](int c) { return c >= 0; });
          if (!nonneg || height(down) == 0 || !roots.count(down)) break;
          ++p;
        }
        if (p - pairing > 0) {
          std::vector<int> up = alpha;
          up[i] += 1;
          if (roots.insert(up).second) next.push_back(up);
        }
      }
    }
    layer = std::move(next);
  }

  RootSystem rs;
  rs.type = t;
  rs.cartan = std::move(cartan);
  rs.positive_roots.assign(roots.begin(), roots.end());
  std::sort(rs.positive_roots.begin(), rs.positive_roots.end(), [](const auto& a, const auto& b) {
    int ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return a < b;
  });
  const int expected = classical_positive_root_count(t);
  if (static_cast<int>(rs.positive_roots.size()) != expected)
    throw std::logic_error("root generation for " + t.name() + " produced " +
                           std::to_string(rs.positive_roots.size()) + " roots, expected " +
                           std::to_string(expected));
  return rs;
}

std::string GradingSpec::sigma_label() const {
  std::string s = "s";
  for (std::size_t k = 0; k < sigma.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(sigma[k]);
  }
  return s;
}

int sigma_height(const std::vector<int>& root, const std::vector<int>& sigma) {
  int h = 0;
  for (int i : sigma) h += root[i - 1];
  return h;
}

GradingDims grading_dims_by_roots(const RootSystem& rs, const std::vector<int>& sigma) {
  for (int i : sigma)
    if (i < 1 || i > rs.type.rank) throw std::invalid_argument("sigma index out of range");
  if (sigma_height(rs.highest_root(), sigma) != 2)
    throw NotTwoGrading(rs.type.name() + " with sigma " + GradingSpec{rs.type, sigma}.sigma_label() +
                        " is not a depth-2 grading");
  GradingDims d;
  for (const auto& alpha : rs.positive_roots) {
    int h = sigma_height(alpha, sigma);
    if (h == 1) ++d.d1;
    else if (h == 2) ++d.d2;
  }
  return d;
}

GradingDims grading_dims_by_roots(const GradingSpec& spec) {
  return grading_dims_by_roots(generate_positive_roots(spec.type), spec.sigma);
}

GradingDims grading_dims_closed_form(const GradingSpec& spec) {
  const int n = spec.type.rank;
  const auto& s = spec.sigma;
  switch (spec.type.family) {
    case Family::A: {
      if (s.size() != 2) throw std::invalid_argument("A_n grading needs sigma {i,j}");
      int i = s[0], j = s[1];
      if (!(1 <= i && i < j && j <= n)) throw std::invalid_argument("bad sigma for A_n");
      return {(n + 1 - (j - i)) * (j - i), i * (n + 1 - j)};
    }
    case Family::B: {
      if (s.size() != 1 || s[0] < 2 || s[0] > n) throw std::invalid_argument("bad sigma for B_n");
      int i = s[0];
      return {i * (2 * (n - i) + 1), i * (i - 1) / 2};
    }
    case Family::C: {
      if (s.size() != 1 || s[0] < 1 || s[0] > n - 1) throw std::invalid_argument("bad sigma for C_n");
      int i = s[0];
      return {2 * i * (n - i), i * (i + 1) / 2};
    }
    case Family::D: {
      if (s.size() == 1) {
        int i = s[0];
        if (i < 2 || i > n - 2) throw std::invalid_argument("bad sigma for D_n");
        return {2 * i * (n - i), i * (i - 1) / 2};
      }
      if (s.size() == 2 && s[0] == 1 && s[1] == n) return {n * (n - 1) / 2, n - 1};
      if (s.size() == 2 && s[0] == n - 1 && s[1] == n)
        return {2 * (n - 1), (n - 1) * (n - 2) / 2};
      throw std::invalid_argument("bad sigma for D_n");
    }
    default:
      throw UnsupportedFamily("closed-form dimensions cover classical families only; use root counting for " +
                              spec.type.name());
  }
}

namespace {

// diagram automorphisms used to pick one grading per isomorphism orbit
std::vector<int> canonical_sigma(SimpleType t, std::vector<int> sigma) {
  const int n = t.rank;
  std::sort(sigma.begin(), sigma.end());
  if (t.family == Family::A) {
    std::vector<int> refl;
    for (int i : sigma) refl.push_back(n + 1 - i);
    std::sort(refl.begin(), refl.end());
    return std::min(sigma, refl);
  }
  if (t.family == Family::D) {
    // swap alpha_{n-1} <-> alpha_n; keep the representative containing alpha_n
    std::vector<int> sw;
    for (int i : sigma) sw.push_back(i == n ? n - 1 : (i == n - 1 ? n : i));
    std::sort(sw.begin(), sw.end());
    auto score = [&](const std::vector<int>& v) {
      return std::count(v.begin(), v.end(), n) > 0 ? std::make_pair(0, v) : std::make_pair(1, v);
    };
    return std::min(score(sigma), score(sw)).second;
  }
  if (t.family == Family::E && n == 6) {
    // flip 1<->6, 3<->5
    std::vector<int> fl;
    for (int i : sigma) fl.push_back(i == 1 ? 6 : (i == 6 ? 1 : (i == 3 ? 5 : (i == 5 ? 3 : i))));
    std::sort(fl.begin(), fl.end());
    return std::min(sigma, fl);
  }
  return sigma;
}

}  // namespace

std::vector<GradingSpec> enumerate_two_gradings(SimpleType t) {
  if (!valid_simple_type(t)) throw std::invalid_argument("invalid simple type " + t.name());
  auto rs = generate_positive_roots(t);
  const auto& theta = rs.highest_root();
  const int n = t.rank;

  std::set<std::vector<int>> reps;
  for (int i = 1; i <= n; ++i)
    if (theta[i - 1] == 2) reps.insert(canonical_sigma(t, {i}));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (theta[i - 1] == 1 && theta[j - 1] == 1) reps.insert(canonical_sigma(t, {i, j}));

  std::vector<GradingSpec> out;
  for (const auto& s : reps) out.push_back({t, s});
  std::sort(out.begin(), out.end(), [](const GradingSpec& a, const GradingSpec& b) {
    if (a.sigma.size() != b.sigma.size()) return a.sigma.size() < b.sigma.size();
    return a.sigma < b.sigma;
  });
  return out;
}

ContactGrading contact_grading(SimpleType t) {
  if (!valid_simple_type(t)) throw std::invalid_argument("invalid simple type " + t.name());
  const int n = t.rank;
  switch (t.family) {
    case Family::A:
      if (n < 2) throw std::invalid_argument("A_1 admits no depth-2 grading");
      return {t, {1, n}, 2 * n - 2};
    case Family::B: return {t, {2}, 4 * n - 6};
    case Family::C: return {t, {1}, 2 * n - 2};
    case Family::D: return {t, {2}, 4 * n - 8};
    case Family::E:
      if (n == 6) return {t, {2}, 20};
      if (n == 7) return {t, {1}, 32};
      return {t, {8}, 56};
    case Family::F: return {t, {1}, 14};
    case Family::G: return {t, {2}, 4};
  }
  throw std::logic_error("unreachable");
}

int algebra_dim(SimpleType t) {
  const int n = t.rank;
  switch (t.family) {
    case Family::A: return (n + 1) * (n + 1) - 1;
    case Family::B:
    case Family::C: return n * (2 * n + 1);
    case Family::D: return n * (2 * n - 1);
    case Family::G: return 14;
    case Family::F: return 52;
    case Family::E: return n == 6 ? 78 : (n == 7 ? 133 : 248);
  }
  return -1;
}

std::vector<GradedSimpleEntry> graded_simple_catalogue(int max_rank) {
  std::vector<SimpleType> types;
  for (int n = 2; n <= max_rank; ++n) types.push_back({Family::A, n});
  for (int n = 2; n <= max_rank; ++n) types.push_back({Family::B, n});
  for (int n = 3; n <= max_rank; ++n) types.push_back({Family::C, n});
  for (int n = 4; n <= max_rank; ++n) types.push_back({Family::D, n});
  types.push_back({Family::G, 2});
  types.push_back({Family::F, 4});
  for (int n = 6; n <= std::max(max_rank, 8); ++n)
    if (n <= 8) types.push_back({Family::E, n});

  std::vector<GradedSimpleEntry> out;
  for (auto t : types) {
    auto rs = generate_positive_roots(t);
    for (auto& spec : enumerate_two_gradings(t)) {
      GradedSimpleEntry e{spec, grading_dims_by_roots(rs, spec.sigma), algebra_dim(t)};
      out.push_back(std::move(e));
    }
  }
  return out;
}

}  // namespace ht
