#include "ht/rhe.hpp"

#include <numeric>
#include <stdexcept>

#include "ht/clifford.hpp"

namespace ht {

RhoDecomposition rho_decompose(long long n) {
  if (n < 1) throw std::invalid_argument("rho is defined for positive integers");
  RhoDecomposition d;
  d.n = n;
  int v = 0;
  long long u = n;
  while (u % 2 == 0) { u /= 2; ++v; }
  d.odd_part = u;
  d.alpha = v / 4;
  d.beta = v % 4;
  d.rho = 8LL * d.alpha + (1LL << d.beta);
  return d;
}

long long rho(long long n) { return rho_decompose(n).rho; }

ScreenVerdict screen_dims(const GradingSpec& spec, GradingDims dims) {
  ScreenVerdict v;
  v.spec = spec;
  v.dims = dims;
  v.passes_rhe = dims.d2 <= rho(dims.d1) - 1;
  v.passes_div4 = dims.d1 % 4 == 0;
  v.candidate = v.passes_rhe && (dims.d2 <= 1 || v.passes_div4);
  return v;
}

ScreenVerdict screen_grading(const GradingSpec& spec) {
  GradingDims dims;
  switch (spec.type.family) {
    case Family::A:
    case Family::B:
    case Family::C:
    case Family::D:
      dims = grading_dims_closed_form(spec);
      break;
    default:
      dims = grading_dims_by_roots(spec);
      break;
  }
  return screen_dims(spec, dims);
}

bool an_divisibility_excluded(int n, int i, int j) {
  if (!(1 <= i && i < j && j <= n)) throw std::invalid_argument("bad sigma {i,j} for A_n");
  int diff = j - i;
  if (n % 2 == 1 && diff % 2 == 1) return true;
  if (n % 2 == 0 && diff % 4 == 2) return true;
  return false;
}

std::vector<AnFamily> search_an(int d2, int n_max) {
  if (d2 <= 1) throw std::invalid_argument("search requires a center of dimension > 1");
  const int m = minimal_admissible_dim_for_center(d2);
  std::vector<AnFamily> out;
  for (int i = 1; i * i <= d2; ++i) {
    if (d2 % i != 0) continue;  // the divisor pair (i, d2/i) with i <= d2/i
    AnFamily f;
    f.d2 = d2;
    f.i = i;
    f.j_offset = d2 / i;  // j = n + 1 - d2/i
    f.c = i + d2 / i;
    f.min_module = m;
    // d1 = c (n + 1 - c) must be a positive multiple of m
    int g = std::gcd(f.c, m);
    f.modulus = m / g;
    f.residue = ((f.c - 1) % f.modulus + f.modulus) % f.modulus;
    f.n_min = f.c;  // n + 1 - c >= 1
    for (int n = f.n_min; n <= n_max; ++n) {
      if (n % f.modulus != f.residue) continue;
      int j = n + 1 - f.j_offset;
      if (!(i < j && j <= n + 1 - i)) continue;
      f.instances.push_back(n);
    }
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<AnInstance> search_an_instances(int d2, int n_max) {
  std::vector<AnInstance> out;
  for (const auto& f : search_an(d2, n_max))
    for (int n : f.instances) {
      int j = n + 1 - f.j_offset;
      out.push_back({n, f.i, j, f.c * (n + 1 - f.c)});
    }
  return out;
}

std::vector<BnTraceRow> verify_bn_empty(int n_max) {
  if (n_max < 2) throw std::invalid_argument("n_max must be at least 2");
  std::vector<BnTraceRow> rows;
  for (int n = 2; n <= n_max; ++n)
    for (int i = 2; i <= n; ++i) {
      GradingDims d = grading_dims_closed_form({{Family::B, n}, {i}});
      auto v = screen_dims({{Family::B, n}, {i}}, d);
      rows.push_back({n, i, d.d1, d.d2, rho(d.d1), v.candidate && d.d2 > 1});
    }
  return rows;
}

CnTable build_cn_table(const std::vector<int>& i_columns, const std::vector<int>& d1_rows) {
  CnTable t;
  t.columns = i_columns;
  for (int i : i_columns) t.d2_row.push_back(i * (i + 1) / 2);
  t.d1_rows = d1_rows;
  for (int d1 : d1_rows) {
    std::vector<CnCell> row;
    for (int i : i_columns) {
      CnCell cell;
      int d2 = i * (i + 1) / 2;
      if (d1 % (2 * i) == 0 && d2 < d1) {
        cell.shown = true;
        cell.n = i + d1 / (2 * i);
        cell.bold = d2 <= rho(d1) - 1;
      }
      row.push_back(cell);
    }
    t.cells.push_back(std::move(row));
  }
  return t;
}

CnTable build_cn_table_default() {
  std::vector<int> cols;
  for (int i = 2; i <= 10; ++i) cols.push_back(i);
  std::vector<int> rows;
  for (int d1 = 4; d1 <= 64; d1 += 4) rows.push_back(d1);
  rows.push_back(640);
  return build_cn_table(cols, rows);
}

CnClassification cn_structural_filter(int n, int i) {
  if (!(1 <= i && i <= n - 1)) throw std::invalid_argument("sigma_i needs 1 <= i <= n-1");
  CnClassification c;
  c.n = n;
  c.i = i;
  c.d1 = 2 * i * (n - i);
  c.d2 = i * (i + 1) / 2;

  auto val2 = [](int x) {
    int v = 0;
    while (x % 2 == 0) { x /= 2; ++v; }
    return v;
  };
  bool rhe_ok = c.d2 <= rho(c.d1) - 1;

  if (i == 1) {
    c.admissible = true;
    c.clause = "contact column: center of dimension 1 (Heisenberg)";
    return c;
  }

  if ((n - i) % 2 == 1) {
    // odd gap: only i = 2 survives (d2 = 3)
    if (i == 2) {
      c.admissible = true;
      c.clause = "odd gap, i = 2: center of dimension 3, d1 divisible by 4";
    } else if (i % 2 == 1) {
      c.admissible = false;
      c.clause = "odd gap, odd i: d1 = 2 i (n-i) is not divisible by 4";
    } else if (val2(i) == 1) {
      c.admissible = false;
      c.clause = "odd gap, i = 2u with u > 1: d2 = u(2u+1) > 3 = rho(d1) - 1";
    } else {
      c.admissible = false;
      c.clause = "odd gap, 4 | i: d2 >= rho(d1)";
    }
    return c;
  }

  // even gap: i = 2 always works; otherwise the 2-adic valuations of n and i
  // (shifted by one when i is odd) must agree, and the surviving pattern is
  // decided by the RHE inequality
  if (i == 2) {
    c.admissible = true;
    c.clause = "even gap, i = 2: center of dimension 3";
  } else if (i % 2 == 1) {
    if (val2(n - 1) != val2(i - 1)) {
      c.admissible = false;
      c.clause = "even gap, odd i: valuations of n-1 and i-1 differ, d2 exceeds rho(d1) - 1";
    } else {
      c.admissible = rhe_ok;
      c.clause = std::string("even gap, pattern n = v 2^r + 1, i = u 2^r + 1: RHE ") +
                 (rhe_ok ? "holds" : "fails");
    }
  } else {
    if (val2(n) != val2(i)) {
      c.admissible = false;
      c.clause = "even gap, even i: valuations of n and i differ, d2 exceeds rho(d1) - 1";
    } else {
      c.admissible = rhe_ok;
      c.clause = std::string("even gap, pattern n = v 2^r, i = u 2^r: RHE ") +
                 (rhe_ok ? "holds" : "fails");
    }
  }
  return c;
}

std::vector<DnSurvivor> dn_pair_choice_search(int n_max) {
  if (n_max < 4) throw std::invalid_argument("n_max must be at least 4");
  std::vector<DnSurvivor> out;
  for (int n = 4; n <= n_max; ++n) {
    for (auto sigma : {std::vector<int>{1, n}, std::vector<int>{n - 1, n}}) {
      GradingSpec spec{{Family::D, n}, sigma};
      auto v = screen_grading(spec);
      if (v.candidate && v.dims.d2 > 1) out.push_back({n, spec, v.dims});
    }
  }
  return out;
}

std::vector<ScreenVerdict> exceptional_screen() {
  std::vector<ScreenVerdict> out;
  for (SimpleType t : {SimpleType{Family::E, 6}, SimpleType{Family::E, 7}, SimpleType{Family::E, 8},
                       SimpleType{Family::F, 4}, SimpleType{Family::G, 2}}) {
    auto rs = generate_positive_roots(t);
    for (const auto& spec : enumerate_two_gradings(t))
      out.push_back(screen_dims(spec, grading_dims_by_roots(rs, spec.sigma)));
  }
  return out;
}

}  // namespace ht
