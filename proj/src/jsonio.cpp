#include "ht/jsonio.hpp"

namespace ht {

json mat_to_json(const Mat& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rat_str(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Mat mat_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix JSON must be a non-empty array");
  Mat m(j.size(), j[0].size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (j[i].size() != m.cols()) throw std::invalid_argument("ragged matrix JSON");
    for (std::size_t k = 0; k < m.cols(); ++k) m(i, k) = rat_parse(j[i][k].get<std::string>());
  }
  return m;
}

json algebra_to_json(const GradedNilpotentAlgebra& n) {
  json j;
  j["degrees"]["-1"] = n.d1;
  if (n.d2 > 0) j["degrees"]["-2"] = n.d2;
  j["labels"]["-1"] = n.labels1;
  if (n.d2 > 0) j["labels"]["-2"] = n.labels2;
  json brackets = json::array();
  for (int a = 0; a < n.d1; ++a)
    for (int b = a + 1; b < n.d1; ++b) {
      json val = json::array();
      for (int k = 0; k < n.d2; ++k)
        if (n.bracket[k](a, b) != 0) val.push_back({"-2", k, rat_str(n.bracket[k](a, b))});
      if (!val.empty()) brackets.push_back({{"i", {"-1", a}}, {"j", {"-1", b}}, {"val", val}});
    }
  j["brackets"] = brackets;
  return j;
}

GradedNilpotentAlgebra algebra_from_json(const json& j) {
  if (!j.contains("degrees")) throw std::invalid_argument("missing degrees");
  for (auto& [key, val] : j["degrees"].items()) {
    (void)val;
    if (key != "-1" && key != "-2")
      throw UnsupportedDepth("only algebras of depth at most 2 are supported (got degree " + key + ")");
  }
  GradedNilpotentAlgebra n;
  n.d1 = j["degrees"].value("-1", 0);
  n.d2 = j["degrees"].value("-2", 0);
  if (n.d1 <= 0) throw std::invalid_argument("degree -1 must be present with positive dimension");
  n.bracket.assign(n.d2, Mat(n.d1, n.d1));
  if (j.contains("labels")) {
    if (j["labels"].contains("-1")) n.labels1 = j["labels"]["-1"].get<std::vector<std::string>>();
    if (j["labels"].contains("-2")) n.labels2 = j["labels"]["-2"].get<std::vector<std::string>>();
  }
  if (n.labels1.empty() || n.labels2.size() != static_cast<std::size_t>(n.d2)) n.default_labels();

  for (const auto& entry : j.value("brackets", json::array())) {
    auto deg_i = entry.at("i").at(0).get<std::string>();
    auto deg_j = entry.at("j").at(0).get<std::string>();
    if (deg_i != "-1" || deg_j != "-1")
      throw std::invalid_argument("brackets must pair degree -1 basis elements");
    int a = entry.at("i").at(1).get<int>();
    int b = entry.at("j").at(1).get<int>();
    if (a < 0 || a >= n.d1 || b < 0 || b >= n.d1 || a == b)
      throw std::invalid_argument("bracket index out of range");
    for (const auto& v : entry.at("val")) {
      if (v.at(0).get<std::string>() != "-2")
        throw std::invalid_argument("bracket values must lie in degree -2");
      int k = v.at(1).get<int>();
      if (k < 0 || k >= n.d2) throw std::invalid_argument("bracket value index out of range");
      Rat c = rat_parse(v.at(2).get<std::string>());
      if (n.bracket[k](a, b) != 0 && n.bracket[k](a, b) != c)
        throw std::invalid_argument("inconsistent duplicate bracket entry");
      n.bracket[k](a, b) = c;
      n.bracket[k](b, a) = -c;
    }
  }
  n.validate();
  return n;
}

json rep_to_json(const CliffordModuleRep& rep) {
  json j;
  j["r"] = rep.sig.r;
  j["s"] = rep.sig.s;
  j["dim"] = rep.module_dim;
  json gens = json::array();
  for (const auto& g : rep.generators) gens.push_back(mat_to_json(g));
  j["generators"] = gens;
  j["form"] = mat_to_json(rep.form);
  return j;
}

namespace {

std::string level_label(const ProlongationResult& res, int degree, int idx) {
  if (degree == -1) return res.input.labels1[idx];
  if (degree == -2) return res.input.labels2[idx];
  return "u" + std::to_string(degree) + "_" + std::to_string(idx + 1);
}

}  // namespace

json result_to_json(const ProlongationResult& res, const KillingReport* killing,
                    const IdentifyOutcome* ident) {
  json j;
  const int mu = res.depth();
  for (int p = -mu; p <= res.top; ++p) j["degrees"][std::to_string(p)] = res.dim(p);
  for (int p = -mu; p <= res.top; ++p) {
    json names = json::array();
    for (int i = 0; i < res.dim(p); ++i) names.push_back(level_label(res, p, i));
    j["labels"][std::to_string(p)] = names;
  }
  json brackets = json::array();
  for (int p = -mu; p <= res.top; ++p)
    for (int q = p; q <= res.top; ++q) {
      if (!res.bracket_defined(p, q)) continue;
      for (int i = 0; i < res.dim(p); ++i)
        for (int j2 = (p == q ? i + 1 : 0); j2 < res.dim(q); ++j2) {
          Sparse s = res.bracket(p, i, q, j2);
          if (s.empty()) continue;
          json val = json::array();
          for (const auto& [idx, c] : s) val.push_back({std::to_string(p + q), idx, rat_str(c)});
          brackets.push_back({{"i", {std::to_string(p), i}}, {"j", {std::to_string(q), j2}}, {"val", val}});
        }
    }
  j["brackets"] = brackets;
  j["growth_vector"] = res.growth_vector();
  j["terminated"] = res.terminated;
  if (killing) {
    j["killing"]["nondegenerate"] = killing->nondegenerate;
    j["killing"]["offdiagonal_zero"] = killing->offdiag_zero;
    json pr = json::array();
    for (auto [p, r] : killing->pair_ranks) pr.push_back({{"degree", p}, {"rank", r}});
    j["killing"]["pair_ranks"] = pr;
  }
  if (ident && ident->unique) {
    j["complex_type"]["family"] = std::string(1, static_cast<char>(ident->unique->type.family));
    j["complex_type"]["rank"] = ident->unique->type.rank;
    j["complex_type"]["sigma"] = ident->unique->sigma;
  }
  return j;
}

}  // namespace ht
