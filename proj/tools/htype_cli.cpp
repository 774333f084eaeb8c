#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "ht/expected_data.hpp"
#include "ht/jsonio.hpp"
#include "ht/tables.hpp"

using namespace ht;

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUnsupported = 3;

int default_max_degree() {
  if (const char* env = std::getenv("HTYPE_MAX_DEGREE")) {
    try {
      int v = std::stoi(env);
      if (v >= 0) return v;
    } catch (...) {
    }
    std::cerr << "warning: ignoring invalid HTYPE_MAX_DEGREE\n";
  }
  return 6;
}

struct RankRange {
  int lo = 0, hi = 0;
};

RankRange parse_rank_range(const std::string& s) {
  auto dots = s.find("..");
  RankRange r;
  if (dots == std::string::npos) {
    r.lo = r.hi = std::stoi(s);
  } else {
    r.lo = std::stoi(s.substr(0, dots));
    r.hi = std::stoi(s.substr(dots + 2));
  }
  if (r.lo < 1 || r.hi < r.lo) throw std::invalid_argument("bad rank range: " + s);
  return r;
}

Signature parse_signature(const std::string& s) {
  auto comma = s.find(',');
  if (comma == std::string::npos) throw std::invalid_argument("signature must be r,s");
  Signature sig{std::stoi(s.substr(0, comma)), std::stoi(s.substr(comma + 1))};
  if (sig.r < 0 || sig.s < 0 || sig.total() < 1) throw std::invalid_argument("bad signature");
  return sig;
}

void emit(const TableDoc& doc, const std::string& format) {
  if (format == "json")
    std::cout << doc.canonical.dump(2) << "\n";
  else if (format == "csv")
    std::cout << render_csv(doc);
  else
    std::cout << render_markdown(doc);
}

// ------------------------------------------------------------------ gradings

int cmd_gradings(const std::string& type_str, const std::string& rank_str, const std::string& format) {
  Family fam;
  try {
    if (type_str.size() != 1 || std::string("ABCDEFG").find(type_str[0]) == std::string::npos)
      throw std::invalid_argument("bad family");
    fam = static_cast<Family>(type_str[0]);
  } catch (const std::exception&) {
    std::cerr << "error: unknown type '" << type_str << "' (expected one of A B C D E F G)\n";
    return kExitUsage;
  }
  RankRange rr;
  try {
    rr = parse_rank_range(rank_str);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  TableDoc doc;
  doc.id = "gradings";
  doc.headers = {"type", "sigma", "d1 (formula)", "d2 (formula)", "d1 (roots)", "d2 (roots)"};
  json jr = json::array();
  for (int n = rr.lo; n <= rr.hi; ++n) {
    SimpleType t{fam, n};
    if (!valid_simple_type(t)) continue;
    if (fam == Family::A && n == 1) {
      std::cerr << "note: A1 has a single positive root and admits no depth-2 grading\n";
      continue;
    }
    auto rs = generate_positive_roots(t);
    for (const auto& spec : enumerate_two_gradings(t)) {
      auto by_roots = grading_dims_by_roots(rs, spec.sigma);
      std::string f1 = "-", f2 = "-";
      if (fam == Family::A || fam == Family::B || fam == Family::C || fam == Family::D) {
        auto cf = grading_dims_closed_form(spec);
        f1 = std::to_string(cf.d1);
        f2 = std::to_string(cf.d2);
      }
      doc.cells.push_back({t.name(), spec.sigma_label(), f1, f2, std::to_string(by_roots.d1),
                           std::to_string(by_roots.d2)});
      jr.push_back({{"type", t.name()}, {"sigma", spec.sigma}, {"d1", by_roots.d1}, {"d2", by_roots.d2}});
    }
  }
  doc.canonical = {{"rows", jr}};
  emit(doc, format);
  return 0;
}

// -------------------------------------------------------------------- screen

int cmd_screen(const std::string& type_str, const std::string& rank_str, const std::string& format) {
  Family fam;
  if (type_str.size() != 1 || std::string("ABCDEFG").find(type_str[0]) == std::string::npos) {
    std::cerr << "error: unknown type '" << type_str << "'\n";
    return kExitUsage;
  }
  fam = static_cast<Family>(type_str[0]);
  RankRange rr;
  try {
    rr = parse_rank_range(rank_str);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  TableDoc doc;
  doc.id = "screen";
  doc.headers = {"type", "sigma", "d1", "d2", "rho(d1)-1", "RHE", "4|d1", "candidate"};
  json jr = json::array();
  for (int n = rr.lo; n <= rr.hi; ++n) {
    SimpleType t{fam, n};
    if (!valid_simple_type(t) || (fam == Family::A && n == 1)) continue;
    for (const auto& spec : enumerate_two_gradings(t)) {
      auto v = screen_grading(spec);
      doc.cells.push_back({t.name(), spec.sigma_label(), std::to_string(v.dims.d1),
                           std::to_string(v.dims.d2), std::to_string(rho(v.dims.d1) - 1),
                           v.passes_rhe ? "yes" : "no", v.passes_div4 ? "yes" : "no",
                           v.candidate ? "yes" : "no"});
      jr.push_back({{"type", t.name()},
                    {"sigma", spec.sigma},
                    {"d1", v.dims.d1},
                    {"d2", v.dims.d2},
                    {"passes_rhe", v.passes_rhe},
                    {"passes_div4", v.passes_div4},
                    {"candidate", v.candidate}});
    }
  }
  doc.canonical = {{"rows", jr}};
  emit(doc, format);
  return 0;
}

// -------------------------------------------------------------------- tables

int cmd_tables(const std::string& id, bool long_runs, const std::string& format) {
  ProgressFn progress = [](int d, int k) { std::cerr << "  level " << d << ": dim " << k << "\n"; };
  if (id == "2") emit(make_table2(), format);
  else if (id == "3") emit(make_table3(), format);
  else if (id == "3a") emit(make_table3a(), format);
  else if (id == "4a") emit(make_table4a(), format);
  else if (id == "5") emit(make_table5(), format);
  else if (id == "8") emit(make_table8(), format);
  else if (id == "9") emit(make_table9(long_runs, long_runs ? progress : ProgressFn{}), format);
  else {
    std::cerr << "error: unknown table id '" << id << "' (expected 2, 3, 3a, 4a, 5, 8 or 9)\n";
    return kExitUsage;
  }
  return 0;
}

// --------------------------------------------------------------------- htype

int cmd_htype(const std::string& sig_str, const std::string& format) {
  Signature sig;
  try {
    sig = parse_signature(sig_str);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  auto rep = minimal_admissible_module(sig);
  auto [algebra, metric] = build_htype(rep);
  json j;
  j["clifford"] = rep_to_json(rep);
  j["algebra"] = algebra_to_json(algebra);
  j["metric"]["center"] = mat_to_json(metric.form_center);
  j["metric"]["module"] = mat_to_json(metric.form_module);
  auto [p, q] = module_form_signature(rep);
  j["module_form_signature"] = {p, q};
  if (format == "md") {
    std::cout << "pseudo H-type algebra n^{" << sig.r << "," << sig.s << "}: dim n_-1 = "
              << algebra.d1 << ", dim n_-2 = " << algebra.d2 << ", module form signature ("
              << p << "," << q << ")\n";
  } else {
    std::cout << j.dump(2) << "\n";
  }
  return 0;
}

// ------------------------------------------------------------------- prolong

int cmd_prolong(const std::string& sig_str, const std::string& file, int max_degree,
                const std::string& format) {
  GradedNilpotentAlgebra algebra;
  try {
    if (!sig_str.empty()) {
      Signature sig = parse_signature(sig_str);
      auto rep = minimal_admissible_module(sig);
      algebra = build_htype(rep).first;
    } else {
      std::ifstream in(file);
      if (!in) {
        std::cerr << "error: cannot open " << file << "\n";
        return kExitUsage;
      }
      json j;
      try {
        j = json::parse(in);
      } catch (const json::parse_error& e) {
        std::cerr << "error: malformed JSON: " << e.what() << "\n";
        return kExitUsage;
      }
      algebra = algebra_from_json(j);
    }
  } catch (const UnsupportedDepth& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUnsupported;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  ProgressFn progress = [](int d, int k) { std::cerr << "level " << d << ": dim " << k << "\n"; };
  auto res = prolong(algebra, max_degree, progress);
  std::optional<KillingReport> killing;
  IdentifyOutcome ident;
  if (res.terminated) {
    killing = killing_form(res);
    if (killing->nondegenerate) ident = identify_complex_type(res);
  }
  json out = result_to_json(res, killing ? &*killing : nullptr, &ident);
  if (format == "md") {
    std::cout << "growth vector: (";
    auto g = res.growth_vector();
    for (std::size_t k = 0; k < g.size(); ++k) std::cout << (k ? "," : "") << g[k];
    std::cout << (res.terminated ? ")" : ",...)") << "\n";
    if (killing) std::cout << "killing form: " << (killing->nondegenerate ? "non-degenerate" : "degenerate") << "\n";
    if (ident.unique)
      std::cout << "complex type: " << ident.unique->type.name() << " "
                << GradingSpec{ident.unique->type, ident.unique->sigma}.sigma_label() << "\n";
    if (res.terminated) {
      auto cert = simplicity_certificate(res);
      std::cout << "certificate: " << cert.text << "\n";
    }
  } else {
    std::cout << out.dump(2) << "\n";
  }
  return 0;
}

// ----------------------------------------------------------------- reproduce

int cmd_reproduce(const std::string& id, bool long_runs, const std::string& format) {
  std::string key = "table" + id;
  auto it = embedded::all().find(key);
  if (it == embedded::all().end()) {
    std::cerr << "error: unknown table id '" << id << "' (expected 2, 3, 3a, 4a, 5, 8 or 9)\n";
    return kExitUsage;
  }
  json expected = json::parse(it->second);

  ProgressFn progress;
  if (long_runs) progress = [](int d, int k) { std::cerr << "  level " << d << ": dim " << k << "\n"; };
  TableDoc doc;
  if (id == "2") doc = make_table2();
  else if (id == "3") doc = make_table3();
  else if (id == "3a") doc = make_table3a();
  else if (id == "4a") doc = make_table4a();
  else if (id == "5") doc = make_table5();
  else if (id == "8") doc = make_table8(progress);
  else doc = make_table9(long_runs, progress);

  if (id == "9" && !long_runs) {
    // without --long only the default rows are regenerated
    json filtered = json::array();
    for (const auto& row : expected["rows"])
      if (!row.value("long", false)) filtered.push_back(row);
    expected["rows"] = filtered;
  }

  emit(doc, format);
  auto diffs = diff_json(expected, doc.canonical);
  if (diffs.empty()) {
    std::cerr << "table " << id << ": exact match\n";
    return 0;
  }
  std::cerr << "table " << id << ": " << diffs.size() << " difference(s)\n";
  for (const auto& d : diffs) std::cerr << "  " << d << "\n";
  return kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic toolkit for depth-2 gradings, pseudo H-type algebras and Tanaka prolongations"};
  app.require_subcommand(1);

  std::string type_str, rank_str = "2..8", format = "md", table_id, sig_str, file_str;
  bool long_runs = false;
  int max_degree = default_max_degree();

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format: md, csv or json")
        ->check(CLI::IsMember({"md", "csv", "json"}));
  };

  auto* gradings = app.add_subcommand("gradings", "enumerate depth-2 gradings with dimensions");
  gradings->add_option("--type", type_str, "family letter A..G")->required();
  gradings->add_option("--rank", rank_str, "rank or range lo..hi");
  add_format(gradings);

  auto* screen = app.add_subcommand("screen", "screen gradings against the RHE condition");
  screen->add_option("--type", type_str, "family letter A..G")->required();
  screen->add_option("--rank", rank_str, "rank or range lo..hi");
  add_format(screen);

  auto* tables = app.add_subcommand("tables", "emit one of the reference tables");
  tables->add_option("id", table_id, "table id: 2, 3, 3a, 4a, 5, 8, 9")->required();
  tables->add_flag("--long", long_runs, "include the center-dimension 7 and 8 rows of table 9");
  add_format(tables);

  auto* htype_cmd = app.add_subcommand("htype", "build the pseudo H-type algebra n^{r,s}");
  htype_cmd->add_option("--signature", sig_str, "center signature r,s")->required();
  add_format(htype_cmd);

  auto* prolong_cmd = app.add_subcommand("prolong", "compute the Tanaka prolongation");
  prolong_cmd->add_option("--signature", sig_str, "center signature r,s");
  prolong_cmd->add_option("--file", file_str, "graded algebra JSON file");
  prolong_cmd->add_option("--max-degree", max_degree, "highest level to compute");
  add_format(prolong_cmd);

  auto* reproduce = app.add_subcommand("reproduce", "regenerate a table and diff it against the reference");
  reproduce->add_option("id", table_id, "table id: 2, 3, 3a, 4a, 5, 8, 9")->required();
  reproduce->add_flag("--long", long_runs, "also run the center-dimension 7 and 8 rows of table 9");
  add_format(reproduce);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (gradings->parsed()) return cmd_gradings(type_str, rank_str, format);
    if (screen->parsed()) return cmd_screen(type_str, rank_str, format);
    if (tables->parsed()) return cmd_tables(table_id, long_runs, format);
    if (htype_cmd->parsed()) return cmd_htype(sig_str, format);
    if (prolong_cmd->parsed()) {
      if (sig_str.empty() == file_str.empty()) {
        std::cerr << "error: provide exactly one of --signature or --file\n";
        return kExitUsage;
      }
      if (max_degree < 0) {
        std::cerr << "error: max-degree must be non-negative\n";
        return kExitUsage;
      }
      return cmd_prolong(sig_str, file_str, max_degree, format);
    }
    if (reproduce->parsed()) return cmd_reproduce(table_id, long_runs, format);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
