/*
   Copyright 2026 The polysnake authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "polysnake/bijection.hpp"
#include "polysnake/enumerate.hpp"
#include "polysnake/gf_catalog.hpp"
#include "polysnake/inscribed_gf.hpp"
#include "polysnake/maximal.hpp"
#include "polysnake/verify.hpp"

namespace {

using nlohmann::json;
using namespace polysnake;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitBudget = 2;
constexpr int kExitUsage = 3;

int default_workers() {
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

json output_header(const std::string& command, json params) {
  json j;
  j["schema"] = 1;
  j["command"] = command;
  j["params"] = std::move(params);
  return j;
}

RationalGF gf_by_name(const std::string& name) {
  if (name == "sne") return gf_sne();
  if (name == "pds2d") return gf_pds_2d();
  if (name == "pds3d") return gf_pds_3d();
  auto colon = name.find(':');
  if (colon != std::string::npos) {
    std::string base = name.substr(0, colon);
    int n_dim = std::stoi(name.substr(colon + 1));
    if (base == "pdsnd") return gf_pds_nd({n_dim});
    if (base == "pdsx1") return gf_pds_x1plus({n_dim});
  }
  throw CLI::ValidationError(
      "--name", "expected one of sne|pds2d|pds3d|pdsnd:N|pdsx1:N, got " + name);
}

// Reproducibility header for the text formats; JSON carries params itself.
void print_text_header(const std::string& command, const json& params) {
  std::cout << "# polysnake schema=1 " << command << " " << params.dump() << "\n";
}

int cmd_gf_expand(const std::string& name, int order, const std::string& format) {
  auto coeffs = expand_coefficients(gf_by_name(name), order);
  if (format == "csv") {
    print_text_header("gf expand", {{"name", name}, {"order", order}});
    std::cout << "n,coefficient\n";
    for (std::size_t n = 0; n < coeffs.size(); ++n)
      std::cout << n << "," << coeffs[n].str() << "\n";
  } else if (format == "table") {
    print_text_header("gf expand", {{"name", name}, {"order", order}});
    for (std::size_t n = 0; n < coeffs.size(); ++n)
      std::cout << "q^" << n << "\t" << coeffs[n].str() << "\n";
  } else {
    json j = output_header("gf expand", {{"name", name}, {"order", order}});
    json list = json::array();
    for (const BigInt& c : coeffs) list.push_back(c.str());
    j["coefficients"] = std::move(list);
    std::cout << j.dump(2) << "\n";
  }
  return kExitOk;
}

int cmd_enumerate(const std::string& klass, int dim, int n,
                  const std::string& inscribed, const std::string& emit_path,
                  int workers) {
  EnumOptions opts;
  opts.workers = workers;

  int want_b = 0, want_k = 0;
  if (!inscribed.empty()) {
    auto x = inscribed.find('x');
    if (x == std::string::npos)
      throw CLI::ValidationError("--inscribed", "expected BxK, e.g. 4x3");
    want_b = std::stoi(inscribed.substr(0, x));
    want_k = std::stoi(inscribed.substr(x + 1));
  }

  std::ofstream emit;
  if (!emit_path.empty()) {
    emit.open(emit_path);
    if (!emit) throw std::runtime_error("cannot open " + emit_path);
  }

  std::uint64_t count = 0;
  for_each_snake(dim, n, opts, [&](const CellSet& s) {
    if (klass == "pds" && !is_pds_shape(s)) return;
    if (klass == "kiss-free" && !is_kiss_free(s)) return;
    StatTriple st = classify_inscribed(s);
    if (want_b != 0 && (st.b != want_b || st.k != want_k)) return;
    ++count;
    if (emit.is_open()) {
      json line = json::parse(s.to_json());
      line["n"] = st.n;
      line["b"] = st.b;
      line["k"] = st.k;
      emit << line.dump() << "\n";
    }
  });

  json j = output_header("enumerate", {{"class", klass},
                                       {"dim", dim},
                                       {"n", n},
                                       {"inscribed", inscribed},
                                       {"workers", workers}});
  j["count"] = count;
  std::cout << j.dump(2) << "\n";
  return kExitOk;
}

int cmd_inscribed(int b, int order, bool verify, const std::string& format,
                  int workers) {
  TruncatedSeries series = gf_inscribed_pds(b, order).series;
  if (verify) {
    EnumOptions opts;
    opts.workers = workers;
    CountTable oracle = inscribed_pds_table(order, opts);
    for (int k = 1; k <= order; ++k) {
      for (int n = 0; n <= order; ++n) {
        auto it = oracle.find(StatKey{b, k, n, 0});
        BigInt expected(it == oracle.end() ? 0 : it->second);
        if (series.coeff_tq(k, n) != expected) {
          std::cout << "mismatch at (b,k,n)=(" << b << "," << k << "," << n
                    << "): enumerated " << expected.str() << ", series "
                    << series.coeff_tq(k, n).str() << "\n";
          return kExitMismatch;
        }
      }
    }
    std::cout << "verified width " << b << " against enumeration up to order "
              << order << "\n";
    return kExitOk;
  }

  if (format == "csv") {
    print_text_header("inscribed", {{"b", b}, {"order", order}});
    std::cout << "k,n,count\n";
    for (int n = 0; n <= order; ++n)
      for (int k = 0; k <= n; ++k)
        if (series.coeff_tq(k, n) != 0)
          std::cout << k << "," << n << "," << series.coeff_tq(k, n).str() << "\n";
  } else {
    json j = output_header("inscribed", {{"b", b}, {"order", order}});
    json entries = json::array();
    for (int n = 0; n <= order; ++n)
      for (int k = 0; k <= n; ++k)
        if (series.coeff_tq(k, n) != 0)
          entries.push_back({{"k", k}, {"n", n}, {"count", series.coeff_tq(k, n).str()}});
    j["coefficients"] = std::move(entries);
    std::cout << j.dump(2) << "\n";
  }
  return kExitOk;
}

int cmd_bijection(const std::string& rows_arg, const std::string& inverse_path) {
  if (rows_arg.empty() && inverse_path.empty())
    throw CLI::ValidationError("bijection", "provide --rows or --inverse");
  if (!inverse_path.empty()) {
    std::ifstream in(inverse_path);
    if (!in) throw std::runtime_error("cannot open " + inverse_path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    CellSet bubble = CellSet::from_json(buffer.str());
    Bargraph g = bubble_to_bargraph(bubble);
    json j = output_header("bijection", {{"inverse", inverse_path}});
    j["bargraph"] = {{"rows", g.rows}};
    j["valid"] = true;
    std::cout << j.dump(2) << "\n";
    return kExitOk;
  }

  Bargraph g;
  std::stringstream ss(rows_arg);
  std::string item;
  while (std::getline(ss, item, ',')) g.rows.push_back(std::stoi(item));
  CellSet bubble = bargraph_to_bubble(g);
  Bargraph back = bubble_to_bargraph(bubble);

  json j = output_header("bijection", {{"rows", g.rows}});
  j["bubble"] = json::parse(bubble.to_json());
  j["bubble_width"] = classify_inscribed(bubble).b;
  j["valid"] = is_bubble(bubble) && back == g;
  std::cout << j.dump(2) << "\n";
  return j["valid"].get<bool>() ? kExitOk : kExitMismatch;
}

json witness_json(const SearchResult& r) {
  json cells = json::parse(r.witness.to_json());
  return {{"n_max", r.n_max},
          {"status", r.status == SearchStatus::proven ? "proven" : "budget-exhausted"},
          {"witness", cells}};
}

int cmd_maxlen(int b, int k, const std::string& klass,
               const std::string& witness_path, std::uint64_t budget,
               int workers) {
  SearchSpec spec{b, k, snake_class_from_string(klass), budget, workers};
  SearchResult result = max_snake_length(spec);
  json j = output_header("maxlen", {{"b", b},
                                    {"k", k},
                                    {"class", klass},
                                    {"workers", workers}});
  j["result"] = witness_json(result);
  std::cout << j.dump(2) << "\n";
  if (!witness_path.empty()) {
    std::ofstream out(witness_path);
    if (!out) throw std::runtime_error("cannot open " + witness_path);
    out << result.witness.to_json() << "\n";
  }
  return result.status == SearchStatus::proven ? kExitOk : kExitBudget;
}

int cmd_maxlen_report(int b_max, int k_max, const std::string& format,
                      std::uint64_t budget, int workers) {
  ConjectureReport report = conjecture_report(b_max, k_max, budget, workers);
  bool exhausted = false;
  for (const ConjectureRow& row : report.rows)
    exhausted |= row.pds.status != SearchStatus::proven ||
                 row.kiss_free.status != SearchStatus::proven ||
                 row.general.status != SearchStatus::proven;

  if (format == "csv") {
    print_text_header("maxlen report", {{"bmax", b_max}, {"kmax", k_max}});
    std::cout << "b,k,formula,max_pds,max_kiss_free,max_general,"
                 "kiss_free_matches,general_exceeds\n";
    for (const ConjectureRow& row : report.rows)
      std::cout << row.b << "," << row.k << "," << row.formula << ","
                << row.pds.n_max << "," << row.kiss_free.n_max << ","
                << row.general.n_max << "," << row.kiss_free_matches_formula
                << "," << row.general_exceeds_formula << "\n";
  } else {
    json j = output_header("maxlen report", {{"bmax", b_max},
                                             {"kmax", k_max},
                                             {"workers", workers}});
    json rows = json::array();
    for (const ConjectureRow& row : report.rows)
      rows.push_back({{"b", row.b},
                      {"k", row.k},
                      {"formula", row.formula},
                      {"max_pds", row.pds.n_max},
                      {"max_kiss_free", row.kiss_free.n_max},
                      {"max_general", row.general.n_max},
                      {"kiss_free_matches", row.kiss_free_matches_formula},
                      {"general_exceeds", row.general_exceeds_formula}});
    j["rows"] = std::move(rows);
    j["conjecture_holds"] = report.conjecture_holds;
    j["found_general_excess"] = report.found_general_excess;
    if (report.found_general_excess)
      j["excess_rectangle"] = {report.excess_b, report.excess_k};
    std::cout << j.dump(2) << "\n";
  }
  return exhausted ? kExitBudget : kExitOk;
}

int cmd_verify(const std::string& profile, int workers) {
  VerifyOptions options;
  options.full = profile == "full";
  options.workers = workers;
  auto results = run_verification(options);
  bool all_pass = true;
  bool budget = false;
  for (const CheckResult& r : results) {
    std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << " ("
              << std::fixed << std::setprecision(2) << r.seconds << "s)\n";
    if (!r.pass && !r.detail.empty()) std::cout << "       " << r.detail << "\n";
    all_pass &= r.pass;
    budget |= r.budget_exhausted;
  }
  if (budget) return kExitBudget;
  return all_pass ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact enumeration and generating-function toolkit for snake polyominoes"};
  app.require_subcommand(1);
  int workers = default_workers();
  app.add_option("--workers", workers, "worker thread count")
      ->capture_default_str();

  // gf expand
  auto* gf = app.add_subcommand("gf", "generating function catalog");
  gf->require_subcommand(1);
  auto* expand = gf->add_subcommand("expand", "expand a catalog series");
  std::string gf_name = "pds2d";
  int gf_order = 20;
  std::string gf_format = "json";
  expand->add_option("--name", gf_name, "sne|pds2d|pds3d|pdsnd:N|pdsx1:N")
      ->capture_default_str();
  expand->add_option("--order", gf_order, "truncation order")->capture_default_str();
  expand->add_option("--format", gf_format, "json|csv|table")->capture_default_str();

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "brute-force lattice enumeration");
  std::string enum_class = "snake";
  int enum_dim = 2, enum_n = 8;
  std::string enum_inscribed, enum_emit;
  enumerate->add_option("--class", enum_class, "snake|pds|kiss-free")
      ->capture_default_str();
  enumerate->add_option("--dim", enum_dim, "lattice dimension")->capture_default_str();
  enumerate->add_option("--n", enum_n, "snake length")->capture_default_str();
  enumerate->add_option("--inscribed", enum_inscribed, "restrict to bounding box BxK");
  enumerate->add_option("--emit", enum_emit, "write matching cell sets as JSONL");

  // inscribed
  auto* inscribed = app.add_subcommand("inscribed", "inscribed-width series");
  int ins_b = 3, ins_order = 0;
  bool ins_verify = false;
  std::string ins_format = "json";
  inscribed->add_option("--b", ins_b, "rectangle width")->capture_default_str();
  inscribed->add_option("--order", ins_order, "truncation order (0 = default)");
  inscribed->add_flag("--verify", ins_verify, "compare against enumeration");
  inscribed->add_option("--format", ins_format, "json|csv")->capture_default_str();

  // bijection
  auto* bijection = app.add_subcommand("bijection", "bargraph-bubble bijection");
  std::string bij_rows, bij_inverse;
  bijection->add_option("--rows", bij_rows, "bargraph row lengths, e.g. 3,1,1,3");
  bijection->add_option("--inverse", bij_inverse, "JSON file with a bubble cell set");

  // maxlen (+ report)
  auto* maxlen = app.add_subcommand("maxlen", "maximal inscribed snake length");
  maxlen->require_subcommand(0, 1);
  int ml_b = 4, ml_k = 4;
  std::string ml_class = "pds", ml_witness;
  std::uint64_t ml_budget = 50'000'000'000ull;
  maxlen->add_option("--b", ml_b, "rectangle width")->capture_default_str();
  maxlen->add_option("--k", ml_k, "rectangle height")->capture_default_str();
  maxlen->add_option("--class", ml_class, "pds|kiss-free|general")->capture_default_str();
  maxlen->add_option("--witness", ml_witness, "write the witness path to a file");
  maxlen->add_option("--budget", ml_budget, "search node budget")->capture_default_str();
  auto* report = maxlen->add_subcommand("report", "conjecture grid report");
  int rep_bmax = 6, rep_kmax = 6;
  std::string rep_format = "csv";
  report->add_option("--bmax", rep_bmax, "maximum width")->capture_default_str();
  report->add_option("--kmax", rep_kmax, "maximum height")->capture_default_str();
  report->add_option("--format", rep_format, "csv|json")->capture_default_str();

  // verify
  auto* verify = app.add_subcommand("verify", "run the verification pipeline");
  std::string verify_profile = "quick";
  verify->add_option("--profile", verify_profile, "quick|full")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (expand->parsed()) return cmd_gf_expand(gf_name, gf_order, gf_format);
    if (enumerate->parsed())
      return cmd_enumerate(enum_class, enum_dim, enum_n, enum_inscribed,
                           enum_emit, workers);
    if (inscribed->parsed()) {
      int order = ins_order > 0 ? ins_order : default_inscribed_order(ins_b);
      return cmd_inscribed(ins_b, order, ins_verify, ins_format, workers);
    }
    if (bijection->parsed()) return cmd_bijection(bij_rows, bij_inverse);
    if (report->parsed())
      return cmd_maxlen_report(rep_bmax, rep_kmax, rep_format, ml_budget, workers);
    if (maxlen->parsed())
      return cmd_maxlen(ml_b, ml_k, ml_class, ml_witness, ml_budget, workers);
    if (verify->parsed()) return cmd_verify(verify_profile, workers);
  } catch (const BudgetError& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    return kExitBudget;
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMismatch;
  }
  return kExitUsage;
}
