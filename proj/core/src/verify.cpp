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

#include "polysnake/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "polysnake/bijection.hpp"
#include "polysnake/gf_catalog.hpp"
#include "polysnake/inscribed_gf.hpp"
#include "polysnake/maximal.hpp"
#include "polysnake/series.hpp"

namespace polysnake {

namespace {

using Clock = std::chrono::steady_clock;

CheckResult run_timed(const std::string& name,
                      const std::function<std::pair<bool, std::string>()>& body) {
  CheckResult result;
  result.name = name;
  auto start = Clock::now();
  try {
    auto [pass, detail] = body();
    result.pass = pass;
    result.detail = std::move(detail);
    if (!result.pass && result.detail.find("budget exhausted") != std::string::npos)
      result.budget_exhausted = true;
  } catch (const BudgetError& e) {
    result.pass = false;
    result.budget_exhausted = true;
    result.detail = std::string("{\"error\":\"") + e.what() + "\"}";
  } catch (const std::exception& e) {
    result.pass = false;
    result.detail = std::string("{\"error\":\"") + e.what() + "\"}";
  }
  result.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return result;
}

std::string mismatch_json(const std::string& where, const std::string& expected,
                          const std::string& actual) {
  nlohmann::json j;
  j["first_mismatch"] = where;
  j["expected"] = expected;
  j["actual"] = actual;
  return j.dump();
}

}  // namespace

const std::vector<std::uint64_t>& snake_counts_reference() {
  static const std::vector<std::uint64_t> counts = {
      1,    2,    6,     14,    34,    82,    198,    470,
      1122, 2662, 6334, 14970, 35506, 83734, 198086, 466314};
  return counts;
}

CheckResult check_table1(int n_max, const EnumOptions& opts) {
  return run_timed("snake totals vs reference table", [&]() {
    const auto& expected = snake_counts_reference();
    int limit = std::min<int>(n_max, static_cast<int>(expected.size()));
    for (int n = 1; n <= limit; ++n) {
      std::uint64_t got = enumerate_snakes(2, n, opts);
      if (got != expected[n - 1])
        return std::make_pair(
            false, mismatch_json("s(" + std::to_string(n) + ")",
                                 std::to_string(expected[n - 1]),
                                 std::to_string(got)));
    }
    return std::make_pair(true, std::string());
  });
}

namespace {

CheckResult check_gf_vs_oracle(const std::string& name, const RationalGF& gf,
                               int dim, int n_max,
                               const std::vector<std::uint64_t>& verbatim,
                               const EnumOptions& opts) {
  return run_timed(name, [&]() {
    auto coeffs = expand_coefficients(gf, n_max);
    for (std::size_t n = 0; n < verbatim.size() && n < coeffs.size(); ++n) {
      if (coeffs[n] != verbatim[n])
        return std::make_pair(
            false, mismatch_json("coefficient q^" + std::to_string(n),
                                 std::to_string(verbatim[n]), coeffs[n].str()));
    }
    for (int n = 0; n <= n_max; ++n) {
      BigInt oracle(count_pds(dim, n, opts));
      if (coeffs[n] != oracle)
        return std::make_pair(
            false,
            mismatch_json("pds(" + std::to_string(n) + "," +
                              std::to_string(dim) + "D)",
                          oracle.str(), coeffs[n].str()));
    }
    return std::make_pair(true, std::string());
  });
}

}  // namespace

CheckResult check_gf_2d_vs_oracle(int n_max, const EnumOptions& opts) {
  return check_gf_vs_oracle("2D generating function vs enumeration",
                            gf_pds_2d(), 2, n_max,
                            {1, 1, 2, 6, 14, 32, 72, 160, 354}, opts);
}

CheckResult check_gf_3d_vs_oracle(int n_max, const EnumOptions& opts) {
  return check_gf_vs_oracle("3D generating function vs enumeration",
                            gf_pds_3d(), 3, n_max,
                            {1, 1, 3, 13, 45, 153, 517, 1737, 5829}, opts);
}

CheckResult check_nd_specialization(int n4_max, const EnumOptions& opts) {
  return run_timed("N-dimensional specializations", [&]() {
    if (!gf_pds_nd({2}).equals(gf_pds_2d()))
      return std::make_pair(false, mismatch_json("gf_pds_nd(2)", "gf_pds_2d", "differs"));
    if (!gf_pds_nd({3}).equals(gf_pds_3d()))
      return std::make_pair(false, mismatch_json("gf_pds_nd(3)", "gf_pds_3d", "differs"));
    auto coeffs = expand_coefficients(gf_pds_nd({4}), n4_max);
    for (int n = 0; n <= n4_max; ++n) {
      BigInt oracle(count_pds(4, n, opts));
      if (coeffs[n] != oracle)
        return std::make_pair(
            false, mismatch_json("pds(" + std::to_string(n) + ",4D)",
                                 oracle.str(), coeffs[n].str()));
    }
    return std::make_pair(true, std::string());
  });
}

CheckResult check_partition_identities(int max_dim) {
  return run_timed("partition identities S1 + S2 = PDS", [&]() {
    for (int dim = 2; dim <= max_dim; ++dim) {
      RationalGF pds = gf_pds_nd({dim});
      RationalGF sum = gf_s1_nd({dim}) + gf_s2_nd({dim}, pds);
      if (!sum.equals(pds))
        return std::make_pair(
            false, mismatch_json("N=" + std::to_string(dim), "S1+S2 == PDS",
                                 "rational identity fails"));
    }
    return std::make_pair(true, std::string());
  });
}

CheckResult check_closed_forms(int x1plus_n_max, int numeric_n_max) {
  return run_timed("closed-form count checks", [&]() {
    BigInt power(1);
    for (int n = 0; n <= x1plus_n_max; ++n) {
      // (2^{n+1} + (-1)^n) / 3
      BigInt expected = (power * 2 + (n % 2 == 0 ? 1 : -1)) / 3;
      BigInt got = count_pds_x1plus(n, {3});
      if (got != expected)
        return std::make_pair(false,
                              mismatch_json("pds_x1plus(" + std::to_string(n) + ",N=3)",
                                            expected.str(), got.str()));
      power *= 2;
    }
    for (int n = 2; n <= numeric_n_max; ++n) {
      eval_closed_form_numeric(ClosedForm::pds2d, n);  // throws on mismatch
      eval_closed_form_numeric(ClosedForm::pds3d, n);
    }
    return std::make_pair(true, std::string());
  });
}

CheckResult check_inscribed_master(int b_max, int k_max, int n_max,
                                   const EnumOptions& opts) {
  return run_timed("inscribed family sums vs enumeration", [&]() {
    CountTable oracle = inscribed_pds_table(n_max, opts);
    for (int b = 2; b <= b_max; ++b) {
      TruncatedSeries series = gf_inscribed_pds(b, n_max).series;
      for (int k = 1; k <= k_max; ++k) {
        for (int n = 0; n <= n_max; ++n) {
          BigInt from_series = series.coeff_tq(k, n);
          auto it = oracle.find(StatKey{b, k, n, 0});
          BigInt from_oracle(it == oracle.end() ? 0 : it->second);
          if (from_series != from_oracle)
            return std::make_pair(
                false, mismatch_json("(b,k,n)=(" + std::to_string(b) + "," +
                                         std::to_string(k) + "," +
                                         std::to_string(n) + ")",
                                     from_oracle.str(), from_series.str()));
        }
      }
    }
    // Every snake has exactly one bounding box, so the inscribed counts must
    // add up to the plain PDS totals.
    std::map<int, BigInt> totals;
    for (const auto& [key, count] : oracle) totals[key.n] += count;
    for (int n = 1; n <= n_max; ++n) {
      BigInt oracle_total(count_pds(2, n, opts));
      if (totals[n] != oracle_total)
        return std::make_pair(
            false, mismatch_json("sum over (b,k) at n=" + std::to_string(n),
                                 oracle_total.str(), totals[n].str()));
    }
    return std::make_pair(true, std::string());
  });
}

CheckResult check_bubbles(int r_max, int n_max, const EnumOptions& opts) {
  return run_timed("bubble series vs enumeration", [&]() {
    // One sweep collecting all bubbles, bucketed by width.
    std::map<int, CountTable> by_width;
    for (int n = 1; n <= n_max; ++n) {
      for_each_snake(2, n, opts, [&](const CellSet& s) {
        if (!is_bubble(s) || !is_pds_shape(s)) return;
        StatTriple st = classify_inscribed(s);
        ++by_width[st.b][StatKey{st.b, st.k, st.n, st.w}];
      });
    }

    for (int r = 2; r <= r_max; ++r) {
      TruncatedSeries series = gf_bubble_width(r, n_max).series;
      if (series.q_valuation() != std::min(2 * r + 1, n_max + 1))
        return std::make_pair(
            false, mismatch_json("B_" + std::to_string(r) + " q-valuation",
                                 std::to_string(2 * r + 1),
                                 std::to_string(series.q_valuation())));
      const CountTable& table = by_width[r];
      for (int k = 1; k <= n_max; ++k) {
        for (int n = 0; n <= n_max; ++n) {
          BigInt expected(0);
          for (const auto& [key, count] : table)
            if (key.k == k && key.n == n) expected += count;
          if (series.coeff_tq(k, n) != expected)
            return std::make_pair(
                false, mismatch_json("B_" + std::to_string(r) + " (k,n)=(" +
                                         std::to_string(k) + "," +
                                         std::to_string(n) + ")",
                                     expected.str(),
                                     series.coeff_tq(k, n).str()));
        }
      }
    }

    // The arbitrary-width solution must be a fixed point of its own equation,
    // open with the minimal term w^3 t^3 q^5, and refine the oracle by height
    // and in total. (Its w marks the runs of each stacked piece separately,
    // so it is compared with w folded away.)
    TruncatedSeries all = gf_bubble_all(n_max);
    if (!bubble_equation_residual(all).is_zero())
      return std::make_pair(false,
                            mismatch_json("bubble equation residual", "0", "nonzero"));
    if (n_max >= 5) {
      Monomial minimal;
      minimal[Var::t] = 3;
      minimal[Var::w] = 3;
      if (all.coeff(5).coeff(minimal) != 1 || all.coeff(5).term_count() != 1)
        return std::make_pair(false,
                              mismatch_json("minimal bubble term", "w^3 t^3 q^5",
                                            all.coeff(5).to_string()));
    }
    CountTable merged;  // aggregated over width and half-perimeter
    for (const auto& [r, table] : by_width)
      for (const auto& [key, count] : table)
        merged[StatKey{0, key.k, key.n, 0}] += count;
    for (int n = 0; n <= n_max; ++n) {
      Polynomial by_height = all.coeff(n).substitute_one(Var::w);
      BigInt total(0);
      for (int k = 0; k <= n; ++k) {
        auto it = merged.find(StatKey{0, k, n, 0});
        BigInt expected(it == merged.end() ? 0 : it->second);
        Monomial m;
        m[Var::t] = static_cast<std::uint32_t>(k);
        if (by_height.coeff(m) != expected)
          return std::make_pair(
              false, mismatch_json("B(t,q,1) at (k,n)=(" + std::to_string(k) +
                                       "," + std::to_string(n) + ")",
                                   expected.str(), by_height.coeff(m).str()));
        total += expected;
      }
      BigInt series_total = by_height.substitute_one(Var::t).constant_term();
      if (series_total != total)
        return std::make_pair(
            false, mismatch_json("B(1,q,1) at n=" + std::to_string(n),
                                 total.str(), series_total.str()));
    }
    return std::make_pair(true, std::string());
  });
}

namespace {

void generate_bargraphs(int max_cells, int max_width, std::vector<int>& rows,
                        int used, std::vector<Bargraph>& out) {
  if (!rows.empty()) out.push_back(Bargraph{rows});
  for (int len = 1; len <= max_width && used + len <= max_cells; ++len) {
    rows.push_back(len);
    generate_bargraphs(max_cells, max_width, rows, used + len, out);
    rows.pop_back();
  }
}

}  // namespace

CheckResult check_bijection(int max_cells, int max_width, int oracle_width_max,
                            int oracle_n_max, const EnumOptions& opts) {
  return run_timed("bargraph-bubble bijection", [&]() {
    std::vector<Bargraph> bargraphs;
    std::vector<int> rows;
    generate_bargraphs(max_cells, max_width, rows, 0, bargraphs);

    std::set<CellSet> images;
    for (const Bargraph& g : bargraphs) {
      CellSet bubble = bargraph_to_bubble(g);
      if (!is_bubble(bubble))
        return std::make_pair(false,
                              mismatch_json("envelope validity", "bubble",
                                            bubble.to_json()));
      StatTriple st = classify_inscribed(bubble);
      if (st.b != g.width() + 1)
        return std::make_pair(
            false, mismatch_json("width map", std::to_string(g.width() + 1),
                                 std::to_string(st.b)));
      if (!images.insert(bubble).second)
        return std::make_pair(false,
                              mismatch_json("injectivity", "distinct image",
                                            bubble.to_json()));
      Bargraph back = bubble_to_bargraph(bubble);
      if (back != g)
        return std::make_pair(false,
                              mismatch_json("round trip bargraph->bubble->bargraph",
                                            "identity", "differs"));
    }

    // Inverse direction over oracle-enumerated bubbles: every bubble of
    // width h maps back to a width h-1 bargraph and returns to itself.
    for (int n = 1; n <= oracle_n_max; ++n) {
      bool failed = false;
      std::string diff;
      for_each_snake(2, n, opts, [&](const CellSet& s) {
        if (failed || !is_bubble(s) || !is_pds_shape(s)) return;
        StatTriple st = classify_inscribed(s);
        if (st.b > oracle_width_max) return;
        Bargraph g = bubble_to_bargraph(s);
        if (g.width() != st.b - 1 || bargraph_to_bubble(g) != s) {
          failed = true;
          diff = mismatch_json("round trip bubble->bargraph->bubble",
                               s.to_json(), bargraph_to_bubble(g).to_json());
        }
      });
      if (failed) return std::make_pair(false, diff);
    }
    return std::make_pair(true, std::string());
  });
}

CheckResult check_extremal(int bk_max, std::uint64_t node_budget, int workers,
                           int hunt_area_limit) {
  return run_timed("extremal lengths and conjecture grid", [&]() {
    ConjectureReport report = conjecture_report(bk_max, bk_max, node_budget, workers);
    nlohmann::json detail;
    nlohmann::json pds_mismatches = nlohmann::json::array();
    bool searches_proven = true;
    bool kiss_free_clause = true;
    bool witnesses_ok = true;

    for (const ConjectureRow& row : report.rows) {
      if (row.pds.status != SearchStatus::proven ||
          row.kiss_free.status != SearchStatus::proven ||
          row.general.status != SearchStatus::proven)
        searches_proven = false;
      if (row.pds.n_max != row.formula)
        pds_mismatches.push_back({{"b", row.b},
                                  {"k", row.k},
                                  {"formula", row.formula},
                                  {"max_pds", row.pds.n_max}});
      if (!row.kiss_free_matches_formula) kiss_free_clause = false;
      for (const SearchResult* r : {&row.pds, &row.kiss_free, &row.general}) {
        CellSet shape = r->witness.to_cell_set();
        StatTriple st = classify_inscribed(shape);
        if (!r->witness.is_valid_snake_path() || st.b != row.b || st.k != row.k)
          witnesses_ok = false;
      }
      if (!is_pds_shape(row.pds.witness.to_cell_set()) ||
          !is_kiss_free(row.kiss_free.witness.to_cell_set()))
        witnesses_ok = false;
    }

    bool pds_clause = pds_mismatches.empty();
    detail["pds_equals_formula"] = pds_clause;
    if (!pds_clause) detail["pds_mismatches"] = pds_mismatches;
    detail["kiss_free_equals_formula"] = kiss_free_clause;
    detail["witnesses_valid"] = witnesses_ok;
    if (!searches_proven) detail["error"] = "search budget exhausted";

    bool excess_clause = true;
    if (hunt_area_limit > 0) {
      // Find a rectangle where a general snake beats the formula, looking at
      // growing areas; rectangles inside the grid were already searched.
      excess_clause = false;
      int found_b = report.found_general_excess ? report.excess_b : 0;
      int found_k = report.found_general_excess ? report.excess_k : 0;
      int found_len = 0;
      std::string witness_text;
      if (found_b != 0) {
        for (const ConjectureRow& row : report.rows)
          if (row.b == found_b && row.k == found_k) {
            found_len = row.general.n_max;
            witness_text = row.general.witness.to_json();
          }
      } else {
        std::vector<std::pair<int, int>> candidates;
        for (int b = 2; b <= 10; ++b)
          for (int k = b; k <= 10; ++k)
            if (b * k <= 64 && b * k <= hunt_area_limit && (b > bk_max || k > bk_max))
              candidates.push_back({b, k});
        std::sort(candidates.begin(), candidates.end(),
                  [](const auto& lhs, const auto& rhs) {
                    return std::tuple(lhs.first * lhs.second, lhs.first) <
                           std::tuple(rhs.first * rhs.second, rhs.first);
                  });
        for (const auto& [b, k] : candidates) {
          SearchResult r =
              max_snake_length({b, k, SnakeClass::general, node_budget, workers});
          if (r.status != SearchStatus::proven) {
            searches_proven = false;
            detail["error"] = "search budget exhausted during the general hunt";
            break;
          }
          if (r.n_max > formula_max_pds(b, k)) {
            found_b = b;
            found_k = k;
            found_len = r.n_max;
            witness_text = r.witness.to_json();
            break;
          }
        }
      }
      if (found_b != 0) {
        excess_clause = true;
        detail["excess_rectangle"] = {found_b, found_k};
        detail["excess_formula"] = formula_max_pds(found_b, found_k);
        detail["excess_general_max"] = found_len;
        detail["excess_witness"] = nlohmann::json::parse(witness_text);
      }
      detail["general_excess_found"] = excess_clause;
    }

    bool pass = searches_proven && pds_clause && kiss_free_clause &&
                witnesses_ok && excess_clause;
    return std::make_pair(pass, detail.dump());
  });
}

CheckResult check_determinism(const std::vector<int>& worker_counts,
                              int table1_n_max, int inscribed_n_max,
                              int report_bk, std::uint64_t node_budget) {
  return run_timed("determinism across worker counts", [&]() {
    struct Observed {
      std::vector<std::uint64_t> counts;
      std::uint64_t visit_hash = 1469598103934665603ull;
      CountTable inscribed;
      std::vector<std::tuple<int, std::string>> extremal;
    };
    std::vector<Observed> runs;
    for (int workers : worker_counts) {
      EnumOptions opts;
      opts.workers = workers;
      Observed obs;
      for (int n = 1; n <= table1_n_max; ++n) {
        std::uint64_t count = 0;
        for_each_snake(2, n, opts, [&](const CellSet& s) {
          ++count;
          for (const Cell& c : s.cells()) {
            obs.visit_hash ^= static_cast<std::uint64_t>(c.x[0]) * 1315423911u +
                              static_cast<std::uint64_t>(c.x[1]) + 0x9e3779b9u +
                              (obs.visit_hash << 6) + (obs.visit_hash >> 2);
          }
        });
        obs.counts.push_back(count);
      }
      obs.inscribed = inscribed_pds_table(inscribed_n_max, opts);
      ConjectureReport report =
          conjecture_report(report_bk, report_bk, node_budget, workers);
      for (const ConjectureRow& row : report.rows) {
        obs.extremal.push_back({row.pds.n_max, row.pds.witness.to_json()});
        obs.extremal.push_back({row.kiss_free.n_max, row.kiss_free.witness.to_json()});
        obs.extremal.push_back({row.general.n_max, row.general.witness.to_json()});
      }
      runs.push_back(std::move(obs));
    }
    for (std::size_t i = 1; i < runs.size(); ++i) {
      if (runs[i].counts != runs[0].counts || runs[i].visit_hash != runs[0].visit_hash)
        return std::make_pair(false,
                              mismatch_json("enumeration with workers=" +
                                                std::to_string(worker_counts[i]),
                                            "identical to workers=1", "differs"));
      if (runs[i].inscribed != runs[0].inscribed)
        return std::make_pair(false,
                              mismatch_json("inscribed table with workers=" +
                                                std::to_string(worker_counts[i]),
                                            "identical to workers=1", "differs"));
      if (runs[i].extremal != runs[0].extremal)
        return std::make_pair(false,
                              mismatch_json("extremal results with workers=" +
                                                std::to_string(worker_counts[i]),
                                            "identical to workers=1", "differs"));
    }
    return std::make_pair(true, std::string());
  });
}

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
  EnumOptions opts;
  opts.workers = options.workers;
  opts.memory_budget = options.memory_budget;

  const bool full = options.full;
  std::vector<CheckResult> results;
  results.push_back(check_table1(full ? 16 : 12, opts));
  results.push_back(check_gf_2d_vs_oracle(full ? 14 : 10, opts));
  results.push_back(check_gf_3d_vs_oracle(10, opts));
  results.push_back(check_nd_specialization(full ? 8 : 6, opts));
  results.push_back(check_partition_identities(5));
  results.push_back(check_closed_forms(full ? 60 : 30, full ? 30 : 12));
  results.push_back(
      check_inscribed_master(full ? 5 : 4, 6, full ? 14 : 12, opts));
  results.push_back(check_bubbles(4, full ? 14 : 12, opts));
  results.push_back(check_bijection(full ? 8 : 6, 4, full ? 5 : 4,
                                    full ? 12 : 10, opts));
  results.push_back(check_extremal(full ? 6 : 5, options.node_budget,
                                   options.workers, full ? 64 : 0));
  return results;
}

}  // namespace polysnake
