#pragma once

// JSON projection of a Trace (and optionally its VerifyReport). Rationals are
// always canonical strings; key order is fixed so output is byte-stable.

#include <json.hpp>

#include <string>

#include "gjx/closed_form.hpp"
#include "gjx/engine.hpp"
#include "gjx/matrix.hpp"

namespace gjx {

using ordered_json = nlohmann::ordered_json;

inline ordered_json matrix_grid(const Matrix& m) {
  ordered_json grid = ordered_json::array();
  for (std::size_t i = 1; i <= m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t j = 1; j <= m.cols(); ++j) row.push_back(m(i, j).str());
    grid.push_back(std::move(row));
  }
  return grid;
}

inline ordered_json verification_json(const VerifyReport& report) {
  std::size_t products_held = 0;
  for (const auto& l : report.product_checks) products_held += l.holds ? 1 : 0;
  auto matched = [](const std::vector<Comparison>& v) {
    std::size_t n = 0;
    for (const auto& c : v) n += c.match ? 1 : 0;
    return n;
  };

  ordered_json mismatches = ordered_json::array();
  auto add = [&](const char* what, const std::vector<Comparison>& v) {
    for (const auto& c : v) {
      if (c.match) continue;
      ordered_json item;
      item["what"] = what;
      item["step"] = c.step;
      item["i"] = c.row;
      item["j"] = c.col;
      item["engine"] = c.engine.str();
      item["formula"] = c.formula.str();
      mismatches.push_back(std::move(item));
    }
  };
  add("intermediate", report.comparisons);
  add("operation", report.op_comparisons);
  add("pivot", report.pivot_comparisons);
  for (const auto& l : report.product_checks) {
    if (l.holds) continue;
    ordered_json item;
    item["what"] = "pivotProduct";
    item["step"] = l.k;
    item["principalMinor"] = l.principal_minor.str();
    item["pivotProduct"] = l.pivot_product.str();
    mismatches.push_back(std::move(item));
  }

  ordered_json v;
  v["allMatch"] = report.all_match;
  v["intermediateEntries"] = {{"compared", report.comparisons.size()},
                              {"matched", matched(report.comparisons)}};
  v["operationEntries"] = {{"compared", report.op_comparisons.size()},
                           {"matched", matched(report.op_comparisons)}};
  v["pivots"] = {{"compared", report.pivot_comparisons.size()},
                 {"matched", matched(report.pivot_comparisons)}};
  v["pivotProducts"] = {{"compared", report.product_checks.size()},
                        {"matched", products_held}};
  v["mismatches"] = std::move(mismatches);
  return v;
}

inline ordered_json trace_document(const Trace& t, const VerifyReport* report = nullptr) {
  ordered_json doc;
  doc["m"] = t.input().rows();
  doc["n"] = t.input().cols();
  doc["rank"] = t.rank();
  ordered_json steps = ordered_json::array();
  for (const Step& s : t.steps()) {
    ordered_json step;
    step["q"] = s.q;
    step["kind"] = s.is_odd() ? "odd" : "even";
    step["G"] = matrix_grid(s.op);
    step["A"] = matrix_grid(s.result);
    steps.push_back(std::move(step));
  }
  doc["steps"] = std::move(steps);
  if (report != nullptr) doc["verification"] = verification_json(*report);
  return doc;
}

}  // namespace gjx
