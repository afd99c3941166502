// Copyright 2026 The trimer Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>

#include "trimer/cli.hpp"

namespace trimer::cli {

std::size_t Table::column(std::string_view name) const {
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (columns[i] == name) return i;
  }
  throw std::out_of_range("no column '" + std::string(name) + "'");
}

double Table::number(std::size_t row, std::string_view name) const {
  const Cell& c = rows.at(row).at(column(name));
  if (const auto* d = std::get_if<double>(&c)) return *d;
  if (const auto* i = std::get_if<std::int64_t>(&c)) return static_cast<double>(*i);
  return std::numeric_limits<double>::quiet_NaN();
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

namespace {

std::string csv_cell(const Cell& c) {
  struct Visitor {
    std::string operator()(std::monostate) const { return ""; }
    std::string operator()(double d) const { return std::isnan(d) ? "" : format_double(d); }
    std::string operator()(std::int64_t i) const { return std::to_string(i); }
    std::string operator()(const std::string& s) const {
      if (s.find_first_of(",\"\n") == std::string::npos) return s;
      std::string q = "\"";
      for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
      return q + "\"";
    }
    std::string operator()(bool b) const { return b ? "true" : "false"; }
  };
  return std::visit(Visitor{}, c);
}

nlohmann::json json_cell(const Cell& c) {
  struct Visitor {
    nlohmann::json operator()(std::monostate) const { return nullptr; }
    nlohmann::json operator()(double d) const {
      return std::isfinite(d) ? nlohmann::json(d) : nlohmann::json(nullptr);
    }
    nlohmann::json operator()(std::int64_t i) const { return i; }
    nlohmann::json operator()(const std::string& s) const { return s; }
    nlohmann::json operator()(bool b) const { return b; }
  };
  return std::visit(Visitor{}, c);
}

}  // namespace

nlohmann::json metadata(const Table& t, const RunConfig& c) {
  nlohmann::json m;
  m["version"] = std::string(kVersion);
  m["config"] = to_json(c);
  m["grid"] = t.grid;
  m["columns"] = t.columns;
  return m;
}

void emit(const Table& t, const RunConfig& c, std::ostream& os) {
  const nlohmann::json meta = metadata(t, c);
  if (c.format == "json") {
    nlohmann::json doc;
    doc["metadata"] = meta;
    doc["records"] = nlohmann::json::array();
    for (const auto& row : t.rows) {
      nlohmann::json rec = nlohmann::json::object();
      for (std::size_t i = 0; i < t.columns.size(); ++i) rec[t.columns[i]] = json_cell(row[i]);
      doc["records"].push_back(std::move(rec));
    }
    os << doc.dump(2) << '\n';
    return;
  }
  os << "# trimer " << kVersion << '\n';
  os << "# config: " << meta["config"].dump() << '\n';
  os << "# grid: " << meta["grid"].dump() << '\n';
  for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
  os << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_cell(row[i]);
    os << '\n';
  }
}

void emit(const Table& t, const RunConfig& c) {
  if (c.out.empty() || c.out == "-") {
    emit(t, c, std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream f(c.out);
  if (!f) throw std::runtime_error("cannot open '" + c.out + "' for writing");
  emit(t, c, f);
  f.close();
  if (!f) throw std::runtime_error("write to '" + c.out + "' failed");
}

Table table_from_json(const nlohmann::json& doc) {
  Table t;
  t.columns = doc.at("metadata").at("columns").get<std::vector<std::string>>();
  t.grid = doc.at("metadata").value("grid", nlohmann::json::object());
  for (const auto& rec : doc.at("records")) {
    std::vector<Cell> row;
    for (const auto& col : t.columns) {
      const auto& v = rec.at(col);
      if (v.is_null()) {
        row.emplace_back(std::monostate{});
      } else if (v.is_boolean()) {
        row.emplace_back(v.get<bool>());
      } else if (v.is_number_integer()) {
        row.emplace_back(v.get<std::int64_t>());
      } else if (v.is_number()) {
        row.emplace_back(v.get<double>());
      } else {
        row.emplace_back(v.get<std::string>());
      }
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

}  // namespace trimer::cli
