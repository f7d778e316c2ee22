#include "output.hpp"

#include "placirc/version.hpp"

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <stdexcept>
#include <vector>

#include <unistd.h>

namespace placirc::cli {

namespace {

using nlohmann::json;

bool color_enabled() {
  return ::isatty(::fileno(stdout)) != 0 && std::getenv("NO_COLOR") == nullptr;
}

std::string cell(const json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void print_table(const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
  for (const auto& row : rows)
    for (std::size_t i = 0; i < row.size(); ++i)
      width[i] = std::max(width[i], row[i].size());

  const bool color = color_enabled();
  auto print_row = [&](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      std::cout << row[i];
      if (i + 1 < row.size())
        std::cout << std::string(width[i] - row[i].size() + 2, ' ');
    }
    std::cout << '\n';
  };
  if (color) std::cout << "\x1b[1m";
  print_row(header);
  if (color) std::cout << "\x1b[0m";
  for (const auto& row : rows) print_row(row);
}

// Emits an array-of-objects payload with a fixed column order, keeping only
// the columns actually present in the rows.
void print_records(const json& records, const std::vector<std::string>& columns) {
  std::vector<std::string> header;
  for (const std::string& c : columns)
    if (!records.empty() && records.front().contains(c)) header.push_back(c);
  std::vector<std::vector<std::string>> rows;
  for (const json& rec : records) {
    std::vector<std::string> row;
    row.reserve(header.size());
    for (const std::string& c : header) row.push_back(cell(rec.at(c)));
    rows.push_back(std::move(row));
  }
  print_table(header, rows);
}

void print_scalar(const json& scalar) {
  for (const auto& [key, value] : scalar.items())
    std::cout << key << ": " << cell(value) << '\n';
}

void print_report(const json& report) {
  const json& meta = report.at("meta");
  std::cout << "version: " << cell(meta.at("version"))
            << "  seed: " << cell(meta.at("seed"))
            << "  n_max: " << cell(meta.at("n_max"))
            << "  trials: " << cell(meta.at("trials")) << '\n';
  const json& s = report.at("summary");
  std::cout << "pass: " << cell(s.at("pass")) << "  fail: " << cell(s.at("fail"))
            << "  erratum-expected-fail: " << cell(s.at("erratum_expected_fail"))
            << "  fallback-pass: " << cell(s.at("fallback_pass")) << '\n';
  print_records(report.at("checks"), {"status", "name", "rel_err", "params"});
}

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "json") return Format::Json;
  if (name == "table") return Format::Table;
  throw std::invalid_argument("unknown --format value: " + name);
}

nlohmann::json make_document(const std::string& command,
                             nlohmann::json parameters,
                             const std::string& payload_key,
                             nlohmann::json payload) {
  json meta = json::object({{"version", std::string(kVersion)},
                            {"command", command},
                            {"parameters", std::move(parameters)}});
  return json::object({{"meta", std::move(meta)}, {payload_key, std::move(payload)}});
}

void emit(const nlohmann::json& doc, Format format) {
  if (format == Format::Json) {
    std::cout << doc.dump(2) << '\n';
    return;
  }
  if (doc.contains("terms")) {
    print_records(doc.at("terms"), {"n", "value", "sum", "sum_identity",
                                    "sum_squares", "sum_squares_identity"});
  } else if (doc.contains("spectrum")) {
    print_records(doc.at("spectrum"),
                  {"j", "re", "im", "oracle_re", "oracle_im", "rel_err"});
  } else if (doc.contains("scalar")) {
    print_scalar(doc.at("scalar"));
  } else if (doc.contains("report")) {
    print_report(doc.at("report"));
  } else if (doc.contains("bench")) {
    print_records(doc.at("bench"), {"n", "method", "seconds"});
  }
}

}  // namespace placirc::cli
