#pragma once

// Claim records, the machine-readable verification report, and CSV
// emission.  Reports are byte-deterministic for a fixed config and seed:
// claims are sorted by id, serialized with fixed key order, and carry no
// wall-clock data (timings are console output only).

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace quintet::report {

enum class Status { pass, fail, measured };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    default: return "measured";
  }
}

struct Claim {
  std::string claim_id;
  std::string description;
  Status status = Status::measured;
  nlohmann::ordered_json values;      // measured quantities
  nlohmann::ordered_json tolerances;  // thresholds the status was judged by
};

struct VerificationReport {
  std::string version = "1.0.0";
  int schema_version = 1;
  std::string seed_hex;
  std::vector<Claim> claims;

  bool all_pass() const {
    for (const auto& c : claims)
      if (c.status == Status::fail) return false;
    return true;
  }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["suite"] = "quintet";
    j["version"] = version;
    j["schema_version"] = schema_version;
    j["seed"] = seed_hex;
    auto sorted = claims;
    std::sort(sorted.begin(), sorted.end(),
              [](const Claim& a, const Claim& b) { return a.claim_id < b.claim_id; });
    j["claims"] = nlohmann::ordered_json::array();
    for (const auto& c : sorted) {
      nlohmann::ordered_json jc;
      jc["claim_id"] = c.claim_id;
      jc["description"] = c.description;
      jc["status"] = to_string(c.status);
      jc["values"] = c.values.is_null() ? nlohmann::ordered_json::object() : c.values;
      jc["tolerances"] = c.tolerances.is_null() ? nlohmann::ordered_json::object() : c.tolerances;
      j["claims"].push_back(jc);
    }
    return j;
  }

  std::string serialize() const { return to_json().dump(2) + "\n"; }
};

inline std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

struct CsvTable {
  std::string name;  // file stem
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

inline std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

// RFC-4180-style: header row, LF line endings, minimal quoting.
inline void emit_csv(const std::filesystem::path& path, const CsvTable& table) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("io-error: cannot open " + path.string());
  for (std::size_t i = 0; i < table.columns.size(); ++i)
    out << (i ? "," : "") << csv_escape(table.columns[i]);
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_escape(row[i]);
    out << '\n';
  }
  if (!out) throw std::runtime_error("io-error: write failed for " + path.string());
}

inline void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("io-error: cannot open " + path.string());
  out << text;
  if (!out) throw std::runtime_error("io-error: write failed for " + path.string());
}

}  // namespace quintet::report
