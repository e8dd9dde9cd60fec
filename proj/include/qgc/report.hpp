#pragma once

// JSON code report. Field order is fixed so that dump(parse(text)) == text.

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qgc/code.hpp"
#include "qgc/distance.hpp"
#include "qgc/stabilizer.hpp"

namespace qgc {

inline constexpr const char* kToolVersion = "0.1.0";

struct StabilizerSection {
  std::uint64_t order = 0;
  bool enumerated = false;
  std::vector<ModTuple> generators;
  std::vector<ModTuple> tuples;     // empty unless enumerated
  std::vector<std::string> paulis;  // rendered T_s, same order as tuples
};

struct CodeReport {
  std::string method;  // "search", "search-additive", "partition", ...
  Graph graph{1, 2};
  int delta = 0;
  std::vector<ModTuple> codewords;  // empty when no code was produced
  std::optional<int> diagonal_distance;
  bool additive = false;
  std::vector<ModTuple> generators;
  std::optional<StabilizerSection> stabilizer;
  std::uint64_t qs_bound = 0;
  bool qs_saturated = false;
  bool exhaustive = false;
  double elapsed_seconds = 0;
  std::string version = kToolVersion;
  /// Why no code is reported, e.g. "diagonal-distance".
  std::optional<std::string> reason;

  std::size_t K() const noexcept { return codewords.size(); }

  GraphCode to_code() const { return GraphCode(graph, delta, codewords, exhaustive); }
};

inline StabilizerSection stabilizer_section(const StabilizerGroup& stab) {
  StabilizerSection s;
  s.order = stab.order;
  s.enumerated = stab.enumerated;
  s.generators = stab.generators.rows();
  if (stab.enumerated) {
    s.tuples = stab.tuples;
    for (const auto& t : stab.elements) s.paulis.push_back(to_string(t));
  }
  return s;
}

/// Diagonal distance for the report: exact when the label space fits in memory.
inline std::optional<int> report_diagonal_distance(const Graph& g) {
  try {
    const int d = exact_diagonal_distance(g);
    return d == kAboveCap ? std::nullopt : std::optional<int>(d);
  } catch (const CapacityError&) {
    return std::nullopt;
  }
}

/// Report for a finished code; stabilizer data is attached for additive codes.
inline CodeReport make_report(const GraphCode& code, const std::string& method, double elapsed = 0) {
  CodeReport r;
  r.method = method;
  r.graph = code.graph();
  r.delta = code.delta();
  r.codewords = code.codewords();
  r.diagonal_distance = report_diagonal_distance(code.graph());
  r.additive = code.additive();
  if (code.generators()) r.generators = code.generators()->rows();
  if (code.additive()) r.stabilizer = stabilizer_section(stabilizer_subgroup(code));
  r.qs_bound = code.qs_bound();
  r.qs_saturated = code.qs_saturated();
  r.exhaustive = code.exhaustive();
  r.elapsed_seconds = elapsed;
  return r;
}

/// Report for a refused search (K = 0 in table output).
inline CodeReport make_refusal(const Graph& g, int delta, const std::string& method, const std::string& reason, double elapsed = 0) {
  CodeReport r;
  r.method = method;
  r.graph = g;
  r.delta = delta;
  r.diagonal_distance = report_diagonal_distance(g);
  r.qs_bound = qs_bound(g.n(), delta, g.modulus());
  r.exhaustive = true;
  r.elapsed_seconds = elapsed;
  r.reason = reason;
  return r;
}

namespace detail {

inline nlohmann::ordered_json digits_array(const std::vector<ModTuple>& v) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& t : v) out.push_back(t.to_digits());
  return out;
}

inline std::vector<ModTuple> parse_digits_array(int modulus, int n, const nlohmann::ordered_json& j, const std::string& field) {
  std::vector<ModTuple> out;
  for (const auto& e : j) {
    auto t = ModTuple::from_digits(modulus, e.get<std::string>());
    if (t.size() != n) throw InvalidArgument("field '" + field + "' has an entry of length " + std::to_string(t.size()) + ", expected " + std::to_string(n));
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace detail

inline nlohmann::ordered_json to_json(const CodeReport& r) {
  nlohmann::ordered_json j;
  j["tool"] = "qgc";
  j["version"] = r.version;
  j["method"] = r.method;
  j["n"] = r.graph.n();
  j["D"] = r.graph.modulus();
  j["delta"] = r.delta;
  j["K"] = r.K();
  j["diagonal_distance"] = r.diagonal_distance ? nlohmann::ordered_json(*r.diagonal_distance) : nlohmann::ordered_json(nullptr);
  // Adjacency rows as space-separated weights, one string per vertex.
  auto rows = nlohmann::ordered_json::array();
  for (int l = 0; l < r.graph.n(); ++l) {
    std::string row;
    for (int m = 0; m < r.graph.n(); ++m) row += (m ? " " : "") + std::to_string(r.graph.weight(l, m));
    rows.push_back(std::move(row));
  }
  j["graph"] = std::move(rows);
  j["codewords"] = detail::digits_array(r.codewords);
  j["additive"] = r.additive;
  j["generators"] = detail::digits_array(r.generators);
  if (r.stabilizer) {
    nlohmann::ordered_json s;
    s["order"] = r.stabilizer->order;
    s["enumerated"] = r.stabilizer->enumerated;
    s["generators"] = detail::digits_array(r.stabilizer->generators);
    s["tuples"] = detail::digits_array(r.stabilizer->tuples);
    s["paulis"] = r.stabilizer->paulis;
    j["stabilizer"] = std::move(s);
  } else {
    j["stabilizer"] = nullptr;
  }
  j["qs_bound"] = r.qs_bound;
  j["qs_saturated"] = r.qs_saturated;
  j["exhaustive"] = r.exhaustive;
  j["elapsed_seconds"] = r.elapsed_seconds;
  j["reason"] = r.reason ? nlohmann::ordered_json(*r.reason) : nlohmann::ordered_json(nullptr);
  return j;
}

inline std::string serialize_report(const CodeReport& r) { return to_json(r).dump(2) + "\n"; }

/// Throws InvalidArgument on malformed or inconsistent documents.
inline CodeReport report_from_json(const nlohmann::ordered_json& j) {
  try {
    CodeReport r;
    r.version = j.at("version").get<std::string>();
    r.method = j.at("method").get<std::string>();
    const int n = j.at("n").get<int>();
    const int d = j.at("D").get<int>();
    const auto& rows = j.at("graph");
    if (rows.size() != static_cast<std::size_t>(n)) throw InvalidArgument("graph has " + std::to_string(rows.size()) + " rows, expected n");
    std::vector<Residue> adj;
    for (const auto& row : rows) {
      std::istringstream in(row.get<std::string>());
      long long w = 0;
      std::size_t count = 0;
      while (in >> w) {
        if (w < 0) throw InvalidArgument("negative edge weight in graph");
        adj.push_back(static_cast<Residue>(w));
        ++count;
      }
      if (!in.eof() || count != static_cast<std::size_t>(n)) throw InvalidArgument("graph row '" + row.get<std::string>() + "' does not hold n weights");
    }
    r.graph = Graph(n, d, std::move(adj));
    r.delta = j.at("delta").get<int>();
    if (!j.at("diagonal_distance").is_null()) r.diagonal_distance = j.at("diagonal_distance").get<int>();
    r.codewords = detail::parse_digits_array(d, n, j.at("codewords"), "codewords");
    if (j.at("K").get<std::size_t>() != r.codewords.size()) throw InvalidArgument("K does not match the number of codewords");
    r.additive = j.at("additive").get<bool>();
    r.generators = detail::parse_digits_array(d, n, j.at("generators"), "generators");
    if (!j.at("stabilizer").is_null()) {
      const auto& s = j.at("stabilizer");
      StabilizerSection sec;
      sec.order = s.at("order").get<std::uint64_t>();
      sec.enumerated = s.at("enumerated").get<bool>();
      sec.generators = detail::parse_digits_array(d, n, s.at("generators"), "stabilizer.generators");
      sec.tuples = detail::parse_digits_array(d, n, s.at("tuples"), "stabilizer.tuples");
      sec.paulis = s.at("paulis").get<std::vector<std::string>>();
      r.stabilizer = std::move(sec);
    }
    r.qs_bound = j.at("qs_bound").get<std::uint64_t>();
    r.qs_saturated = j.at("qs_saturated").get<bool>();
    r.exhaustive = j.at("exhaustive").get<bool>();
    r.elapsed_seconds = j.at("elapsed_seconds").get<double>();
    if (!j.at("reason").is_null()) r.reason = j.at("reason").get<std::string>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed code report: ") + e.what());
  }
}

inline CodeReport parse_report(const std::string& text) {
  nlohmann::ordered_json j;
  try {
    j = nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("code report is not valid JSON: ") + e.what());
  }
  return report_from_json(j);
}

}  // namespace qgc
