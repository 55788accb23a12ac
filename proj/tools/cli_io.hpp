#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "cyclokit/bench.hpp"
#include "cyclokit/divisibility.hpp"
#include "cyclokit/poly.hpp"
#include "cyclokit/report.hpp"

namespace cyclokit::cli {

using nlohmann::json;

inline std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

/// U+2212 MINUS SIGN becomes '-'.
inline std::string ascii_minus(std::string s) {
  const std::string minus = "\xE2\x88\x92";
  for (std::size_t pos; (pos = s.find(minus)) != std::string::npos;) s.replace(pos, minus.size(), "-");
  return s;
}

inline BigInt parse_integer(const std::string& token) {
  const std::string t = trim(ascii_minus(token));
  std::size_t i = (t.size() > 0 && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
  if (i == t.size()) throw PreconditionError("not an integer: '" + token + "'");
  for (std::size_t j = i; j < t.size(); ++j) {
    if (t[j] < '0' || t[j] > '9') throw PreconditionError("not an integer: '" + token + "'");
  }
  BigInt v(t.substr(i));
  return t[0] == '-' ? BigInt(-v) : v;
}

/// Coefficients from an inline comma list, a JSON array (of strings or
/// integers), or a file holding either. Ascending unless `descending`.
inline IntPoly parse_poly(const std::string& spec, bool descending) {
  std::string text = spec;
  std::error_code ec;
  if (std::filesystem::is_regular_file(spec, ec)) {
    std::ifstream in(spec);
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  text = trim(ascii_minus(text));
  std::vector<BigInt> coeffs;
  if (!text.empty() && text.front() == '[') {
    json arr;
    try {
      arr = json::parse(text);
    } catch (const json::parse_error& e) {
      throw PreconditionError(std::string("polynomial JSON does not parse: ") + e.what());
    }
    if (!arr.is_array()) throw PreconditionError("polynomial JSON must be an array");
    for (const auto& x : arr) {
      if (x.is_string())
        coeffs.push_back(parse_integer(x.get<std::string>()));
      else if (x.is_number_integer())
        coeffs.push_back(parse_integer(x.dump()));
      else
        throw PreconditionError("polynomial JSON entries must be integers or decimal strings");
    }
  } else if (!text.empty()) {
    std::stringstream ss(text);
    for (std::string tok; std::getline(ss, tok, ',');) coeffs.push_back(parse_integer(tok));
  }
  return descending ? IntPoly::from_descending(std::move(coeffs)) : IntPoly(std::move(coeffs));
}

/// eta as "re", "re,im", or "zeta:k:j" for the exact root of unity zeta_k^j.
inline std::variant<Complex, RootOfUnity> parse_eta(const std::string& spec) {
  const std::string s = trim(ascii_minus(spec));
  if (s.rfind("zeta:", 0) == 0) {
    const auto colon = s.find(':', 5);
    if (colon == std::string::npos) throw PreconditionError("eta 'zeta:k:j' needs both k and j");
    const auto k = parse_integer(s.substr(5, colon - 5));
    const auto j = parse_integer(s.substr(colon + 1));
    return RootOfUnity{k.convert_to<std::int64_t>(), j.convert_to<std::int64_t>()};
  }
  try {
    const auto comma = s.find(',');
    std::size_t used = 0;
    if (comma == std::string::npos) {
      const double re = std::stod(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return Complex(re, 0.0);
    }
    const std::string a = trim(s.substr(0, comma)), b = trim(s.substr(comma + 1));
    const double re = std::stod(a, &used);
    if (used != a.size()) throw std::invalid_argument(a);
    const double im = std::stod(b, &used);
    if (used != b.size()) throw std::invalid_argument(b);
    return Complex(re, im);
  } catch (const std::logic_error&) {
    throw PreconditionError("eta must be 're', 're,im' or 'zeta:k:j', got '" + spec + "'");
  }
}

inline std::string to_decimal(const BigInt& x) { return x.str(); }

inline json poly_json(const IntPoly& p) {
  json arr = json::array();
  for (const auto& c : p.coeffs()) arr.push_back(to_decimal(c));
  return arr;
}

inline json values_json(const std::vector<BigInt>& v) {
  json arr = json::array();
  for (const auto& c : v) arr.push_back(to_decimal(c));
  return arr;
}

inline json complex_json(Complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

inline json params_json(const std::vector<std::pair<std::string, std::int64_t>>& params) {
  json o = json::object();
  for (const auto& [k, v] : params) o[k] = v;
  return o;
}

inline json report_json(const IdentityReport& r) {
  json o{{"identity", std::string(to_string(r.identity))},
         {"n", r.n},
         {"params", params_json(r.params)},
         {"lhs", to_decimal(r.lhs)},
         {"rhs", to_decimal(r.rhs)},
         {"pass", r.pass}};
  if (!r.variant.empty()) o["variant"] = r.variant;
  if (r.max_deviation != 0.0) o["max_deviation"] = r.max_deviation;
  return o;
}

inline json witness_sum_json(const BigInt& s) { return to_decimal(s); }
inline json witness_sum_json(Complex s) { return complex_json(s); }

template <class T>
json divisibility_json(const DivisibilityReport<T>& r) {
  json w = json::array();
  for (const auto& x : r.witnesses) w.push_back({{"h", x.h}, {"sum", witness_sum_json(x.sum)}});
  json o{{"divisor_kind", std::string(to_string(r.kind))},
         {"params", params_json(r.params)},
         {"verdict", r.verdict},
         {"witnesses", std::move(w)},
         {"h_range_used", r.h_range_used()},
         {"path", std::string(to_string(r.path))},
         {"op_count", r.op_count},
         {"exact", r.exact}};
  if (r.kind == DivisorKind::ZnMinusEta) {
    o["eta"] = complex_json(r.eta);
    if (!r.exact) o["tolerance"] = r.tolerance;
  }
  return o;
}

inline json bench_record_json(const BenchRecord& r) {
  return {{"method", std::string(to_string(r.method))},
          {"N", r.N},
          {"degree", r.degree},
          {"trial", r.trial},
          {"ns_elapsed", r.ns_elapsed},
          {"op_count", r.op_count},
          {"verdict", r.verdict}};
}

}  // namespace cyclokit::cli
