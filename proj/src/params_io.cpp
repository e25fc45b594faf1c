#include "fwcs/params_io.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace fwcs {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
  throw ValidationError((path.empty() ? std::string("<root>") : path) + ": " + msg);
}

void expect_keys(const json& j, const std::string& path, const std::set<std::string>& required) {
  if (!j.is_object()) fail(path, "expected an object");
  for (const auto& [key, _] : j.items()) {
    if (!required.count(key)) fail(path + "/" + key, "unknown key");
  }
  for (const auto& key : required) {
    if (!j.contains(key)) fail(path + "/" + key, "missing key");
  }
}

double number(const json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) fail(path, "expected a finite number");
  return v;
}

Complex complex_pair(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2) fail(path, "expected [re, im]");
  return {number(j[0], path + "/0"), number(j[1], path + "/1")};
}

// [re, im, weight]
void triple(const json& j, const std::string& path, Complex& value, double& w) {
  if (!j.is_array() || j.size() != 3) fail(path, "expected [re, im, weight]");
  value = {number(j[0], path + "/0"), number(j[1], path + "/1")};
  w = number(j[2], path + "/2");
}

const json& array_at(const json& j, const std::string& key, const std::string& path) {
  const json& a = j.at(key);
  if (!a.is_array()) fail(path + "/" + key, "expected an array");
  return a;
}

std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < text.size() && i + 1 < byte; ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace

json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    const auto [line, col] = line_column(text, e.byte);
    std::ostringstream os;
    os << source << ":" << line << ":" << col << ": invalid JSON";
    throw ValidationError(os.str());
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError(path + ": cannot open");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str(), path);
}

FWParams fw_params_from_json(const json& j) {
  expect_keys(j, "", {"upper", "lower"});
  FWParams params;
  const json& up = array_at(j, "upper", "");
  for (std::size_t i = 0; i < up.size(); ++i) {
    UpperPair u{};
    triple(up[i], "/upper/" + std::to_string(i), u.a, u.big_a);
    params.upper.push_back(u);
  }
  const json& lo = array_at(j, "lower", "");
  for (std::size_t i = 0; i < lo.size(); ++i) {
    LowerPair l{};
    triple(lo[i], "/lower/" + std::to_string(i), l.b, l.big_b);
    params.lower.push_back(l);
  }
  params.validate();
  return params;
}

json to_json(const FWParams& params) {
  json j = {{"upper", json::array()}, {"lower", json::array()}};
  for (const auto& u : params.upper) j["upper"].push_back({u.a.real(), u.a.imag(), u.big_a});
  for (const auto& l : params.lower) j["lower"].push_back({l.b.real(), l.b.imag(), l.big_b});
  return j;
}

Bicomplex bicomplex_from_json(const json& j, const std::string& path) {
  expect_keys(j, path, {"z1", "z2"});
  return {complex_pair(j["z1"], path + "/z1"), complex_pair(j["z2"], path + "/z2")};
}

json to_json(const Bicomplex& z) {
  return {{"z1", {z.z1().real(), z.z1().imag()}}, {"z2", {z.z2().real(), z.z2().imag()}}};
}

Hyperbolic hyperbolic_from_json(const json& j, const std::string& path) {
  expect_keys(j, path, {"c1", "c2"});
  return {number(j["c1"], path + "/c1"), number(j["c2"], path + "/c2")};
}

json to_json(const Hyperbolic& h) { return {{"c1", h.c1()}, {"c2", h.c2()}}; }

BCFWParams bc_params_from_json(const json& j) {
  expect_keys(j, "", {"upper", "lower"});
  BCFWParams params;
  const json& up = array_at(j, "upper", "");
  for (std::size_t i = 0; i < up.size(); ++i) {
    const std::string path = "/upper/" + std::to_string(i);
    expect_keys(up[i], path, {"mu", "M"});
    params.upper.push_back({bicomplex_from_json(up[i]["mu"], path + "/mu"), hyperbolic_from_json(up[i]["M"], path + "/M")});
  }
  const json& lo = array_at(j, "lower", "");
  for (std::size_t i = 0; i < lo.size(); ++i) {
    const std::string path = "/lower/" + std::to_string(i);
    expect_keys(lo[i], path, {"nu", "N"});
    params.lower.push_back({bicomplex_from_json(lo[i]["nu"], path + "/nu"), hyperbolic_from_json(lo[i]["N"], path + "/N")});
  }
  params.validate();
  return params;
}

json to_json(const BCFWParams& params) {
  json j = {{"upper", json::array()}, {"lower", json::array()}};
  for (const auto& u : params.upper) j["upper"].push_back({{"mu", to_json(u.mu)}, {"M", to_json(u.big_m)}});
  for (const auto& l : params.lower) j["lower"].push_back({{"nu", to_json(l.nu)}, {"N", to_json(l.big_n)}});
  return j;
}

FWParams load_fw_params(const std::string& path) {
  const json j = read_json_file(path);
  try {
    return fw_params_from_json(j);
  } catch (const ValidationError& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

BCFWParams load_bc_params(const std::string& path) {
  const json j = read_json_file(path);
  try {
    return bc_params_from_json(j);
  } catch (const ValidationError& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

Complex parse_complex(const std::string& text) {
  std::istringstream in(text);
  in.imbue(std::locale::classic());
  double re = 0.0;
  double im = 0.0;
  in >> re;
  if (!in) throw ValidationError("cannot parse complex number '" + text + "'");
  if (!in.eof()) {
    char comma = 0;
    in >> comma >> im;
    if (comma != ',' || !in) throw ValidationError("cannot parse complex number '" + text + "'");
    in >> std::ws;
    if (!in.eof()) throw ValidationError("trailing characters in complex number '" + text + "'");
  }
  if (!std::isfinite(re) || !std::isfinite(im)) throw ValidationError("complex number must be finite");
  return {re, im};
}

}  // namespace fwcs
