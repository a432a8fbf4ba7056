// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.

#include "oplab/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace oplab::io {

using nlohmann::json;

namespace {

json pairs_from(const cxd* data, std::size_t count) {
  json arr = json::array();
  for (std::size_t i = 0; i < count; ++i) {
    if (!std::isfinite(data[i].real()) || !std::isfinite(data[i].imag()))
      throw std::domain_error("matrix io: non-finite entry");
    arr.push_back(json::array({data[i].real(), data[i].imag()}));
  }
  return arr;
}

std::vector<cxd> pairs_to(const json& arr) {
  if (!arr.is_array()) throw std::invalid_argument("matrix io: data must be an array");
  std::vector<cxd> out;
  out.reserve(arr.size());
  for (const json& p : arr) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number())
      throw std::invalid_argument("matrix io: entries must be [re, im] pairs");
    const double re = p[0].get<double>();
    const double im = p[1].get<double>();
    if (!std::isfinite(re) || !std::isfinite(im))
      throw std::domain_error("matrix io: non-finite entry");
    out.emplace_back(re, im);
  }
  return out;
}

json matrix_to_json_obj(const ComplexMatrix& m) {
  json doc;
  doc["rows"] = m.rows();
  doc["cols"] = m.cols();
  doc["data"] = pairs_from(m.data(), m.rows() * m.cols());
  return doc;
}

ComplexMatrix matrix_from_json_obj(const json& doc) {
  if (!doc.contains("rows") || !doc.contains("cols") || !doc.contains("data"))
    throw std::invalid_argument("matrix io: missing rows/cols/data");
  const auto rows = doc["rows"].get<std::size_t>();
  const auto cols = doc["cols"].get<std::size_t>();
  std::vector<cxd> entries = pairs_to(doc["data"]);
  if (entries.size() != rows * cols)
    throw std::invalid_argument("matrix io: data length != rows*cols");
  ComplexMatrix m(rows, cols);
  for (std::size_t i = 0; i < entries.size(); ++i) m.data()[i] = entries[i];
  return m;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

}  // namespace

std::string matrix_to_json(const ComplexMatrix& m) {
  return matrix_to_json_obj(m).dump(2);
}

ComplexMatrix matrix_from_json(const std::string& text) {
  return matrix_from_json_obj(json::parse(text));
}

std::string shift_to_json(const WeightedShift& s) {
  json doc;
  doc["n"] = s.n();
  doc["weights"] = pairs_from(s.weights().data(), s.weights().size());
  return doc.dump(2);
}

WeightedShift shift_from_json(const std::string& text) {
  const json doc = json::parse(text);
  if (!doc.contains("n") || !doc.contains("weights"))
    throw std::invalid_argument("shift io: missing n/weights");
  return WeightedShift(doc["n"].get<std::size_t>(), pairs_to(doc["weights"]));
}

std::string verdict_to_json(const SymmetryVerdict& v, double tau_yes,
                            double tau_no) {
  json doc;
  doc["status"] = to_string(v.status);
  doc["residual"] = v.residual;
  doc["tau_yes"] = tau_yes;
  doc["tau_no"] = tau_no;
  doc["restarts_used"] = v.restarts_used;
  doc["seed"] = v.seed;
  doc["certificate"] =
      v.certificate ? matrix_to_json_obj(*v.certificate) : json(nullptr);
  return doc.dump(2);
}

ComplexMatrix read_matrix_file(const std::string& path) {
  return matrix_from_json(slurp(path));
}

void write_matrix_file(const std::string& path, const ComplexMatrix& m) {
  spit(path, matrix_to_json(m) + "\n");
}

WeightedShift read_shift_file(const std::string& path) {
  return shift_from_json(slurp(path));
}

void write_shift_file(const std::string& path, const WeightedShift& s) {
  spit(path, shift_to_json(s) + "\n");
}

cxd parse_complex_token(const std::string& token) {
  const std::string t = token;
  if (t.empty()) throw std::invalid_argument("empty weight token");
  // Pure imaginary or real: "3", "-2.5", "i", "-i", "2i".
  // Mixed: "a+bi" / "a-bi" with the sign scanned from the right.
  auto parse_real = [](const std::string& s) -> double {
    std::size_t used = 0;
    double v;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad weight token: " + s);
    }
    if (used != s.size()) throw std::invalid_argument("bad weight token: " + s);
    return v;
  };
  auto parse_imag_coeff = [&](const std::string& s) -> double {
    if (s == "" || s == "+") return 1.0;
    if (s == "-") return -1.0;
    return parse_real(s);
  };

  if (t.back() == 'i' || t.back() == 'I') {
    const std::string body = t.substr(0, t.size() - 1);
    // split at the last top-level +/- that is not an exponent sign
    for (std::size_t pos = body.size(); pos-- > 1;) {
      const char c = body[pos];
      if ((c == '+' || c == '-') &&
          !(body[pos - 1] == 'e' || body[pos - 1] == 'E')) {
        return {parse_real(body.substr(0, pos)),
                parse_imag_coeff(body.substr(pos))};
      }
    }
    return {0.0, parse_imag_coeff(body)};
  }
  return {parse_real(t), 0.0};
}

WeightedShift shift_from_cli_spec(const std::string& spec) {
  std::vector<cxd> weights;
  std::string token;
  std::istringstream ss(spec);
  while (std::getline(ss, token, ',')) {
    // trim spaces
    const auto b = token.find_first_not_of(" \t");
    const auto e = token.find_last_not_of(" \t");
    if (b == std::string::npos)
      throw std::invalid_argument("empty weight in shift spec");
    weights.push_back(parse_complex_token(token.substr(b, e - b + 1)));
  }
  if (weights.empty()) throw std::invalid_argument("empty shift spec");
  const std::size_t n = weights.size() + 1;
  return WeightedShift(n, std::move(weights));
}

}  // namespace oplab::io
