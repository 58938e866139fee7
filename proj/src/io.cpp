#include "dicke/io.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <sstream>

#include "dicke/states.hpp"

namespace dicke {

using nlohmann::json;

namespace {

double number(const json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  const json& v = j.at(key);
  if (!v.is_number()) throw ParseError(std::string("field '") + key + "' must be a number");
  return v.get<double>();
}

Complex complex_pair(const json& v) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
    throw ParseError("complex entries must be [re, im] pairs");
  return {v[0].get<double>(), v[1].get<double>()};
}

QubitVector qubit(const json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  const json& v = j.at(key);
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (s == "1" || s == "excited") return QubitVector::excited();
    if (s == "0" || s == "ground") return QubitVector::ground();
    throw ParseError("qubit shorthand must be \"0\"/\"ground\" or \"1\"/\"excited\"");
  }
  if (!v.is_array() || v.size() != 2) throw ParseError("qubit must be two [re, im] amplitudes");
  return QubitVector(complex_pair(v[0]), complex_pair(v[1]));
}

BellState bell_name(const std::string& s) {
  for (auto b : {BellState::PhiPlus, BellState::PhiMinus, BellState::PsiPlus, BellState::PsiMinus})
    if (s == to_string(b)) return b;
  throw ParseError("unknown Bell state '" + s + "'");
}

int bit(const json& j, const char* key) {
  const double v = number(j, key);
  if (v != 0.0 && v != 1.0) throw ParseError(std::string("field '") + key + "' must be 0 or 1");
  return static_cast<int>(v);
}

DensityMatrix from_family(const std::string& family, const json& j) {
  if (family == "product") return product_state(qubit(j, "psi"), qubit(j, "phi"));
  if (family == "bell") {
    if (!j.contains("which") || !j["which"].is_string()) throw ParseError("bell needs 'which'");
    return bell(bell_name(j["which"].get<std::string>()));
  }
  if (family == "mes") return mes(number(j, "a"), number(j, "theta1"), number(j, "theta2"));
  if (family == "bell_diagonal") {
    if (!j.contains("p") || !j["p"].is_array() || j["p"].size() != 4)
      throw ParseError("bell_diagonal needs 'p' with four weights");
    const json& p = j["p"];
    for (const auto& x : p)
      if (!x.is_number()) throw ParseError("bell_diagonal weights must be numbers");
    return bell_diagonal(p[0].get<double>(), p[1].get<double>(), p[2].get<double>(),
                         p[3].get<double>());
  }
  if (family == "werner") return werner(number(j, "p"));
  if (family == "mems") return mems(MemsDelta(number(j, "delta")));
  if (family == "basis") return basis_state(bit(j, "a"), bit(j, "b"));
  throw ParseError("unknown state family '" + family + "'");
}

}  // namespace

StateFile parse_state(const json& j) {
  if (!j.is_object()) throw ParseError("state file must be a JSON object");
  if (j.contains("matrix")) {
    const json& m = j["matrix"];
    if (!m.is_array() || m.size() != 16)
      throw ParseError("'matrix' must hold 16 [re, im] pairs in row-major order");
    ComplexMatrix4 out;
    for (int i = 0; i < 16; ++i) out(i / 4, i % 4) = complex_pair(m[i]);
    return {validate_state(out), ""};
  }
  if (j.contains("family")) {
    if (!j["family"].is_string()) throw ParseError("'family' must be a string");
    const auto family = j["family"].get<std::string>();
    return {from_family(family, j), family};
  }
  throw ParseError("state file needs either 'matrix' or 'family'");
}

StateFile parse_state(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return parse_state(j);
}

StateFile parse_state(const char* text) { return parse_state(std::string(text)); }

StateFile read_state_file(const std::string& path) {
  std::stringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open state file '" + path + "'");
    buf << in.rdbuf();
  }
  return parse_state(buf.str());
}

json state_to_json(const DensityMatrix& rho) {
  json m = json::array();
  for (int i = 0; i < 16; ++i) {
    const Complex c = rho(i / 4, i % 4);
    m.push_back(json::array({c.real(), c.imag()}));
  }
  return json{{"matrix", m}};
}

std::string write_state(const DensityMatrix& rho) { return state_to_json(rho).dump(2); }

std::size_t Table::column(const std::string& name) const {
  for (std::size_t i = 0; i < columns.size(); ++i)
    if (columns[i] == name) return i;
  throw InvalidParameter("no column named '" + name + "'");
}

std::vector<double> Table::values(const std::string& name) const {
  const std::size_t c = column(name);
  std::vector<double> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(r[c]);
  return out;
}

Table TimeSeries::to_table() const {
  Table t;
  t.columns = {"t", "concurrence"};
  const bool with_rho =
      !records.empty() && std::all_of(records.begin(), records.end(),
                                      [](const TimeRecord& r) { return r.rho.has_value(); });
  if (with_rho) {
    for (int j = 1; j <= 4; ++j)
      for (int k = 1; k <= 4; ++k) {
        t.columns.push_back("rho_re_" + std::to_string(j) + std::to_string(k));
        t.columns.push_back("rho_im_" + std::to_string(j) + std::to_string(k));
      }
  }
  for (const auto& r : records) {
    std::vector<double> row{r.t, r.concurrence};
    if (with_rho)
      for (int i = 0; i < 16; ++i) {
        const Complex c = (*r.rho)(i / 4, i % 4);
        row.push_back(c.real());
        row.push_back(c.imag());
      }
    t.rows.push_back(std::move(row));
  }
  t.metadata = {{"scenario", scenario}, {"gamma0", gamma0},   {"g", g},
                {"t_max", t_max},       {"samples", samples}, {"method", method}};
  return t;
}

std::optional<OutputFormat> parse_format(const std::string& name) {
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  return std::nullopt;
}

void write_csv(std::ostream& os, const Table& table) {
  const auto old = os.precision(std::numeric_limits<double>::max_digits10);
  for (std::size_t i = 0; i < table.columns.size(); ++i)
    os << (i ? "," : "") << table.columns[i];
  os << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
    os << '\n';
  }
  os.precision(old);
}

void write_json(std::ostream& os, const Table& table) {
  json j{{"metadata", table.metadata}, {"columns", table.columns}, {"rows", table.rows}};
  os << j.dump(2) << '\n';
}

void write_table(std::ostream& os, const Table& table, OutputFormat format) {
  if (format == OutputFormat::Csv)
    write_csv(os, table);
  else
    write_json(os, table);
}

}  // namespace dicke
