#include "dilatekit/json_io.hpp"

#include <cmath>
#include <fstream>
#include <limits>

namespace dilatekit {

namespace {

const Json& member(const Json& j, const std::string& path, const char* key) {
  if (!j.is_object()) throw InputError(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(path + "." + key, "missing field");
  return *it;
}

std::size_t positive_int(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) throw InputError(path, "expected an integer");
  if (j.is_number_unsigned()) {
    const auto v = j.get<std::uint64_t>();
    if (v == 0) throw InputError(path, "must be positive");
    return static_cast<std::size_t>(v);
  }
  const auto v = j.get<std::int64_t>();
  if (v <= 0) throw InputError(path, "must be positive, got " + std::to_string(v));
  return static_cast<std::size_t>(v);
}

double finite_number(const Json& j, const std::string& path) {
  if (!j.is_number()) throw InputError(path, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw InputError(path, "must be finite");
  return v;
}

}  // namespace

InputError::InputError(const std::string& field, const std::string& problem)
    : std::runtime_error(field + ": " + problem), field_(field) {}

Json to_json(const ComplexMatrix& m) {
  Json entries = Json::array();
  for (const auto& z : m.entries()) entries.push_back(Json::array({z.real(), z.imag()}));
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

ComplexMatrix matrix_from_json(const Json& j, const std::string& path) {
  const std::size_t rows = positive_int(member(j, path, "rows"), path + ".rows");
  const std::size_t cols = positive_int(member(j, path, "cols"), path + ".cols");
  const Json& entries = member(j, path, "entries");
  const std::string entries_path = path + ".entries";
  if (!entries.is_array()) throw InputError(entries_path, "expected an array");
  if (rows > std::numeric_limits<std::size_t>::max() / cols || entries.size() != rows * cols) {
    throw InputError(entries_path, "expected " + std::to_string(rows) + "x" +
                                       std::to_string(cols) + " = " +
                                       std::to_string(rows * cols) + " entries, got " +
                                       std::to_string(entries.size()));
  }
  std::vector<Complex> values;
  values.reserve(entries.size());
  for (std::size_t k = 0; k < entries.size(); ++k) {
    const std::string at = entries_path + "[" + std::to_string(k) + "]";
    const Json& pair = entries[k];
    if (!pair.is_array() || pair.size() != 2) throw InputError(at, "expected [re, im]");
    values.emplace_back(finite_number(pair[0], at + "[0]"), finite_number(pair[1], at + "[1]"));
  }
  return {rows, cols, std::move(values)};
}

Json to_json(const Block2x2& b) {
  return Json{{"splits", {{"row", b.row_split()}, {"col", b.col_split()}}},
              {"matrix", to_json(b.assembled())}};
}

Block2x2 block_from_json(const Json& j, const std::string& path) {
  const Json& splits = member(j, path, "splits");
  const std::string sp = path + ".splits";
  const std::size_t row = positive_int(member(splits, sp, "row"), sp + ".row");
  const std::size_t col = positive_int(member(splits, sp, "col"), sp + ".col");
  const ComplexMatrix m = matrix_from_json(member(j, path, "matrix"), path + ".matrix");
  if (row >= m.rows()) throw InputError(sp + ".row", "must be less than rows " + m.shape());
  if (col >= m.cols()) throw InputError(sp + ".col", "must be less than cols " + m.shape());
  return Block2x2::split(m, row, col);
}

Json to_json(const PowerDilation& d) {
  return Json{{"n_steps", d.n_steps}, {"dim_h", d.dim_h}, {"matrix", to_json(d.u)}};
}

PowerDilation power_dilation_from_json(const Json& j, const std::string& path) {
  const std::size_t n_steps = positive_int(member(j, path, "n_steps"), path + ".n_steps");
  const std::size_t dim_h = positive_int(member(j, path, "dim_h"), path + ".dim_h");
  ComplexMatrix u = matrix_from_json(member(j, path, "matrix"), path + ".matrix");
  if (!u.is_square() || u.rows() != (n_steps + 1) * dim_h) {
    throw InputError(path + ".matrix", "expected a square matrix of size (n_steps + 1)·dim_h = " +
                                           std::to_string((n_steps + 1) * dim_h) + ", got " +
                                           u.shape());
  }
  return {std::move(u), n_steps, dim_h};
}

Json to_json(const ResidualReport& r) {
  Json checks = Json::array();
  for (const Check& c : r.checks()) {
    checks.push_back(
        {{"name", c.name}, {"residual", c.residual}, {"tolerance", c.tolerance}, {"pass", c.pass}});
  }
  return Json{{"checks", std::move(checks)}};
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path, "cannot open file");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(path, std::string("invalid JSON: ") + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << j.dump(2) << '\n';
  if (!out) throw std::runtime_error("failed writing " + path);
}

}  // namespace dilatekit
