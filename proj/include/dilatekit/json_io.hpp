#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "dilatekit/dilation.hpp"
#include "dilatekit/power_dilation.hpp"
#include "dilatekit/report.hpp"

namespace dilatekit {

using Json = nlohmann::json;

/// Malformed input; the message names the offending field path.
class InputError : public std::runtime_error {
 public:
  InputError(const std::string& field, const std::string& problem);
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// {"rows": int, "cols": int, "entries": [[re, im], ...]} in row-major order.
Json to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& j, const std::string& path = "$");

/// {"splits": {"row": int, "col": int}, "matrix": <matrix>}.
Json to_json(const Block2x2& b);
Block2x2 block_from_json(const Json& j, const std::string& path = "$");

/// {"n_steps": int, "dim_h": int, "matrix": <matrix>}.
Json to_json(const PowerDilation& d);
PowerDilation power_dilation_from_json(const Json& j, const std::string& path = "$");

/// {"checks": [{"name", "residual", "tolerance", "pass"}, ...]}.
Json to_json(const ResidualReport& r);

/// Parse errors and unreadable files surface as InputError.
Json read_json_file(const std::string& path);
/// Throws std::runtime_error on I/O failure.
void write_json_file(const std::string& path, const Json& j);

}  // namespace dilatekit
