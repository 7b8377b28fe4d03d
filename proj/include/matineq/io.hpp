#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "matineq/matrix.hpp"

namespace matineq {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// { "rows": n, "cols": m, "re": [...], "im": [...] }, row-major.
nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j);

}  // namespace matineq
