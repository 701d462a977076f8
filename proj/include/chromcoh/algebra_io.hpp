#pragma once

#include "chromcoh/algebra.hpp"

#include "json.hpp"

#include <optional>
#include <string>

namespace chromcoh {

struct AlgebraSpec {
    GradedAlgebra algebra;
    std::optional<Endomorphism> twist;
};

/// JSON algebra document: {"dim", "degrees", "mult"[i][j][k], "unit"?,
/// "twist"?[k][i]}. Integers may be JSON numbers or decimal strings.
AlgebraSpec parse_algebra_json(const nlohmann::json& doc, const std::string& name = "custom");

/// Builtin name, or path to a JSON algebra document.
AlgebraSpec load_algebra(const std::string& name_or_path);

/// "zero", "identity", or a path to a JSON document holding either a bare
/// m x m array or an object with a "twist" field.
Endomorphism load_twist(const std::string& name_or_path, const GradedAlgebra& a);

nlohmann::json algebra_to_json(const GradedAlgebra& a);

}  // namespace chromcoh
