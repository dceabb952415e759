#pragma once

#include "zpdlab/algebra.hpp"
#include "zpdlab/idempotents.hpp"

#include <stdexcept>
#include <string>

namespace zpdlab {

struct SpecError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One problem instance as read from a spec document: the algebra, a bimodule
// over it (default: the algebra on itself), a validated two-sided ideal
// (default: the whole algebra) and an idempotent family (default: the
// standard family when the basis consists of matrix units).
struct ProblemSetting {
    std::string name;
    Algebra algebra;
    Bimodule bimodule;
    Subspace ideal;
    IdempotentFamily family;
};

// JSON document, scalars as strings "a/b+c/d i". Fields:
//   algebra:  "matrix(n)" | "triangular(n)" | "block([n1,n2,...])" | "remark"
//             | {dim, unit, structure[, labels, units]}
//   bimodule: "regular" | "ambient" | "remark" | {dim, left, right}   (default regular)
//   ideal:    "full" | [row...] where a row is a basis label or a coordinate array
//   family:   "standard" | [element...] with elements as coordinate arrays
//   name:     free-form string
// Algebra and bimodule axioms are verified on load; the ideal is validated;
// all violations raise SpecError with the offending witness in the message.
ProblemSetting parse_spec(const std::string& text);
ProblemSetting parse_spec_file(const std::string& path);

}  // namespace zpdlab
