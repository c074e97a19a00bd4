#pragma once

#include <string>
#include <variant>

#include "brauer/algebra.hpp"
#include "brauer/fields.hpp"
#include "brauer/padic.hpp"
#include "brauer/rational.hpp"

namespace brauer {

using AnyAlgebra = std::variant<StructureConstantAlgebra<Rat>, StructureConstantAlgebra<FpElem>,
                                StructureConstantAlgebra<PadicNumber>>;

/// Schema: {"field": "Q" | {"Fp": p} | {"Qp": {"p": p, "N": n}},
///          "dim": n, "one": [...], "table": [[[...]]]}
/// Scalars are "num/den" strings over Q and Q_p (exact unit*p^v form) and
/// plain integers over F_p. Validation errors propagate from make_algebra.
AnyAlgebra algebra_from_json(const std::string& text);

/// Canonical emission; parse-emit round-trips are byte-identical.
std::string algebra_to_json(const AnyAlgebra& a);

}  // namespace brauer
