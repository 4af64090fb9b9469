#pragma once

// Evaluator for the pair/m-value expression grammar of the algebra command:
//
//   expr    := term (('+' | '-') term)*
//   term    := factor ('*' factor)*
//   factor  := scalar '^' '(' ... ')' | primary
//   primary := pair | m-value literal | dist(expr, expr) | dim(expr)
//            | '(' expr ')'
//   pair    := '(' scale ',' m-value ')'      e.g. (1/2,3) or (0+,w)
//
// "c^(pair)" applies the scalar rule (count raised to c); "2^(m-value)" is
// the base-2 power of the value class. Arithmetic errors are rethrown with
// the position of the operator that raised them.

#include <string>
#include <string_view>
#include <variant>

#include "setmeter/size_pair.hpp"

namespace setmeter {

struct AlgebraValue {
  std::variant<MValue, SizePair, double> value;

  const char* type_name() const;
  std::string to_text() const;
};

AlgebraValue eval_algebra(std::string_view expression);

}  // namespace setmeter
