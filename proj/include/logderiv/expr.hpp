/* Copyright 2026 The logderiv Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */
 // Expression language for elements of T(X):
 //   expr   := term (('+'|'-') term)*
 //   term   := factor ('*' factor)*
 //   factor := rational | letter | '[' expr ',' expr ']' | 'exp' '(' expr ')' | '(' expr ')'
 //   rational := int ('/' posint)?


#ifndef LOGDERIV_EXPR_HPP
#define LOGDERIV_EXPR_HPP

#include <string>
#include <string_view>
#include <vector>

#include "logderiv/rational.hpp"
#include "logderiv/tensor.hpp"

namespace logderiv {

struct Expr {
    enum class Kind { letter, rational, sum, difference, scale, product, bracket, exp, group };

    Kind kind = Kind::rational;
    Letter letter = 0;
    Rational value;
    std::vector<Expr> children;

    friend bool operator==(const Expr& a, const Expr& b) = default;
};

// Throws ParseError with a 1-based column on syntax errors and on letters
// outside the first `alphabet` letters.
Expr parse_expr(std::string_view text, int alphabet);

// Prints in a form that parses back to the same tree.
std::string print_expr(const Expr& e);

// Value in T(X) truncated at max_degree. exp of an argument with a constant
// term throws std::invalid_argument.
TensorElt evaluate(const Expr& e, int max_degree);

} // namespace logderiv

#endif // LOGDERIV_EXPR_HPP
