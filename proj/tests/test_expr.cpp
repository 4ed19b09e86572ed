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

#include <fstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "logderiv/expr.hpp"
#include "logderiv/series.hpp"
#include "support.hpp"

using namespace logderiv;
using oracle::w;

namespace {

std::vector<std::string> corpus() {
    std::ifstream in(std::string(LOGDERIV_TEST_DATA) + "/expressions.txt");
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);)
        if (!line.empty())
            lines.push_back(line);
    return lines;
}

TensorElt eval(const std::string& s, int n = 6) { return evaluate(parse_expr(s, 3), n); }

std::size_t error_column(const std::string& s, int alphabet = 2) {
    try {
        parse_expr(s, alphabet);
    } catch (const ParseError& e) {
        return e.column();
    }
    return 0;
}

} // namespace

TEST_CASE("spec examples") {
    CHECK(parse_expr("[a,b]", 2).kind == Expr::Kind::bracket);
    CHECK(eval("[a,b]") == w("ab") - w("ba"));
    Expr e = parse_expr("1/2*a*b + b", 2);
    CHECK(e.kind == Expr::Kind::sum);
    CHECK(e.children[0].kind == Expr::Kind::product);
    CHECK(e.children[0].children[0].kind == Expr::Kind::scale);
    CHECK(eval("1/2*a*b + b") == Rational(1, 2) * w("ab") + w("b"));
    CHECK(error_column("[a") == 3);
}

TEST_CASE("syntax errors report a 1-based column") {
    CHECK(error_column("") == 1);
    CHECK(error_column("a +") == 4);
    CHECK(error_column("a b") == 3);
    CHECK(error_column("(a") == 3);
    CHECK(error_column("[a,b") == 5);
    CHECK(error_column("exp a") == 5);
    CHECK(error_column("1/0") == 3);
    CHECK(error_column("1/") == 3);
    CHECK(error_column("a * ?") == 5);
    CHECK(error_column("- a") == 3);
    CHECK(error_column("c") == 1);
    CHECK(error_column("a + c", 3) == 0);
    CHECK(error_column("A") == 1);
}

TEST_CASE("unknown letters are rejected") {
    std::string msg;
    try {
        parse_expr("a + d", 3);
    } catch (const ParseError& e) {
        msg = e.what();
    }
    CHECK(msg.find("unknown letter 'd'") != std::string::npos);
    CHECK(msg.find("column 5") != std::string::npos);
}

TEST_CASE("precedence, associativity and whitespace") {
    CHECK(eval("a + b*a") == w("a") + w("ba"));
    CHECK(eval("(a + b)*a") == w("aa") + w("ba"));
    CHECK(eval("a - b - a") == Rational(-1) * w("b"));
    CHECK(eval(" [ a ,b ]*c ") == eval("[a,b]*c"));
    CHECK(eval("2*3*a") == Rational(6) * w("a"));
    CHECK(eval("a--1") == w("a") + TensorElt::unit());
    CHECK(eval("- 2") == TensorElt::scalar(Rational(-2)));
    CHECK(eval("10/4") == TensorElt::scalar(Rational(5, 2)));
}

TEST_CASE("evaluation truncates and exponentiates") {
    CHECK(eval("a*b*c", 2).is_zero());
    CHECK(eval("exp(a)", 3) == TensorElt::unit() + w("a") + Rational(1, 2) * w("aa") + Rational(1, 6) * w("aaa"));
    CHECK(eval("exp(a)*exp(-1*a)", 5) == TensorElt::unit());
    CHECK(eval("exp([a,b])", 4) == exp_series(w("ab") - w("ba"), 4));
    CHECK_THROWS_AS(eval("exp(1 + a)"), std::invalid_argument);
    CHECK(eval("[a, b*c] - [a, b]*c - b*[a, c]").is_zero());
}

TEST_CASE("printing") {
    CHECK(print_expr(parse_expr("  [a ,b]", 2)) == "[a, b]");
    CHECK(print_expr(parse_expr("1/2*a*b+b", 2)) == "1/2*a*b + b");
    CHECK(print_expr(parse_expr("exp((a))", 2)) == "exp((a))");
    CHECK(print_expr(parse_expr("a--1/2", 2)) == "a - -1/2");
    CHECK(print_expr(parse_expr("4/6", 2)) == "2/3");
}

TEST_CASE("round trip over the corpus") {
    auto lines = corpus();
    CHECK(lines.size() == 50);
    for (const auto& s : lines) {
        INFO(s);
        Expr e = parse_expr(s, 3);
        CHECK(parse_expr(print_expr(e), 3) == e);
        CHECK(print_expr(parse_expr(print_expr(e), 3)) == print_expr(e));
        CHECK(evaluate(parse_expr(print_expr(e), 3), 4) == evaluate(e, 4));
    }
}
