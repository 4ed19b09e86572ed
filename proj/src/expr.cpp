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

#include "logderiv/expr.hpp"

#include <cctype>

#include "logderiv/series.hpp"

namespace logderiv {
namespace {

class Parser {
public:
    Parser(std::string_view text, int alphabet) : s_(text), alphabet_(alphabet) {}

    Expr parse() {
        Expr e = expr();
        skip();
        if (pos_ < s_.size())
            fail(std::string("unexpected '") + s_[pos_] + "'");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_ + 1); }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) {
            if (pos_ >= s_.size())
                fail(std::string("expected '") + c + "' but input ended");
            fail(std::string("expected '") + c + "'");
        }
    }

    static Expr node(Expr::Kind k, Expr a, Expr b) {
        Expr e;
        e.kind = k;
        e.children.push_back(std::move(a));
        e.children.push_back(std::move(b));
        return e;
    }

    Expr expr() {
        Expr lhs = term();
        for (;;) {
            if (accept('+'))
                lhs = node(Expr::Kind::sum, std::move(lhs), term());
            else if (accept('-'))
                lhs = node(Expr::Kind::difference, std::move(lhs), term());
            else
                return lhs;
        }
    }

    Expr term() {
        Expr lhs = factor();
        while (accept('*')) {
            auto kind = lhs.kind == Expr::Kind::rational ? Expr::Kind::scale : Expr::Kind::product;
            lhs = node(kind, std::move(lhs), factor());
        }
        return lhs;
    }

    std::string digits() {
        std::string out;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            out += s_[pos_++];
        return out;
    }

    Expr rational() {
        std::string text;
        if (s_[pos_] == '-') {
            text = "-";
            ++pos_;
            skip();
            if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                fail("expected digits after '-'");
        }
        text += digits();
        skip();
        if (pos_ < s_.size() && s_[pos_] == '/') {
            ++pos_;
            skip();
            const std::size_t start = pos_;
            std::string den = digits();
            if (den.empty())
                fail("expected a positive denominator");
            if (den.find_first_not_of('0') == std::string::npos)
                throw ParseError("denominator must be positive", start + 1);
            text += "/" + den;
        }
        Expr e;
        e.kind = Expr::Kind::rational;
        e.value = Rational::parse(text);
        return e;
    }

    Expr factor() {
        skip();
        if (pos_ >= s_.size())
            fail("unexpected end of input");
        const char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '-')
            return rational();
        if (c == '[') {
            ++pos_;
            Expr a = expr();
            expect(',');
            Expr b = expr();
            expect(']');
            return node(Expr::Kind::bracket, std::move(a), std::move(b));
        }
        if (c == '(') {
            ++pos_;
            Expr e;
            e.kind = Expr::Kind::group;
            e.children.push_back(expr());
            expect(')');
            return e;
        }
        if (s_.substr(pos_, 3) == "exp") {
            pos_ += 3;
            expect('(');
            Expr e;
            e.kind = Expr::Kind::exp;
            e.children.push_back(expr());
            expect(')');
            return e;
        }
        if (c >= 'a' && c <= 'z') {
            if (c - 'a' >= alphabet_)
                fail(std::string("unknown letter '") + c + "' for alphabet size " +
                     std::to_string(alphabet_));
            ++pos_;
            Expr e;
            e.kind = Expr::Kind::letter;
            e.letter = static_cast<Letter>(c - 'a');
            return e;
        }
        fail(std::string("unexpected '") + c + "'");
    }

    std::string_view s_;
    int alphabet_;
    std::size_t pos_ = 0;
};

} // namespace

Expr parse_expr(std::string_view text, int alphabet) {
    if (alphabet < 1 || alphabet > static_cast<int>(kMaxAlphabet))
        throw std::invalid_argument("alphabet size must be between 1 and 26");
    return Parser(text, alphabet).parse();
}

std::string print_expr(const Expr& e) {
    using K = Expr::Kind;
    switch (e.kind) {
    case K::letter:
        return std::string(1, static_cast<char>('a' + e.letter));
    case K::rational:
        return e.value.str();
    case K::sum:
        return print_expr(e.children[0]) + " + " + print_expr(e.children[1]);
    case K::difference:
        return print_expr(e.children[0]) + " - " + print_expr(e.children[1]);
    case K::scale:
    case K::product:
        return print_expr(e.children[0]) + "*" + print_expr(e.children[1]);
    case K::bracket:
        return "[" + print_expr(e.children[0]) + ", " + print_expr(e.children[1]) + "]";
    case K::exp:
        return "exp(" + print_expr(e.children[0]) + ")";
    case K::group:
        return "(" + print_expr(e.children[0]) + ")";
    }
    return {};
}

TensorElt evaluate(const Expr& e, int max_degree) {
    using K = Expr::Kind;
    switch (e.kind) {
    case K::letter:
        return truncate(TensorElt::letter(e.letter), max_degree);
    case K::rational:
        return TensorElt::scalar(e.value);
    case K::sum:
        return evaluate(e.children[0], max_degree) + evaluate(e.children[1], max_degree);
    case K::difference:
        return evaluate(e.children[0], max_degree) - evaluate(e.children[1], max_degree);
    case K::scale:
        return e.children[0].value * evaluate(e.children[1], max_degree);
    case K::product:
        return concat_mul_truncated(evaluate(e.children[0], max_degree),
                                    evaluate(e.children[1], max_degree), max_degree);
    case K::bracket: {
        TensorElt a = evaluate(e.children[0], max_degree);
        TensorElt b = evaluate(e.children[1], max_degree);
        return concat_mul_truncated(a, b, max_degree) - concat_mul_truncated(b, a, max_degree);
    }
    case K::exp:
        return exp_series(evaluate(e.children[0], max_degree), max_degree);
    case K::group:
        return evaluate(e.children[0], max_degree);
    }
    return {};
}

} // namespace logderiv
