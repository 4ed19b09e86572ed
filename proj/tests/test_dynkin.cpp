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

#include <random>

#include "doctest.h"
#include "logderiv/dynkin.hpp"
#include "logderiv/magnus.hpp"
#include "support.hpp"

using namespace logderiv;
using oracle::w;

namespace {

// Non-diagonal derivation swapping a and b.
LetterDerivation swap_ab() { return LetterDerivation({{Rational(0), Rational(1)}, {Rational(1), Rational(0)}}); }

TensorElt random_element(std::mt19937_64& rng, int max_len) {
    TensorElt a;
    for (int t = 0; t < 3; ++t) {
        std::vector<Letter> s(rng() % static_cast<unsigned>(max_len + 1));
        for (auto& x : s)
            x = static_cast<Letter>(rng() % 2);
        a += Rational(static_cast<long>(rng() % 7) - 3, static_cast<long>(rng() % 3) + 1) * TensorElt(Word(s));
    }
    return a;
}

} // namespace

TEST_CASE("derivation specs") {
    CHECK(LetterDerivation::parse("Y", 2).diagonal_entries() == std::vector<Rational>{Rational(1), Rational(1)});
    CHECK(LetterDerivation::parse("letter:b", 3).diagonal_entries() ==
          std::vector<Rational>{Rational(0), Rational(1), Rational(0)});
    CHECK(LetterDerivation::parse("diag:2,-1/2", 2).diagonal_entries() ==
          std::vector<Rational>{Rational(2), Rational(-1, 2)});
    CHECK(LetterDerivation::parse("diag:3", 2).diagonal_entries() == std::vector<Rational>{Rational(3), Rational(0)});
    for (const char* bad : {"y", "letter:c", "letter:", "diag:", "diag:1,2,3", "diag:1,x", "grad"})
        CHECK_THROWS_AS(LetterDerivation::parse(bad, 2), ParseError);
    CHECK_FALSE(swap_ab().diagonal_entries());
    CHECK_THROWS(LetterDerivation({{Rational(1)}, {Rational(1), Rational(0)}}));
}

TEST_CASE("derivations obey the Leibniz rule") {
    std::mt19937_64 rng(1);
    const std::vector<LetterDerivation> fs{LetterDerivation::graduation(2), swap_ab(),
                                           LetterDerivation::diagonal({Rational(2), Rational(-1, 3)})};
    for (int s = 0; s < 30; ++s) {
        TensorElt x = random_element(rng, 3), y = random_element(rng, 3);
        for (const auto& f : fs)
            CHECK(f(x * y) == f(x) * y + x * f(y));
    }
    CHECK(LetterDerivation::graduation(2)(w("aba")) == Rational(3) * w("aba"));
    CHECK(swap_ab()(w("ab")) == w("bb") + w("aa"));
}

TEST_CASE("eigenvalues and invertibility") {
    auto d = LetterDerivation::diagonal({Rational(1), Rational(-1)});
    CHECK(d.eigenvalue(Word::parse("aab")) == Rational(1));
    CHECK_NOTHROW(d.require_invertible(1));
    CHECK_THROWS_AS(d.require_invertible(2), NotInvertibleError);
    CHECK_NOTHROW(LetterDerivation::diagonal({Rational(1), Rational(2)}).require_invertible(10));
    CHECK_THROWS_AS(swap_ab().require_invertible(2), std::invalid_argument);
}

TEST_CASE("D(ab) = [a,b] and the bracket form on small words") {
    auto y = LetterDerivation::graduation(2);
    CHECK(dynkin_convolution(y, w("ab")) == w("ab") - w("ba"));
    CHECK(dynkin_bracket(y, Word::parse("abb")) ==
          oracle::commutator(oracle::commutator(w("a"), w("b")), w("b")));
    CHECK(dynkin_bracket(y, Word{}).is_zero());
    CHECK(dynkin_convolution(y, TensorElt::unit()).is_zero());
    CHECK(dynkin_convolution(LetterDerivation::letter(2, 1), w("ab")).is_zero());
    CHECK(dynkin_convolution(LetterDerivation::letter(2, 0), w("ab")) == w("ab") - w("ba"));
}

TEST_CASE("fast kernel, generic convolution and left-normed brackets agree") {
    std::mt19937_64 rng(7);
    std::vector<LetterDerivation> fs{LetterDerivation::graduation(2), LetterDerivation::letter(2, 0),
                                     LetterDerivation::diagonal({Rational(3, 2), Rational(-2)})};
    for (int len = 0; len <= 6; ++len)
        for (const Word& word : oracle::words(2, len))
            for (const auto& f : fs) {
                TensorElt fast = dynkin_convolution(f, TensorElt(word));
                CHECK(fast == dynkin_convolution_reference(f, TensorElt(word)));
                CHECK(fast == dynkin_bracket(f, word));
            }
    // a non-diagonal derivation only has the generic path
    for (int len = 0; len <= 5; ++len)
        for (const Word& word : oracle::words(2, len)) {
            TensorElt r = dynkin_convolution(swap_ab(), TensorElt(word));
            CHECK(r == dynkin_bracket(swap_ab(), word));
            if (!r.is_zero())
                CHECK(is_primitive(r));
        }
}

TEST_CASE("log_derivative with a derivation given as a function") {
    auto f = LetterDerivation::diagonal({Rational(2), Rational(5)});
    for (const Word& word : oracle::words(2, 4))
        CHECK(log_derivative(TensorElt(word), [&](const TensorElt& x) { return f(x); }) ==
              dynkin_convolution(f, TensorElt(word)));
}

TEST_CASE("D(l) = n l and D_{x_i}(l) = mult_i l on Lyndon brackets") {
    for (int n = 1; n <= 5; ++n)
        for (const Word& word : lyndon_words(3, n)) {
            TensorElt l = lyndon_bracketing(word);
            CHECK(dynkin_operator(l) == Rational(n) * l);
            auto m = multidegree(word, 3);
            for (Letter i = 0; i < 3; ++i)
                CHECK(dynkin_convolution(LetterDerivation::letter(3, i), l) == Rational(m[i]) * l);
        }
    CHECK(multidegree(Word::parse("abca"), 3) == std::vector<int>{2, 1, 1});
    CHECK_THROWS(multidegree(Word::parse("c"), 2));
}

TEST_CASE("Lie projections") {
    CHECK(lie_project(w("ab"), ProjectionMode::classical(), 2) == Rational(1, 2) * (w("ab") - w("ba")));
    CHECK(lie_project(w("ab"), ProjectionMode::per_letter(0), 2) == w("ab") - w("ba"));
    CHECK(lie_project(TensorElt{}, ProjectionMode::classical(), 2).is_zero());

    std::mt19937_64 rng(3);
    for (int s = 0; s < 20; ++s) {
        TensorElt a = degree_part(random_element(rng, 4), 4);
        if (a.is_zero())
            continue;
        TensorElt p = lie_project(a, ProjectionMode::classical(), 2);
        CHECK(is_primitive(p));
        CHECK(lie_project(p, ProjectionMode::classical(), 2) == p);
    }
    CHECK_THROWS_AS(lie_project(w("a") + w("ab"), ProjectionMode::classical(), 2), std::invalid_argument);
    CHECK_THROWS_AS(lie_project(TensorElt::unit(), ProjectionMode::classical(), 2), std::invalid_argument);
    CHECK_THROWS_AS(lie_project(w("bb"), ProjectionMode::per_letter(0), 2), std::invalid_argument);
    CHECK(ProjectionMode::parse("letter:b", 2).letter == 1);
    CHECK_THROWS_AS(ProjectionMode::parse("letter", 2), ParseError);
}
