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
 // The tensor algebra T(X) over a finite alphabet, viewed as a graded connected
 // cocommutative Hopf algebra (concatenation product, unshuffling coproduct).


#ifndef LOGDERIV_TENSOR_HPP
#define LOGDERIV_TENSOR_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "logderiv/rational.hpp"

namespace logderiv {

using Letter = std::uint8_t;

// Letters print as a, b, c, ... so alphabets are capped at 26.
inline constexpr int kMaxAlphabet = 26;

// Hard ceiling on word length for anything that enumerates 2^n unshuffles.
inline constexpr int kMaxWordLength = 24;

class Word {
public:
    Word() = default;
    Word(std::initializer_list<Letter> letters) : letters_(letters) {}
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

    // "ab" -> {0, 1}; the empty string is the empty word.
    static Word parse(std::string_view text);

    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    Letter operator[](std::size_t i) const { return letters_[i]; }
    const std::vector<Letter>& letters() const { return letters_; }
    auto begin() const { return letters_.begin(); }
    auto end() const { return letters_.end(); }

    Word reversed() const;
    Word subword(std::size_t pos, std::size_t len) const;
    friend Word operator+(const Word& a, const Word& b);

    std::string str() const;

    // Shortlex: by length first, lexicographic within a length.
    friend std::strong_ordering operator<=>(const Word& a, const Word& b);
    friend bool operator==(const Word& a, const Word& b) = default;

private:
    std::vector<Letter> letters_;
};

/* Element of T(X): a finite Q-combination of words. The map keeps words in shortlex
 * order, which is the canonical order used for printing and serialization. */
class TensorElt : public LinearCombination<TensorElt, Word> {
public:
    TensorElt() = default;
    TensorElt(const Word& w, const Rational& c = Rational(1)) { add_term(w, c); }

    static TensorElt unit() { return TensorElt(Word{}); }
    static TensorElt scalar(const Rational& c) { return TensorElt(Word{}, c); }
    static TensorElt letter(Letter x) { return TensorElt(Word{x}); }
    static TensorElt word(std::string_view letters) { return TensorElt(Word::parse(letters)); }

    // -1 for the zero element.
    int max_degree() const;
    int min_degree() const;
    bool is_homogeneous() const;

    // "ab - ba", "1/2 ab + b", "0".
    std::string str() const;
};

TensorElt concat_mul(const TensorElt& a, const TensorElt& b);
// Drops every product word longer than max_degree.
TensorElt concat_mul_truncated(const TensorElt& a, const TensorElt& b, int max_degree);
inline TensorElt operator*(const TensorElt& a, const TensorElt& b) { return concat_mul(a, b); }

TensorElt degree_part(const TensorElt& a, int degree);
TensorElt truncate(const TensorElt& a, int max_degree);
TensorElt bracket(const TensorElt& a, const TensorElt& b);

// Hooks used by the graded algorithms in series.hpp.
inline TensorElt zero_like(const TensorElt&) { return TensorElt{}; }
inline TensorElt unit_like(const TensorElt&) { return TensorElt::unit(); }
inline int max_degree(const TensorElt& a) { return a.max_degree(); }
inline TensorElt mul_truncated(const TensorElt& a, const TensorElt& b, int n) {
    return concat_mul_truncated(a, b, n);
}

/* Element of T(X) (x) T(X). */
class TensorElt2 : public LinearCombination<TensorElt2, std::pair<Word, Word>> {
public:
    TensorElt2() = default;
    std::string str() const;
};

TensorElt2 tensor_product(const TensorElt& a, const TensorElt& b);
// Product in T(X) (x) T(X), taken componentwise.
TensorElt2 operator*(const TensorElt2& a, const TensorElt2& b);
TensorElt2 swap_factors(const TensorElt2& a);

TensorElt2 unshuffle(const Word& w);
TensorElt2 coproduct(const TensorElt& a);
// (Delta (x) id) and (id (x) Delta) flattened into triples, for coassociativity checks.
std::map<std::tuple<Word, Word, Word>, Rational> coproduct_left_twice(const TensorElt& a);
std::map<std::tuple<Word, Word, Word>, Rational> coproduct_right_twice(const TensorElt& a);

TensorElt antipode(const Word& w);
TensorElt antipode(const TensorElt& a);
// Coefficient of the empty word.
Rational counit(const TensorElt& a);

bool is_primitive(const TensorElt& a);
// Delta(g) = g (x) g in total degree <= max_degree, and the constant term is 1.
bool is_grouplike(const TensorElt& g, int max_degree);

/* Linear endomorphism of T(X), given by its action on words. The optional shift
 * records how many degrees the map raises (0 for graded maps). Endomorphisms are
 * cheap to copy; composite ones hold their operands by value. */
class GradedEndo {
public:
    using Action = std::function<TensorElt(const Word&)>;

    GradedEndo() = default;
    explicit GradedEndo(Action action, std::optional<int> degree_shift = 0)
        : action_(std::move(action)), shift_(degree_shift) {}

    TensorElt operator()(const Word& w) const { return action_(w); }
    TensorElt operator()(const TensorElt& a) const;
    std::optional<int> degree_shift() const { return shift_; }

private:
    Action action_;
    std::optional<int> shift_;
};

GradedEndo identity_endo();
GradedEndo antipode_endo();
// nu = unit o counit: projection onto T_0(X).
GradedEndo counit_endo();
GradedEndo graduation_endo();

// (f * g)(w) = sum over unshuffles u (x) v of f(u) g(v).
GradedEndo convolve(const GradedEndo& f, const GradedEndo& g);
GradedEndo compose(const GradedEndo& f, const GradedEndo& g);
GradedEndo operator+(const GradedEndo& f, const GradedEndo& g);
GradedEndo operator*(const Rational& c, const GradedEndo& f);

// Lyndon words and the bracketing basis of Lie(X).
bool is_lyndon(const Word& w);
std::vector<Word> lyndon_words(int alphabet_size, int degree);
// w = uv with v the longest proper Lyndon suffix.
std::pair<Word, Word> standard_factorization(const Word& w);
TensorElt lyndon_bracketing(const Word& w);

/* Coordinates of a Lie element in the Lyndon bracketing basis. Relies on the
 * triangularity P(w) = w + (larger words), so the smallest surviving word is
 * always Lyndon; throws std::invalid_argument when the input is not Lie. */
std::vector<std::pair<Word, Rational>> lyndon_coordinates(const TensorElt& lie);

// Rank over Q of a family of elements (Gaussian elimination on word coordinates).
std::size_t rank(std::span<const TensorElt> family);

// All words of the given length over the alphabet, in lexicographic order.
std::vector<Word> all_words(int alphabet_size, int length);

} // namespace logderiv

#endif // LOGDERIV_TENSOR_HPP
