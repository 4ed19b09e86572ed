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
 // Letter-induced derivations of T(X) and the twisted Dynkin operators D = S * delta.


#ifndef LOGDERIV_DYNKIN_HPP
#define LOGDERIV_DYNKIN_HPP

#include <optional>
#include <string_view>
#include <vector>

#include "logderiv/tensor.hpp"

namespace logderiv {

/* Derivation of T(X) induced by a linear map f: X -> span(X). images()[i][j] is the
 * coefficient of letter j in f(letter i). Such derivations preserve Lie(X). */
class LetterDerivation {
public:
    explicit LetterDerivation(std::vector<std::vector<Rational>> images);

    // Y, the graduation operator (f = Id).
    static LetterDerivation graduation(int alphabet_size);
    // delta_{x_i}: f(x_i) = x_i, f(x_j) = 0 otherwise.
    static LetterDerivation letter(int alphabet_size, Letter i);
    static LetterDerivation diagonal(std::vector<Rational> scalars);

    /* "Y", "letter:<c>" or "diag:<q1>,<q2>,..." (diagonal entries beyond those given
     * are zero; giving more entries than letters is an error). */
    static LetterDerivation parse(std::string_view spec, int alphabet_size);

    int alphabet_size() const { return static_cast<int>(images_.size()); }
    const std::vector<std::vector<Rational>>& images() const { return images_; }
    TensorElt image(Letter x) const;

    // Diagonal entries when f is diagonal, nothing otherwise.
    std::optional<std::vector<Rational>> diagonal_entries() const;
    // Eigenvalue on a word, for diagonal derivations.
    Rational eigenvalue(const Word& w) const;

    TensorElt operator()(const TensorElt& a) const;

    // Throws NotInvertibleError unless diagonal with no zero eigenvalue on degrees 1..max_degree.
    void require_invertible(int max_degree) const;

private:
    std::vector<std::vector<Rational>> images_;
};

TensorElt apply_derivation(const LetterDerivation& f, const TensorElt& a);

// [...[[f(y_1), y_2], y_3] ..., y_n]; zero on the empty word.
TensorElt dynkin_bracket(const LetterDerivation& f, const Word& w);
TensorElt dynkin_bracket(const LetterDerivation& f, const TensorElt& a);

// (S * f)(a), evaluated through the unshuffling coproduct. Diagonal f on words of
// up to 12 letters takes an integer-accumulating fast path.
TensorElt dynkin_convolution(const LetterDerivation& f, const TensorElt& a);
// The same map through the generic convolution of graded endomorphisms.
TensorElt dynkin_convolution_reference(const LetterDerivation& f, const TensorElt& a);

// (S * delta)(a) for an arbitrary linear map delta given on elements.
TensorElt log_derivative(const TensorElt& a, const std::function<TensorElt(const TensorElt&)>& delta);

// Number of occurrences of each letter.
std::vector<int> multidegree(const Word& w, int alphabet_size);

struct ProjectionMode {
    enum class Kind { classical, per_letter };
    Kind kind = Kind::classical;
    Letter letter = 0;

    static ProjectionMode classical() { return {}; }
    static ProjectionMode per_letter(Letter i) { return {Kind::per_letter, i}; }
    // "classical" or "letter:<c>".
    static ProjectionMode parse(std::string_view spec, int alphabet_size);
};

/* D/n, projecting the homogeneous component of degree n (total length in classical mode,
 * multiplicity of the chosen letter otherwise) onto its Lie part. */
TensorElt lie_project(const TensorElt& a, ProjectionMode mode, int alphabet_size);

} // namespace logderiv

#endif // LOGDERIV_DYNKIN_HPP
