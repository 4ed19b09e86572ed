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
 // Enveloping algebras U(L) of finite graded Lie algebras given by structure
 // constants, with elements kept in Poincare-Birkhoff-Witt normal form.


#ifndef LOGDERIV_ENVELOPING_HPP
#define LOGDERIV_ENVELOPING_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "logderiv/rational.hpp"
#include "logderiv/tensor.hpp"

namespace logderiv {

using BasisIndex = std::uint16_t;

/* Element of L written in the basis of a presentation. */
class LieVector : public LinearCombination<LieVector, BasisIndex> {
public:
    LieVector() = default;
    LieVector(BasisIndex i, const Rational& c = Rational(1)) { add_term(i, c); }
};

class PresentationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct BasisElement {
    std::string name;
    int degree = 1;
};

struct BracketEntry {
    BasisIndex i = 0;
    BasisIndex j = 0;
    LieVector value; // [e_i, e_j]
};

/* Graded Lie algebra with basis e_0..e_{n-1}. Only [e_i, e_j] for i < j is stored;
 * missing entries are zero. The optional derivation is given by its images on the
 * basis. Construction validates degree additivity, the Jacobi identity and the
 * derivation law on every triple (pair) whose degrees sum to at most check_degree,
 * and throws PresentationError naming the first failure. */
class LiePresentation {
public:
    LiePresentation(std::vector<BasisElement> basis, std::vector<BracketEntry> brackets,
                    std::optional<std::vector<LieVector>> derivation = std::nullopt, int check_degree = -1);

    std::size_t dimension() const { return basis_.size(); }
    const BasisElement& basis(BasisIndex i) const { return basis_.at(i); }
    const std::vector<BasisElement>& basis() const { return basis_; }
    int degree(BasisIndex i) const { return basis_.at(i).degree; }
    int max_basis_degree() const { return max_degree_; }
    int check_degree() const { return check_degree_; }
    std::optional<BasisIndex> index_of(std::string_view name) const;

    LieVector bracket(BasisIndex i, BasisIndex j) const;
    LieVector bracket(const LieVector& x, const LieVector& y) const;
    const std::vector<BracketEntry>& bracket_table() const { return table_; }

    const std::optional<std::vector<LieVector>>& derivation() const { return derivation_; }
    LieVector apply_derivation(const LieVector& x) const;

private:
    void validate() const;

    std::vector<BasisElement> basis_;
    std::vector<BracketEntry> table_;
    std::map<std::pair<BasisIndex, BasisIndex>, LieVector> brackets_;
    std::optional<std::vector<LieVector>> derivation_;
    int max_degree_ = 0;
    int check_degree_ = 0;
};

using PresentationPtr = std::shared_ptr<const LiePresentation>;

// Nondecreasing sequence of basis indices; the empty monomial is the unit.
using Monomial = std::vector<BasisIndex>;

/* Element of U(L) in PBW normal form. Every element carries its presentation;
 * mixing elements of different presentations throws std::invalid_argument. */
class PBWElement : public LinearCombination<PBWElement, Monomial> {
public:
    explicit PBWElement(PresentationPtr p);
    PBWElement(PresentationPtr p, Monomial m, const Rational& c = Rational(1));

    static PBWElement unit(PresentationPtr p) { return PBWElement(std::move(p), Monomial{}); }
    static PBWElement generator(PresentationPtr p, BasisIndex i);
    static PBWElement from_lie(PresentationPtr p, const LieVector& x);

    const PresentationPtr& presentation() const { return pres_; }
    int degree(const Monomial& m) const;
    int max_degree() const;
    // The element as a vector of L, when it has only length-1 monomials.
    std::optional<LieVector> as_lie() const;

    std::string str() const;

    void check_compatible(const PBWElement& o) const;

private:
    PresentationPtr pres_;
};

PBWElement pbw_mul(const PBWElement& a, const PBWElement& b);
PBWElement pbw_mul_truncated(const PBWElement& a, const PBWElement& b, int max_degree);
inline PBWElement operator*(const PBWElement& a, const PBWElement& b) { return pbw_mul(a, b); }

enum class StraightenOrder { leftmost, rightmost };

/* Normal form of an arbitrary product e_{s_1} ... e_{s_k}, rewriting one adjacent
 * inversion e_j e_i (j > i) into e_i e_j + [e_j, e_i] at a time. Independent of the
 * multiplication routine above; used to check confluence. */
PBWElement straighten(const PresentationPtr& p, const std::vector<BasisIndex>& product, StraightenOrder order);

PBWElement degree_part(const PBWElement& a, int degree);
PBWElement truncate(const PBWElement& a, int max_degree);
PBWElement bracket(const PBWElement& a, const PBWElement& b);

inline PBWElement zero_like(const PBWElement& a) { return PBWElement(a.presentation()); }
inline PBWElement unit_like(const PBWElement& a) { return PBWElement::unit(a.presentation()); }
inline int max_degree(const PBWElement& a) { return a.max_degree(); }
inline PBWElement mul_truncated(const PBWElement& a, const PBWElement& b, int n) {
    return pbw_mul_truncated(a, b, n);
}

/* Element of U(L) (x) U(L). */
class PBWPair : public LinearCombination<PBWPair, std::pair<Monomial, Monomial>> {
public:
    explicit PBWPair(PresentationPtr p) : pres_(std::move(p)) {}
    const PresentationPtr& presentation() const { return pres_; }
    void check_compatible(const PBWPair& o) const;

private:
    PresentationPtr pres_;
};

PBWPair pbw_tensor(const PBWElement& a, const PBWElement& b);
PBWPair operator*(const PBWPair& a, const PBWPair& b);
PBWPair pbw_swap(const PBWPair& a);
PBWPair pbw_coproduct(const PBWElement& a);
PBWElement pbw_antipode(const PBWElement& a);
Rational pbw_counit(const PBWElement& a);

// (f * g)(a) = mu (f (x) g) Delta (a), f and g acting on single monomials.
PBWElement pbw_convolve(const std::function<PBWElement(const PBWElement&)>& f,
                        const std::function<PBWElement(const PBWElement&)>& g, const PBWElement& a);

bool is_primitive(const PBWElement& a);
bool is_grouplike(const PBWElement& g, int max_degree);

PBWElement exp_truncated(const PBWElement& l, int max_degree);
PBWElement log_truncated(const PBWElement& g, int max_degree);

// ad_l^k (x) = [l, [l, ... [l, x]]].
PBWElement ad_power(const PBWElement& l, int k, const PBWElement& x);

/* Derivation of L given on the basis, extended to U(L) by the Leibniz rule. */
class PBWDerivation {
public:
    explicit PBWDerivation(std::vector<LieVector> images) : images_(std::move(images)) {}

    static PBWDerivation diagonal(std::vector<Rational> scalars);
    // Y: e_i -> deg(e_i) e_i.
    static PBWDerivation graduation(const LiePresentation& p);
    // The derivation stored in the presentation (throws if there is none).
    static PBWDerivation from_presentation(const LiePresentation& p);

    const std::vector<LieVector>& images() const { return images_; }
    std::optional<std::vector<Rational>> diagonal_entries() const;
    Rational eigenvalue(const Monomial& m) const;

    PBWElement operator()(const PBWElement& a) const;

private:
    std::vector<LieVector> images_;
};

// (S * delta)(a).
PBWElement log_derivative(const PBWElement& a, const std::function<PBWElement(const PBWElement&)>& delta);

enum class WittDelta {
    graduation, // delta(e_n) = n e_n
    x_p_prime,  // delta(P d/dx) = x P' d/dx, i.e. delta(e_n) = (n+1) e_n
};

/* Truncated Witt algebra: e_n = x^{n+1} d/dx of degree n for 1 <= n <= n_max,
 * [e_n, e_m] = (m - n) e_{n+m}, brackets above n_max dropped. */
PresentationPtr witt_presentation(int n_max, WittDelta delta = WittDelta::graduation);

/* Free Lie algebra on the alphabet truncated at max_degree, with the Lyndon
 * bracketings as basis (basis element i is named after its Lyndon word) and the
 * graduation as derivation. images[i] is the bracketing in T(X). */
struct FreeLiePresentation {
    PresentationPtr presentation;
    std::vector<Word> lyndon;
    std::vector<TensorElt> images;
};

FreeLiePresentation free_lie_presentation(int alphabet_size, int max_degree);

// Algebra map U(Lie(X)) -> T(X) sending e_i to its Lyndon bracketing.
TensorElt to_tensor(const PBWElement& a, const FreeLiePresentation& free_lie);

/* Presentation files (JSON):
 *   {"basis": [{"name": "e1", "degree": 1}, ...],
 *    "brackets": ["0 1 -> 1 2", "0 2 -> 2 3; -1/2 4", ...],
 *    "derivation": ["1", "2", ...],          // optional, diagonal
 *    "check_degree": 6}                      // optional
 * Indices are 0-based; a bracket entry "i j -> c k; ..." sets [e_i, e_j] = sum c e_k. */
LiePresentation presentation_from_json(std::string_view text);
std::string presentation_to_json(const LiePresentation& p);

} // namespace logderiv

#endif // LOGDERIV_ENVELOPING_HPP
