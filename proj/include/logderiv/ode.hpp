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
 // Exact matrix-polynomial arithmetic for X'(t) = X(t) lambda A(t), X(0) = 1, and the
 // Magnus logarithm Omega = log X, graded by the power of lambda.


#ifndef LOGDERIV_ODE_HPP
#define LOGDERIV_ODE_HPP

#include <string>
#include <string_view>
#include <vector>

#include "logderiv/rational.hpp"

namespace logderiv {

/* Polynomial in t with rational coefficients; coeffs()[k] multiplies t^k. */
class Poly {
public:
    Poly() = default;
    Poly(const Rational& constant) : Poly(std::vector<Rational>{constant}) {}
    explicit Poly(std::vector<Rational> coeffs);
    static Poly monomial(const Rational& c, int k);

    const std::vector<Rational>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    Poly derivative() const;
    // integral from 0 to t
    Poly integral() const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Rational& c, const Poly& a);
    friend bool operator==(const Poly& a, const Poly& b) = default;

    std::string str() const;

private:
    void trim();
    std::vector<Rational> c_;
};

inline constexpr std::size_t kMaxMatrixDimension = 4;

/* Square matrix of polynomials, dimension 1..4. */
class MatrixPoly {
public:
    explicit MatrixPoly(std::size_t dim);
    static MatrixPoly identity(std::size_t dim);
    // Constant matrix from rows of rationals.
    static MatrixPoly constant(const std::vector<std::vector<Rational>>& rows);

    std::size_t dim() const { return dim_; }
    Poly& at(std::size_t i, std::size_t j) { return e_.at(i * dim_ + j); }
    const Poly& at(std::size_t i, std::size_t j) const { return e_.at(i * dim_ + j); }
    bool is_zero() const;
    int t_degree() const;

    MatrixPoly derivative() const;
    MatrixPoly integral() const;

    MatrixPoly& operator+=(const MatrixPoly& o);
    MatrixPoly& operator-=(const MatrixPoly& o);
    friend MatrixPoly operator+(MatrixPoly a, const MatrixPoly& b) { return a += b; }
    friend MatrixPoly operator-(MatrixPoly a, const MatrixPoly& b) { return a -= b; }
    friend MatrixPoly operator*(const MatrixPoly& a, const MatrixPoly& b);
    friend MatrixPoly operator*(const Rational& c, const MatrixPoly& a);
    friend MatrixPoly operator*(const Poly& p, const MatrixPoly& a);
    friend bool operator==(const MatrixPoly& a, const MatrixPoly& b) = default;

    std::string str() const;

private:
    std::size_t dim_;
    std::vector<Poly> e_;
};

MatrixPoly commutator(const MatrixPoly& a, const MatrixPoly& b);

/* sum_n lambda^n M_n for n = 0..truncation. Products are Cauchy products in lambda
 * truncated at the same order. */
class LambdaSeries {
public:
    LambdaSeries(std::size_t dim, int truncation);
    static LambdaSeries one(std::size_t dim, int truncation);
    // lambda * a
    static LambdaSeries lambda_times(const MatrixPoly& a, int truncation);

    std::size_t dim() const { return dim_; }
    int truncation() const { return static_cast<int>(c_.size()) - 1; }
    MatrixPoly& operator[](std::size_t n) { return c_.at(n); }
    const MatrixPoly& operator[](std::size_t n) const { return c_.at(n); }
    bool is_zero() const;

    LambdaSeries derivative() const;
    LambdaSeries integral() const;

    LambdaSeries& operator+=(const LambdaSeries& o);
    LambdaSeries& operator-=(const LambdaSeries& o);
    friend LambdaSeries operator+(LambdaSeries a, const LambdaSeries& b) { return a += b; }
    friend LambdaSeries operator-(LambdaSeries a, const LambdaSeries& b) { return a -= b; }
    friend LambdaSeries operator*(const LambdaSeries& a, const LambdaSeries& b);
    friend LambdaSeries operator*(const Rational& c, const LambdaSeries& a);
    friend bool operator==(const LambdaSeries& a, const LambdaSeries& b) = default;

    std::string str() const;

private:
    void check(const LambdaSeries& o) const;
    std::size_t dim_;
    std::vector<MatrixPoly> c_;
};

LambdaSeries commutator(const LambdaSeries& a, const LambdaSeries& b);

// Iterated integrals: X_0 = 1, X_n = int_0^t X_{n-1}(s) A(s) ds.
LambdaSeries picard_matrix(const MatrixPoly& a, int truncation);
// log X, for X with identity lambda^0 component.
LambdaSeries omega_log(const LambdaSeries& x, int truncation);
// exp Omega, for Omega without lambda^0 component.
LambdaSeries exp_lambda(const LambdaSeries& omega, int truncation);

struct MagnusRelationReport {
    bool relation_holds = false; // sum 1/(i+1)! (-ad_Omega)^i (Omega') == lambda A
    bool exp_round_trip = false; // exp(Omega) == X
    bool fixed_point = false;    // X == 1 + int_0^t X lambda A
    LambdaSeries omega;
    LambdaSeries lhs;
};

MagnusRelationReport magnus_relation_report(const MatrixPoly& a, int truncation);
bool magnus_relation_check(const MatrixPoly& a, int truncation);

// M <- N := int_0^t [N(u), M'(u)] du.
MatrixPoly prelie_time(const MatrixPoly& m, const MatrixPoly& n);
LambdaSeries prelie_time(const LambdaSeries& m, const LambdaSeries& n);

/* Matrix files: {"dimension": 2, "entries": [[["1", "0", "1/2"], ["0"]], [[], ["-1"]]]}
 * where entries[i][j] lists the coefficients of t^0, t^1, ... as "p/q" strings. */
MatrixPoly matrix_from_json(std::string_view text);
std::string matrix_to_json(const MatrixPoly& a);

} // namespace logderiv

#endif // LOGDERIV_ODE_HPP
