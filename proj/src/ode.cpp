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

#include "logderiv/ode.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

namespace logderiv {

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(const Rational& c, int k) {
    std::vector<Rational> v(static_cast<std::size_t>(k) + 1);
    v.back() = c;
    return Poly(std::move(v));
}

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero())
        c_.pop_back();
}

Poly Poly::derivative() const {
    std::vector<Rational> v;
    for (std::size_t k = 1; k < c_.size(); ++k)
        v.push_back(Rational(static_cast<long>(k)) * c_[k]);
    return Poly(std::move(v));
}

Poly Poly::integral() const {
    if (c_.empty())
        return {};
    std::vector<Rational> v{Rational{}};
    for (std::size_t k = 0; k < c_.size(); ++k)
        v.push_back(c_[k] / Rational(static_cast<long>(k + 1)));
    return Poly(std::move(v));
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k)
        c_[k] += o.c_[k];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k)
        c_[k] -= o.c_[k];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            v[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(v));
}

Poly operator*(const Rational& c, const Poly& a) {
    std::vector<Rational> v = a.c_;
    for (auto& x : v)
        x *= c;
    return Poly(std::move(v));
}

std::string Poly::str() const {
    if (c_.empty())
        return "0";
    std::string out;
    bool first = true;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        const Rational& c = c_[k];
        if (c.is_zero())
            continue;
        out += first ? (c.sign() < 0 ? "-" : "") : (c.sign() < 0 ? " - " : " + ");
        first = false;
        Rational mag = c.sign() < 0 ? -c : c;
        if (k == 0) {
            out += mag.str();
            continue;
        }
        if (mag != Rational(1))
            out += mag.str() + " ";
        out += k == 1 ? "t" : "t^" + std::to_string(k);
    }
    return out;
}

MatrixPoly::MatrixPoly(std::size_t dim) : dim_(dim), e_(dim * dim) {
    if (dim < 1 || dim > kMaxMatrixDimension)
        throw std::invalid_argument("matrix dimension must be between 1 and 4");
}

MatrixPoly MatrixPoly::identity(std::size_t dim) {
    MatrixPoly m(dim);
    for (std::size_t i = 0; i < dim; ++i)
        m.at(i, i) = Poly(Rational(1));
    return m;
}

MatrixPoly MatrixPoly::constant(const std::vector<std::vector<Rational>>& rows) {
    MatrixPoly m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.size())
            throw std::invalid_argument("matrix rows must be square");
        for (std::size_t j = 0; j < rows.size(); ++j)
            m.at(i, j) = Poly(rows[i][j]);
    }
    return m;
}

bool MatrixPoly::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](const Poly& p) { return p.is_zero(); });
}

int MatrixPoly::t_degree() const {
    int d = -1;
    for (const auto& p : e_)
        d = std::max(d, p.degree());
    return d;
}

MatrixPoly MatrixPoly::derivative() const {
    MatrixPoly r(dim_);
    for (std::size_t k = 0; k < e_.size(); ++k)
        r.e_[k] = e_[k].derivative();
    return r;
}

MatrixPoly MatrixPoly::integral() const {
    MatrixPoly r(dim_);
    for (std::size_t k = 0; k < e_.size(); ++k)
        r.e_[k] = e_[k].integral();
    return r;
}

MatrixPoly& MatrixPoly::operator+=(const MatrixPoly& o) {
    if (o.dim_ != dim_)
        throw std::invalid_argument("matrix dimensions differ");
    for (std::size_t k = 0; k < e_.size(); ++k)
        e_[k] += o.e_[k];
    return *this;
}

MatrixPoly& MatrixPoly::operator-=(const MatrixPoly& o) {
    if (o.dim_ != dim_)
        throw std::invalid_argument("matrix dimensions differ");
    for (std::size_t k = 0; k < e_.size(); ++k)
        e_[k] -= o.e_[k];
    return *this;
}

MatrixPoly operator*(const MatrixPoly& a, const MatrixPoly& b) {
    if (a.dim_ != b.dim_)
        throw std::invalid_argument("matrix dimensions differ");
    MatrixPoly r(a.dim_);
    for (std::size_t i = 0; i < a.dim_; ++i)
        for (std::size_t j = 0; j < a.dim_; ++j)
            for (std::size_t k = 0; k < a.dim_; ++k)
                r.at(i, j) += a.at(i, k) * b.at(k, j);
    return r;
}

MatrixPoly operator*(const Rational& c, const MatrixPoly& a) {
    MatrixPoly r(a.dim_);
    for (std::size_t k = 0; k < a.e_.size(); ++k)
        r.e_[k] = c * a.e_[k];
    return r;
}

MatrixPoly operator*(const Poly& p, const MatrixPoly& a) {
    MatrixPoly r(a.dim_);
    for (std::size_t k = 0; k < a.e_.size(); ++k)
        r.e_[k] = p * a.e_[k];
    return r;
}

std::string MatrixPoly::str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < dim_; ++i) {
        s += i ? "; " : "";
        for (std::size_t j = 0; j < dim_; ++j)
            s += (j ? ", " : "") + at(i, j).str();
    }
    return s + "]";
}

MatrixPoly commutator(const MatrixPoly& a, const MatrixPoly& b) { return a * b - b * a; }

LambdaSeries::LambdaSeries(std::size_t dim, int truncation)
    : dim_(dim), c_(static_cast<std::size_t>(std::max(truncation, 0)) + 1, MatrixPoly(dim)) {
    if (truncation < 0)
        throw std::invalid_argument("lambda truncation must be >= 0");
}

LambdaSeries LambdaSeries::one(std::size_t dim, int truncation) {
    LambdaSeries s(dim, truncation);
    s.c_[0] = MatrixPoly::identity(dim);
    return s;
}

LambdaSeries LambdaSeries::lambda_times(const MatrixPoly& a, int truncation) {
    LambdaSeries s(a.dim(), truncation);
    if (truncation >= 1)
        s.c_[1] = a;
    return s;
}

bool LambdaSeries::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const MatrixPoly& m) { return m.is_zero(); });
}

LambdaSeries LambdaSeries::derivative() const {
    LambdaSeries r(dim_, truncation());
    for (std::size_t n = 0; n < c_.size(); ++n)
        r.c_[n] = c_[n].derivative();
    return r;
}

LambdaSeries LambdaSeries::integral() const {
    LambdaSeries r(dim_, truncation());
    for (std::size_t n = 0; n < c_.size(); ++n)
        r.c_[n] = c_[n].integral();
    return r;
}

void LambdaSeries::check(const LambdaSeries& o) const {
    if (o.dim_ != dim_ || o.c_.size() != c_.size())
        throw std::invalid_argument("lambda series of different shapes");
}

LambdaSeries& LambdaSeries::operator+=(const LambdaSeries& o) {
    check(o);
    for (std::size_t n = 0; n < c_.size(); ++n)
        c_[n] += o.c_[n];
    return *this;
}

LambdaSeries& LambdaSeries::operator-=(const LambdaSeries& o) {
    check(o);
    for (std::size_t n = 0; n < c_.size(); ++n)
        c_[n] -= o.c_[n];
    return *this;
}

LambdaSeries operator*(const LambdaSeries& a, const LambdaSeries& b) {
    a.check(b);
    LambdaSeries r(a.dim_, a.truncation());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero())
            continue;
        for (std::size_t j = 0; i + j < a.c_.size(); ++j)
            if (!b.c_[j].is_zero())
                r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return r;
}

LambdaSeries operator*(const Rational& c, const LambdaSeries& a) {
    LambdaSeries r(a.dim_, a.truncation());
    for (std::size_t n = 0; n < a.c_.size(); ++n)
        r.c_[n] = c * a.c_[n];
    return r;
}

std::string LambdaSeries::str() const {
    std::string s;
    for (std::size_t n = 0; n < c_.size(); ++n)
        s += "lambda^" + std::to_string(n) + ": " + c_[n].str() + "\n";
    return s;
}

LambdaSeries commutator(const LambdaSeries& a, const LambdaSeries& b) { return a * b - b * a; }

LambdaSeries picard_matrix(const MatrixPoly& a, int truncation) {
    if (truncation < 1)
        throw std::invalid_argument("picard_matrix: order must be >= 1");
    LambdaSeries x = LambdaSeries::one(a.dim(), truncation);
    for (int n = 1; n <= truncation; ++n)
        x[static_cast<std::size_t>(n)] = (x[static_cast<std::size_t>(n - 1)] * a).integral();
    return x;
}

LambdaSeries omega_log(const LambdaSeries& x, int truncation) {
    if (x.truncation() < truncation)
        throw std::invalid_argument("omega_log: series is truncated below the requested order");
    if (!(x[0] == MatrixPoly::identity(x.dim())))
        throw std::invalid_argument("omega_log: lambda^0 component must be the identity");
    LambdaSeries u(x.dim(), truncation);
    for (int n = 1; n <= truncation; ++n)
        u[static_cast<std::size_t>(n)] = x[static_cast<std::size_t>(n)];
    LambdaSeries power = u;
    LambdaSeries omega(x.dim(), truncation);
    for (int k = 1; k <= truncation && !power.is_zero(); ++k) {
        omega += Rational(k % 2 ? 1 : -1, k) * power;
        power = power * u;
    }
    return omega;
}

LambdaSeries exp_lambda(const LambdaSeries& omega, int truncation) {
    if (!omega[0].is_zero())
        throw std::invalid_argument("exp_lambda: lambda^0 component must vanish");
    LambdaSeries om(omega.dim(), truncation);
    for (int n = 1; n <= std::min(truncation, omega.truncation()); ++n)
        om[static_cast<std::size_t>(n)] = omega[static_cast<std::size_t>(n)];
    LambdaSeries term = LambdaSeries::one(omega.dim(), truncation);
    LambdaSeries r = term;
    for (int k = 1; k <= truncation; ++k) {
        term = Rational(1, k) * (term * om);
        if (term.is_zero())
            break;
        r += term;
    }
    return r;
}

MagnusRelationReport magnus_relation_report(const MatrixPoly& a, int truncation) {
    LambdaSeries x = picard_matrix(a, truncation);
    LambdaSeries omega = omega_log(x, truncation);
    LambdaSeries lambda_a = LambdaSeries::lambda_times(a, truncation);

    // sum_{i>=0} 1/(i+1)! (-ad_Omega)^i (Omega')
    LambdaSeries power = omega.derivative();
    LambdaSeries lhs = power;
    Rational fact(1);
    for (int i = 1; i < truncation && !power.is_zero(); ++i) {
        power = Rational(-1) * commutator(omega, power);
        fact *= Rational(i + 1);
        lhs += (Rational(1) / fact) * power;
    }

    MagnusRelationReport rep{false, false, false, omega, lhs};
    rep.relation_holds = lhs == lambda_a;
    rep.exp_round_trip = exp_lambda(omega, truncation) == x;
    rep.fixed_point = x == LambdaSeries::one(a.dim(), truncation) + (x * lambda_a).integral();
    return rep;
}

bool magnus_relation_check(const MatrixPoly& a, int truncation) {
    MagnusRelationReport r = magnus_relation_report(a, truncation);
    return r.relation_holds && r.exp_round_trip && r.fixed_point;
}

MatrixPoly prelie_time(const MatrixPoly& m, const MatrixPoly& n) {
    return commutator(n, m.derivative()).integral();
}

LambdaSeries prelie_time(const LambdaSeries& m, const LambdaSeries& n) {
    return commutator(n, m.derivative()).integral();
}

MatrixPoly matrix_from_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("matrix file is not valid JSON: ") + e.what());
    }
    try {
        const auto dim = j.at("dimension").get<std::size_t>();
        if (dim < 1 || dim > kMaxMatrixDimension)
            throw ParseError("matrix dimension must be between 1 and 4");
        const auto& rows = j.at("entries");
        if (rows.size() != dim)
            throw ParseError("matrix file: expected " + std::to_string(dim) + " rows");
        MatrixPoly m(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            if (rows[i].size() != dim)
                throw ParseError("matrix file: row " + std::to_string(i) + " has the wrong length");
            for (std::size_t k = 0; k < dim; ++k) {
                std::vector<Rational> coeffs;
                for (const auto& c : rows[i][k])
                    coeffs.push_back(Rational::parse(c.get<std::string>()));
                m.at(i, k) = Poly(std::move(coeffs));
            }
        }
        return m;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed matrix file: ") + e.what());
    }
}

std::string matrix_to_json(const MatrixPoly& a) {
    nlohmann::ordered_json j;
    j["dimension"] = a.dim();
    j["entries"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < a.dim(); ++i) {
        auto row = nlohmann::ordered_json::array();
        for (std::size_t k = 0; k < a.dim(); ++k) {
            auto coeffs = nlohmann::ordered_json::array();
            for (const auto& c : a.at(i, k).coeffs())
                coeffs.push_back(c.str());
            row.push_back(coeffs);
        }
        j["entries"].push_back(row);
    }
    return j.dump(2) + "\n";
}

} // namespace logderiv
