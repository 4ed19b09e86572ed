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

#include "logderiv/logderiv.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "json.hpp"
#include "logderiv/dynkin.hpp"
#include "logderiv/enveloping.hpp"
#include "logderiv/expr.hpp"
#include "logderiv/magnus.hpp"
#include "logderiv/ode.hpp"
#include "logderiv/rota_baxter.hpp"
#include "logderiv/verify.hpp"

using namespace logderiv;

struct ld_engine {
    int alphabet;
    int max_degree;
};

struct ld_element {
    TensorElt value;
    int truncation;
    int alphabet;
};

namespace {

constexpr int kDefaultDegreeCap = 12;

thread_local std::string last_error;
thread_local int last_column = 0;

ld_status fail(ld_status status, std::string message, int column = 0) {
    last_error = std::move(message);
    last_column = column;
    return status;
}

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Runs fn and maps exceptions onto status codes.
template <class Fn>
ld_status guarded(Fn&& fn) {
    try {
        last_error.clear();
        last_column = 0;
        fn();
        return LD_OK;
    } catch (const ParseError& e) {
        return fail(LD_ERR_PARSE, e.what(), static_cast<int>(e.column()));
    } catch (const UsageError& e) {
        return fail(LD_ERR_USAGE, e.what());
    } catch (const std::bad_alloc&) {
        return fail(LD_ERR_INTERNAL, "out of memory");
    } catch (const std::invalid_argument& e) {
        return fail(LD_ERR_MATH, e.what());
    } catch (const std::domain_error& e) {
        return fail(LD_ERR_MATH, e.what());
    } catch (const std::exception& e) {
        return fail(LD_ERR_INTERNAL, e.what());
    }
}

char* dup(const std::string& s) {
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (!p)
        throw std::bad_alloc();
    std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

void require(bool cond, const char* message) {
    if (!cond)
        throw UsageError(message);
}

void require_order(int order) {
    if (order < 1 || order > ld_max_degree_cap())
        throw UsageError("order must be between 1 and " + std::to_string(ld_max_degree_cap()) +
                         " (raise the cap with LOGDERIV_MAX_DEGREE)");
}

ld_element* wrap(TensorElt v, int truncation, int alphabet) {
    return new ld_element{std::move(v), truncation, alphabet};
}

LetterDerivation derivation_or_y(const char* spec, int alphabet) {
    return spec ? LetterDerivation::parse(spec, alphabet) : LetterDerivation::graduation(alphabet);
}

nlohmann::ordered_json terms_json(const TensorElt& a) {
    auto terms = nlohmann::ordered_json::array();
    // map order on words is shortlex: degree first, then lexicographic
    for (const auto& [w, c] : a.terms())
        terms.push_back({{"coeff", c.str()}, {"word", w.str()}});
    return terms;
}

} // namespace

extern "C" {

const char* ld_version(void) { return "0.1.0"; }
const char* ld_last_error(void) { return last_error.c_str(); }
int ld_last_error_column(void) { return last_column; }
void ld_string_free(char* s) { std::free(s); }

int ld_max_degree_cap(void) {
    if (const char* env = std::getenv("LOGDERIV_MAX_DEGREE")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1 && v <= kMaxWordLength)
            return static_cast<int>(v);
    }
    return kDefaultDegreeCap;
}

ld_status ld_engine_new(int alphabet, int max_degree, ld_engine** out) {
    return guarded([&] {
        require(out != nullptr, "null output pointer");
        require(alphabet >= 1 && alphabet <= kMaxAlphabet, "alphabet size must be between 1 and 26");
        if (max_degree < 1 || max_degree > ld_max_degree_cap())
            throw UsageError("max degree must be between 1 and " + std::to_string(ld_max_degree_cap()) +
                             " (raise the cap with LOGDERIV_MAX_DEGREE)");
        *out = new ld_engine{alphabet, max_degree};
    });
}

void ld_engine_free(ld_engine* engine) { delete engine; }
int ld_engine_alphabet(const ld_engine* engine) { return engine ? engine->alphabet : 0; }
int ld_engine_max_degree(const ld_engine* engine) { return engine ? engine->max_degree : 0; }

ld_status ld_parse(const ld_engine* engine, const char* text, ld_element** out) {
    return guarded([&] {
        require(engine && text && out, "null argument");
        Expr e = parse_expr(text, engine->alphabet);
        *out = wrap(evaluate(e, engine->max_degree), engine->max_degree, engine->alphabet);
    });
}

ld_status ld_expr_normalize(const ld_engine* engine, const char* text, char** out) {
    return guarded([&] {
        require(engine && text && out, "null argument");
        *out = dup(print_expr(parse_expr(text, engine->alphabet)));
    });
}

void ld_element_free(ld_element* element) { delete element; }

ld_status ld_element_text(const ld_element* element, char** out) {
    return guarded([&] {
        require(element && out, "null argument");
        *out = dup(element->value.str());
    });
}

ld_status ld_element_json(const ld_element* element, char** out) {
    return guarded([&] {
        require(element && out, "null argument");
        nlohmann::ordered_json j;
        j["truncation"] = element->truncation;
        j["terms"] = terms_json(element->value);
        *out = dup(j.dump());
    });
}

int ld_element_equal(const ld_element* a, const ld_element* b) {
    return a && b && a->value == b->value ? 1 : 0;
}

int ld_element_is_primitive(const ld_element* element) {
    return element && is_primitive(element->value) ? 1 : 0;
}

ld_status ld_dynkin(const ld_engine* engine, const ld_element* a, const char* derivation, ld_element** out) {
    return guarded([&] {
        require(engine && a && out, "null argument");
        LetterDerivation f = derivation_or_y(derivation, engine->alphabet);
        *out = wrap(dynkin_convolution(f, a->value), a->truncation, engine->alphabet);
    });
}

ld_status ld_project(const ld_engine* engine, const ld_element* a, const char* mode, ld_element** out) {
    return guarded([&] {
        require(engine && a && out, "null argument");
        ProjectionMode m = mode ? ProjectionMode::parse(mode, engine->alphabet) : ProjectionMode::classical();
        *out = wrap(lie_project(a->value, m, engine->alphabet), a->truncation, engine->alphabet);
    });
}

ld_status ld_atkinson(const ld_engine* engine, const ld_element* x, int order, const char* delta, ld_element** out) {
    return guarded([&] {
        require(engine && x && out, "null argument");
        require_order(order);
        auto ctx = graded_inverse_context(derivation_or_y(delta, engine->alphabet), std::nullopt, order);
        *out = wrap(atkinson_solve(ctx, x->value, order).total(), order, engine->alphabet);
    });
}

ld_status ld_logderiv(const ld_engine* engine, const ld_element* x, int order, const char* d, const char* delta,
                      ld_element** sum_out, ld_element** direct_out) {
    return guarded([&] {
        require(engine && x && sum_out && direct_out, "null argument");
        require_order(order);
        LetterDerivation dd = derivation_or_y(d, engine->alphabet);
        auto ctx = graded_inverse_context(derivation_or_y(delta, engine->alphabet), dd, order);
        TensorElt sum = logderiv_sum(logderiv_terms(ctx, x->value, order));
        TensorElt direct = logderiv_direct(ctx, x->value, order);
        *sum_out = wrap(std::move(sum), order, engine->alphabet);
        *direct_out = wrap(std::move(direct), order, engine->alphabet);
    });
}

ld_status ld_magnus_forward(const ld_engine* engine, const ld_element* l, int order, const char* delta,
                            ld_element** out) {
    return guarded([&] {
        require(engine && l && out, "null argument");
        require_order(order);
        TensorElt r = magnus_forward(derivation_or_y(delta, engine->alphabet), l->value, order);
        *out = wrap(std::move(r), order, engine->alphabet);
    });
}

ld_status ld_magnus_solve(const ld_engine* engine, const ld_element* h, int order, const char* delta,
                          ld_element** out) {
    return guarded([&] {
        require(engine && h && out, "null argument");
        require_order(order);
        TensorElt r = magnus_solve(derivation_or_y(delta, engine->alphabet), h->value, order);
        *out = wrap(std::move(r), order, engine->alphabet);
    });
}

ld_status ld_dinv(const ld_engine* engine, const ld_element* l, int order, ld_element** out) {
    return guarded([&] {
        require(engine && l && out, "null argument");
        require_order(order);
        *out = wrap(dynkin_inverse(l->value, order).total(), order, engine->alphabet);
    });
}

ld_status ld_ode_check(const char* matrix_json, int order, int* holds, char** text_out, char** json_out) {
    return guarded([&] {
        require(matrix_json && holds && text_out && json_out, "null argument");
        require_order(order);
        MatrixPoly a = matrix_from_json(matrix_json);
        MagnusRelationReport rep = magnus_relation_report(a, order);
        *holds = rep.relation_holds && rep.exp_round_trip && rep.fixed_point;

        auto yes = [](bool b) { return b ? "holds" : "FAILS"; };
        std::string text = "magnus relation: " + std::string(yes(rep.relation_holds)) + "\n";
        text += "exp(Omega) = Picard: " + std::string(yes(rep.exp_round_trip)) + "\n";
        text += "X = 1 + int X lambda A: " + std::string(yes(rep.fixed_point)) + "\n";
        text += "Omega:\n" + rep.omega.str();

        nlohmann::ordered_json j;
        j["order"] = order;
        j["relation_holds"] = rep.relation_holds;
        j["exp_round_trip"] = rep.exp_round_trip;
        j["fixed_point"] = rep.fixed_point;
        j["omega"] = nlohmann::ordered_json::array();
        for (int n = 0; n <= order; ++n)
            j["omega"].push_back(
                {{"lambda", n}, {"matrix", nlohmann::ordered_json::parse(matrix_to_json(rep.omega[n]))}});
        std::string js = j.dump();
        char* t = dup(text);
        try {
            *json_out = dup(js);
        } catch (...) {
            std::free(t);
            throw;
        }
        *text_out = t;
    });
}

ld_status ld_verify(const char* suite, int max_degree, uint64_t seed, ld_verify_callback callback, void* user,
                    int* failed) {
    return guarded([&] {
        require(suite && failed, "null argument");
        if (!is_verify_suite(suite))
            throw UsageError(std::string("unknown suite '") + suite + "'");
        require_order(max_degree);
        VerifyOptions opts{suite, max_degree, seed};
        VerifySummary s = run_verify(opts, [&](const PropertyResult& r) {
            if (callback)
                callback(r.suite.c_str(), r.name.c_str(), r.passed ? 1 : 0, r.detail.c_str(), user);
        });
        *failed = s.failed;
    });
}

ld_status ld_presentation_check(const char* json, char** out) {
    return guarded([&] {
        require(json && out, "null argument");
        *out = dup(presentation_to_json(presentation_from_json(json)));
    });
}

ld_status ld_witt_presentation_json(int n, const char* convention, char** out) {
    return guarded([&] {
        require(out != nullptr, "null argument");
        require_order(n);
        std::string conv = convention ? convention : "graduation";
        if (conv != "graduation" && conv != "xp")
            throw UsageError("convention must be 'graduation' or 'xp'");
        auto p = witt_presentation(n, conv == "xp" ? WittDelta::x_p_prime : WittDelta::graduation);
        *out = dup(presentation_to_json(*p));
    });
}

} // extern "C"
