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

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "doctest.h"
#include "logderiv/logderiv.h"

namespace {

struct Engine {
    ld_engine* h = nullptr;
    Engine(int alphabet, int degree) { REQUIRE(ld_engine_new(alphabet, degree, &h) == LD_OK); }
    ~Engine() { ld_engine_free(h); }
};

struct Elt {
    ld_element* h = nullptr;
    ~Elt() { ld_element_free(h); }
};

std::string take(char* s) {
    std::string out = s ? s : "";
    ld_string_free(s);
    return out;
}

std::string text(const ld_element* e) {
    char* s = nullptr;
    REQUIRE(ld_element_text(e, &s) == LD_OK);
    return take(s);
}

std::string slurp(const std::string& name) {
    std::ifstream in(std::string(LOGDERIV_TEST_DATA) + "/" + name);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("engine lifecycle") {
    CHECK(std::string(ld_version()) == "0.1.0");
    Engine e(3, 5);
    CHECK(ld_engine_alphabet(e.h) == 3);
    CHECK(ld_engine_max_degree(e.h) == 5);
    ld_engine* bad = nullptr;
    CHECK(ld_engine_new(0, 5, &bad) == LD_ERR_USAGE);
    CHECK(ld_engine_new(27, 5, &bad) == LD_ERR_USAGE);
    CHECK(ld_engine_new(2, 0, &bad) == LD_ERR_USAGE);
    CHECK(ld_engine_new(2, ld_max_degree_cap() + 1, &bad) == LD_ERR_USAGE);
    CHECK(bad == nullptr);
    CHECK(ld_engine_new(2, 3, nullptr) == LD_ERR_USAGE);
    ld_engine_free(nullptr);
    ld_element_free(nullptr);
    ld_string_free(nullptr);
}

TEST_CASE("parse errors carry a column") {
    Engine e(2, 4);
    Elt x;
    CHECK(ld_parse(e.h, "[a", &x.h) == LD_ERR_PARSE);
    CHECK(x.h == nullptr);
    CHECK(ld_last_error_column() == 3);
    CHECK(std::string(ld_last_error()).find("column 3") != std::string::npos);
    CHECK(ld_parse(e.h, "c", &x.h) == LD_ERR_PARSE);
    CHECK(ld_parse(e.h, nullptr, &x.h) == LD_ERR_USAGE);
    CHECK(ld_parse(e.h, "exp(1+a)", &x.h) == LD_ERR_MATH);
    char* s = nullptr;
    REQUIRE(ld_expr_normalize(e.h, " [a ,  b]*2", &s) == LD_OK);
    CHECK(take(s) == "[a, b]*2");
}

TEST_CASE("dynkin and projection") {
    Engine e(2, 6);
    Elt ab, out, out2, l;
    REQUIRE(ld_parse(e.h, "a*b", &ab.h) == LD_OK);
    REQUIRE(ld_dynkin(e.h, ab.h, "Y", &out.h) == LD_OK);
    CHECK(text(out.h) == "ab - ba");
    CHECK(ld_element_is_primitive(out.h) == 1);
    CHECK(ld_element_is_primitive(ab.h) == 0);
    REQUIRE(ld_dynkin(e.h, ab.h, "letter:a", &out2.h) == LD_OK);
    CHECK(text(out2.h) == "ab - ba");
    Elt d3;
    REQUIRE(ld_dynkin(e.h, ab.h, "diag:2,3", &d3.h) == LD_OK);
    CHECK(text(d3.h) == "2 ab - 2 ba");  // [f(a), b] = 2 [a, b]
    Elt bad;
    CHECK(ld_dynkin(e.h, ab.h, "diag:1,2,3", &bad.h) == LD_ERR_PARSE);
    CHECK(ld_dynkin(e.h, ab.h, "nope", &bad.h) == LD_ERR_PARSE);
    REQUIRE(ld_parse(e.h, "[a,[a,b]]", &l.h) == LD_OK);
    Elt p;
    REQUIRE(ld_project(e.h, l.h, "classical", &p.h) == LD_OK);
    CHECK(ld_element_equal(p.h, l.h) == 1);
    char* js = nullptr;
    REQUIRE(ld_element_json(out.h, &js) == LD_OK);
    CHECK(take(js) == R"({"truncation":6,"terms":[{"coeff":"1","word":"ab"},{"coeff":"-1","word":"ba"}]})");
}

TEST_CASE("atkinson, logderiv, magnus and dinv") {
    Engine e(2, 4);
    Elt a, phi, sum, direct, h, back, g;
    REQUIRE(ld_parse(e.h, "a", &a.h) == LD_OK);
    REQUIRE(ld_atkinson(e.h, a.h, 3, nullptr, &phi.h) == LD_OK);
    CHECK(text(phi.h) == "1 + a + 1/2 aa + 1/6 aaa");
    REQUIRE(ld_logderiv(e.h, a.h, 4, "Y", nullptr, &sum.h, &direct.h) == LD_OK);
    CHECK(ld_element_equal(sum.h, direct.h) == 1);
    REQUIRE(ld_dinv(e.h, a.h, 3, &g.h) == LD_OK);
    CHECK(ld_element_equal(g.h, phi.h) == 1);
    Elt l;
    REQUIRE(ld_parse(e.h, "a + [a,b]", &l.h) == LD_OK);
    REQUIRE(ld_magnus_forward(e.h, l.h, 4, nullptr, &h.h) == LD_OK);
    REQUIRE(ld_magnus_solve(e.h, h.h, 4, nullptr, &back.h) == LD_OK);
    CHECK(ld_element_equal(back.h, l.h) == 1);
    Elt bad;
    CHECK(ld_atkinson(e.h, a.h, 3, "diag:0,1", &bad.h) == LD_ERR_MATH);
    CHECK(ld_atkinson(e.h, a.h, ld_max_degree_cap() + 1, nullptr, &bad.h) == LD_ERR_USAGE);
    CHECK(ld_dinv(e.h, phi.h, 3, &bad.h) == LD_ERR_MATH);
}

TEST_CASE("ode and presentations") {
    int holds = 0;
    char* t = nullptr;
    char* j = nullptr;
    REQUIRE(ld_ode_check(slurp("quadratic3.json").c_str(), 4, &holds, &t, &j) == LD_OK);
    CHECK(holds == 1);
    CHECK(take(t).find("magnus relation: holds") != std::string::npos);
    CHECK(take(j).find("\"relation_holds\"") != std::string::npos);
    CHECK(ld_ode_check("{", 3, &holds, &t, &j) == LD_ERR_PARSE);
    CHECK(ld_ode_check("{}", 3, &holds, nullptr, &j) == LD_ERR_USAGE);
    char* p = nullptr;
    REQUIRE(ld_presentation_check(slurp("heisenberg.json").c_str(), &p) == LD_OK);
    CHECK(take(p).find("\"basis\"") != std::string::npos);
    CHECK(ld_presentation_check(slurp("bad_jacobi.json").c_str(), &p) == LD_ERR_MATH);
    REQUIRE(ld_witt_presentation_json(4, "graduation", &p) == LD_OK);
    take(p);
    CHECK(ld_witt_presentation_json(4, "xp", &p) == LD_ERR_MATH);
    CHECK(ld_witt_presentation_json(4, "other", &p) == LD_ERR_USAGE);
}

TEST_CASE("verify callback") {
    std::vector<std::string> seen;
    int failed = -1;
    auto cb = [](const char* suite, const char* name, int passed, const char*, void* user) {
        static_cast<std::vector<std::string>*>(user)->push_back(std::string(suite) + ":" + name + ":" +
                                                                  std::to_string(passed));
    };
    REQUIRE(ld_verify("core", 3, 42, cb, &seen, &failed) == LD_OK);
    CHECK(failed == 0);
    CHECK_FALSE(seen.empty());
    CHECK(ld_verify("bogus", 3, 42, cb, &seen, &failed) == LD_ERR_USAGE);
}

TEST_CASE("errors are per thread") {
    Engine e(2, 3);
    Elt x;
    CHECK(ld_parse(e.h, "[a", &x.h) == LD_ERR_PARSE);
    std::string other;
    std::thread th([&] {
        Elt y;
        ld_parse(e.h, "a +", &y.h);
        other = ld_last_error();
    });
    th.join();
    CHECK(std::string(ld_last_error()).find("column 3") != std::string::npos);
    CHECK(other.find("column 4") != std::string::npos);
}
