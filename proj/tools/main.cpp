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
 // logderiv command-line front end. Talks to the engine only through the C API.


#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "logderiv/logderiv.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitMath = 2;

struct Failure {
    int code;
};

int exit_code(ld_status s) {
    switch (s) {
    case LD_OK:
        return kExitOk;
    case LD_ERR_PARSE:
    case LD_ERR_USAGE:
        return kExitUsage;
    default:
        return kExitMath;
    }
}

void check(ld_status s, const std::string& context = {}) {
    if (s == LD_OK)
        return;
    std::string msg = ld_last_error();
    std::cerr << "logderiv: " << (context.empty() ? "" : context + ": ") << msg << "\n";
    throw Failure{exit_code(s)};
}

struct EngineDeleter {
    void operator()(ld_engine* e) const { ld_engine_free(e); }
};
struct ElementDeleter {
    void operator()(ld_element* e) const { ld_element_free(e); }
};
using Engine = std::unique_ptr<ld_engine, EngineDeleter>;
using Element = std::unique_ptr<ld_element, ElementDeleter>;

std::string take(char* s) {
    std::string out = s ? s : "";
    ld_string_free(s);
    return out;
}

struct Globals {
    int alphabet = 2;
    int max_degree = 8;
    bool json = false;
};

Engine make_engine(const Globals& g, int max_degree) {
    ld_engine* e = nullptr;
    check(ld_engine_new(g.alphabet, max_degree, &e));
    return Engine(e);
}

Element parse(const Engine& engine, const std::string& text, const char* what) {
    ld_element* e = nullptr;
    check(ld_parse(engine.get(), text.c_str(), &e), std::string("in ") + what);
    return Element(e);
}

std::string element_text(const Element& e) {
    char* s = nullptr;
    check(ld_element_text(e.get(), &s));
    return take(s);
}

std::string element_json(const Element& e) {
    char* s = nullptr;
    check(ld_element_json(e.get(), &s));
    return take(s);
}

void print_element(const Globals& g, const Element& e) {
    std::cout << (g.json ? element_json(e) : element_text(e)) << "\n";
}

const char* opt(const std::string& s) { return s.empty() ? nullptr : s.c_str(); }

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "logderiv: cannot read " << path << "\n";
        throw Failure{kExitUsage};
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void verify_line(const char* suite, const char* property, int passed, const char* detail, void* user) {
    auto* results = static_cast<nlohmann::ordered_json*>(user);
    if (results) {
        results->push_back({{"suite", suite}, {"property", property}, {"passed", passed != 0}, {"detail", detail}});
        return;
    }
    std::cout << (passed ? "PASS " : "FAIL ") << suite << ": " << property;
    if (!passed && detail && *detail)
        std::cout << " (" << detail << ")";
    std::cout << "\n" << std::flush;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Dynkin operators, logarithmic derivatives and Magnus-type series"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--alphabet", g.alphabet, "Alphabet size, letters a, b, c, ...")->capture_default_str();
    app.add_option("--max-degree", g.max_degree, "Truncation degree")->capture_default_str();
    app.add_flag("--json", g.json, "JSON output");

    std::string expr, derivation = "Y", mode = "classical", weight0_delta, d = "Y", delta = "Y";
    std::optional<int> order;
    bool forward = false, solve = false, check_flag = false;
    std::string matrix_file, suite = "all", presentation_file, convention = "graduation";
    std::uint64_t seed = 42;
    std::optional<int> witt;

    auto* dynkin = app.add_subcommand("dynkin", "D_delta(E) = (S * delta)(E)");
    dynkin->add_option("--expr", expr, "Expression")->required();
    dynkin->add_option("--derivation", derivation, "Y, letter:<c> or diag:<q1>,<q2>,...")->capture_default_str();

    auto* project = app.add_subcommand("project", "Projection onto the free Lie algebra");
    project->add_option("--expr", expr, "Homogeneous expression")->required();
    project->add_option("--mode", mode, "classical or letter:<c>")->capture_default_str();

    auto* atkinson = app.add_subcommand("atkinson", "Solution of phi = 1 + R(phi x)");
    atkinson->add_option("--generator", expr, "Generator x")->required();
    atkinson->add_option("--order", order, "Truncation order (default: --max-degree)");
    atkinson->add_option("--weight0-delta", weight0_delta, "Derivation whose inverse is R (default Y)");

    auto* logderiv = app.add_subcommand("logderiv", "sum R_d^[n](x) next to phi^-1 d(phi)");
    logderiv->add_option("--generator", expr, "Generator x")->required();
    logderiv->add_option("--order", order, "Truncation order (default: --max-degree)");
    logderiv->add_option("--d", d, "Derivation d: Y, letter:<c> or diag:...")->capture_default_str();
    logderiv->add_option("--weight0-delta", weight0_delta, "Derivation whose inverse is R (default Y)");

    auto* magnus = app.add_subcommand("magnus", "Magnus-type formula and its inverse");
    auto* fwd = magnus->add_flag("--forward", forward, "Compute S(exp l) delta(exp l) from l");
    auto* slv = magnus->add_flag("--solve", solve, "Recover l from S(exp l) delta(exp l)");
    fwd->excludes(slv);
    magnus->add_option("--expr", expr, "Lie element")->required();
    magnus->add_option("--order", order, "Truncation order (default: --max-degree)");
    magnus->add_option("--delta", delta, "Derivation: Y, letter:<c> or diag:...")->capture_default_str();

    auto* dinv = app.add_subcommand("dinv", "Group-like g with D(g) = E");
    dinv->add_option("--expr", expr, "Lie element")->required();
    dinv->add_option("--order", order, "Truncation order (default: --max-degree)");

    auto* ode = app.add_subcommand("ode", "Magnus expansion of X' = X lambda A(t), X(0) = 1");
    ode->add_option("--matrix", matrix_file, "Matrix JSON file")->required();
    ode->add_option("--order", order, "Order in lambda (default: --max-degree)");
    ode->add_flag("--check", check_flag, "Exit with status 2 if a check fails");

    auto* verify = app.add_subcommand("verify", "Run the seeded property suites");
    verify->add_option("--suite", suite, "all, core, dynkin, rb, magnus or ode")->capture_default_str();
    verify->add_option("--seed", seed, "PRNG seed")->capture_default_str();

    auto* presentation = app.add_subcommand("presentation", "Validate or emit a Lie algebra presentation");
    auto* pfile = presentation->add_option("--file", presentation_file, "Presentation JSON file");
    auto* pwitt = presentation->add_option("--witt", witt, "Emit the Witt algebra truncated at this degree");
    pfile->excludes(pwitt);
    presentation->add_option("--convention", convention, "graduation or xp")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        const int n = order.value_or(g.max_degree);
        if (dynkin->parsed() || project->parsed()) {
            Engine engine = make_engine(g, g.max_degree);
            Element a = parse(engine, expr, "--expr");
            ld_element* out = nullptr;
            if (dynkin->parsed())
                check(ld_dynkin(engine.get(), a.get(), derivation.c_str(), &out));
            else
                check(ld_project(engine.get(), a.get(), mode.c_str(), &out));
            print_element(g, Element(out));
        } else if (atkinson->parsed()) {
            Engine engine = make_engine(g, n);
            Element x = parse(engine, expr, "--generator");
            ld_element* out = nullptr;
            check(ld_atkinson(engine.get(), x.get(), n, opt(weight0_delta), &out));
            print_element(g, Element(out));
        } else if (logderiv->parsed()) {
            Engine engine = make_engine(g, n);
            Element x = parse(engine, expr, "--generator");
            ld_element *sum = nullptr, *direct = nullptr;
            check(ld_logderiv(engine.get(), x.get(), n, d.c_str(), opt(weight0_delta), &sum, &direct));
            Element s(sum), dr(direct);
            const bool equal = ld_element_equal(s.get(), dr.get()) != 0;
            if (g.json) {
                auto js = nlohmann::ordered_json::parse(element_json(s));
                js["direct"] = nlohmann::ordered_json::parse(element_json(dr))["terms"];
                js["equal"] = equal;
                std::cout << js.dump() << "\n";
            } else {
                std::cout << "sum R_d^[n]:   " << element_text(s) << "\n";
                std::cout << "phi^-1 d(phi): " << element_text(dr) << "\n";
                std::cout << "equal: " << (equal ? "yes" : "no") << "\n";
            }
        } else if (magnus->parsed()) {
            if (forward == solve) {
                std::cerr << "logderiv: magnus needs exactly one of --forward or --solve\n";
                return kExitUsage;
            }
            Engine engine = make_engine(g, n);
            Element a = parse(engine, expr, "--expr");
            ld_element* out = nullptr;
            if (forward)
                check(ld_magnus_forward(engine.get(), a.get(), n, delta.c_str(), &out));
            else
                check(ld_magnus_solve(engine.get(), a.get(), n, delta.c_str(), &out));
            print_element(g, Element(out));
        } else if (dinv->parsed()) {
            Engine engine = make_engine(g, n);
            Element a = parse(engine, expr, "--expr");
            ld_element* out = nullptr;
            check(ld_dinv(engine.get(), a.get(), n, &out));
            print_element(g, Element(out));
        } else if (ode->parsed()) {
            const std::string text = read_file(matrix_file);
            int holds = 0;
            char *report = nullptr, *js = nullptr;
            check(ld_ode_check(text.c_str(), n, &holds, &report, &js), matrix_file);
            std::string r = take(report), j = take(js);
            std::cout << (g.json ? j + "\n" : r);
            if (check_flag && !holds)
                return kExitMath;
        } else if (verify->parsed()) {
            nlohmann::ordered_json results = nlohmann::ordered_json::array();
            int failed = 0;
            const auto start = std::chrono::steady_clock::now();
            check(ld_verify(suite.c_str(), g.max_degree, seed, verify_line, g.json ? &results : nullptr, &failed));
            const double secs =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            if (g.json) {
                nlohmann::ordered_json js;
                js["suite"] = suite;
                js["max_degree"] = g.max_degree;
                js["seed"] = seed;
                js["results"] = results;
                js["failed"] = failed;
                std::cout << js.dump() << "\n";
            } else {
                std::cout << (failed ? std::to_string(failed) + " propert" + (failed == 1 ? "y" : "ies") + " failed"
                                     : std::string("all properties passed"))
                          << "\n";
                std::fprintf(stderr, "verify finished in %.2f s\n", secs);
            }
            return failed ? kExitMath : kExitOk;
        } else if (presentation->parsed()) {
            char* out = nullptr;
            if (witt)
                check(ld_witt_presentation_json(*witt, convention.c_str(), &out), "witt");
            else if (!presentation_file.empty())
                check(ld_presentation_check(read_file(presentation_file).c_str(), &out), presentation_file);
            else {
                std::cerr << "logderiv: presentation needs --file or --witt\n";
                return kExitUsage;
            }
            std::cout << take(out);
        }
    } catch (const Failure& f) {
        return f.code;
    }
    return kExitOk;
}
