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

#include <cstdio>
#include <string>
#include <sys/wait.h>

#include "doctest.h"

namespace {

struct Run {
    std::string out;
    int code = -1;
};

// Runs the CLI with the given arguments; stderr is dropped unless merged.
Run cli(const std::string& args, bool merge_stderr = false, const std::string& env = "") {
    std::string cmd = env + (env.empty() ? "" : " ") + "'" LOGDERIV_CLI "' " + args +
                      (merge_stderr ? " 2>&1" : " 2>/dev/null");
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    char buf[4096];
    for (std::size_t n; (n = fread(buf, 1, sizeof buf, p)) > 0;)
        r.out.append(buf, n);
    int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

const std::string data = LOGDERIV_TEST_DATA;

} // namespace

TEST_CASE("dynkin example") {
    auto r = cli("dynkin --expr 'a*b' --derivation Y");
    CHECK(r.code == 0);
    CHECK(r.out == "ab - ba\n");
    r = cli("--json dynkin --expr '[a,b]'");
    CHECK(r.out == "{\"truncation\":8,\"terms\":[{\"coeff\":\"2\",\"word\":\"ab\"},{\"coeff\":\"-2\",\"word\":\"ba\"}]}\n");
}

TEST_CASE("dinv example") {
    auto r = cli("dinv --expr a --order 3 --json");
    CHECK(r.code == 0);
    CHECK(r.out == "{\"truncation\":3,\"terms\":[{\"coeff\":\"1\",\"word\":\"\"},{\"coeff\":\"1\",\"word\":\"a\"},"
                   "{\"coeff\":\"1/2\",\"word\":\"aa\"},{\"coeff\":\"1/6\",\"word\":\"aaa\"}]}\n");
}

TEST_CASE("exit codes") {
    auto r = cli("dynkin --expr '[a'", true);
    CHECK(r.code == 1);
    CHECK(r.out.find("column 3") != std::string::npos);
    CHECK(cli("dynkin --expr 'a' --derivation diag:0,1").code == 0);
    CHECK(cli("atkinson --generator a --order 3 --weight0-delta diag:0,1").code == 2);
    CHECK(cli("bogus").code == 1);
    CHECK(cli("").code == 1);
    CHECK(cli("--help").code == 0);
    CHECK(cli("magnus --expr a --order 3").code == 1);
    CHECK(cli("magnus --forward --solve --expr a --order 3").code == 1);
    CHECK(cli("presentation --witt 3 --convention xp").code == 2);
    CHECK(cli("ode --matrix " + data + "/missing.json --order 2").code == 1);
}

TEST_CASE("degree cap") {
    CHECK(cli("dinv --expr a --order 13").code == 1);
    CHECK(cli("dinv --expr a --order 13", false, "LOGDERIV_MAX_DEGREE=14").code == 0);
    CHECK(cli("dinv --expr a --order 12").code == 0);
}

TEST_CASE("logderiv and magnus agree with their inverses") {
    auto r = cli("logderiv --generator 'a + [a,b]' --order 4");
    CHECK(r.code == 0);
    CHECK(r.out.find("equal: yes") != std::string::npos);
    // forward on a single letter reduces to delta(a) = a
    auto f = cli("magnus --forward --expr a --order 3");
    CHECK(f.code == 0);
    CHECK(f.out == "a\n");
    auto g = cli("magnus --solve --expr '2*a' --order 3 --delta diag:2,1");
    CHECK(g.code == 0);
    CHECK(g.out == "a\n");
}

TEST_CASE("ode") {
    auto r = cli("ode --matrix " + data + "/quadratic3.json --order 3 --check");
    CHECK(r.code == 0);
    CHECK(r.out.find("magnus relation: holds") != std::string::npos);
    auto j = cli("--json ode --matrix " + data + "/nilpotent.json --order 2");
    CHECK(j.code == 0);
    CHECK(j.out.find("\"omega\"") != std::string::npos);
}

TEST_CASE("verify is byte stable") {
    auto a = cli("--json --max-degree 3 verify --seed 5");
    auto b = cli("--json --max-degree 3 verify --seed 5");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("\"failed\":0") != std::string::npos);
    auto c = cli("--json --max-degree 3 verify --seed 6");
    CHECK(c.out != a.out);
    auto t = cli("--max-degree 3 verify --suite dynkin");
    CHECK(t.out.rfind("PASS dynkin: ", 0) == 0);
    CHECK(cli("verify --suite nope").code == 1);
}

TEST_CASE("presentation") {
    auto r = cli("presentation --file " + data + "/heisenberg.json");
    CHECK(r.code == 0);
    auto bad = cli("presentation --file " + data + "/bad_jacobi.json", true);
    CHECK(bad.code == 2);
    CHECK(bad.out.find("Jacobi identity fails on (a, b, c)") != std::string::npos);
}
