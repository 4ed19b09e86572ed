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
 // Seeded property suites over the whole engine. All random inputs come from a
 // single mt19937_64 stream, so a seed fixes every drawn input.


#ifndef LOGDERIV_VERIFY_HPP
#define LOGDERIV_VERIFY_HPP

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "logderiv/rational.hpp"

namespace logderiv {

struct VerifyOptions {
    std::string suite = "all"; // all | core | dynkin | rb | magnus | ode
    int max_degree = 5;
    std::uint64_t seed = 42;
};

struct PropertyResult {
    std::string suite;
    std::string name;
    bool passed = false;
    std::string detail; // empty on success
};

struct VerifySummary {
    int passed = 0;
    int failed = 0;
    bool ok() const { return failed == 0; }
};

const std::vector<std::string>& verify_suites();
bool is_verify_suite(std::string_view name);

// Throws std::invalid_argument for an unknown suite or max_degree < 1.
VerifySummary run_verify(const VerifyOptions& options, const std::function<void(const PropertyResult&)>& report);

// Deterministic draws: only raw engine output and modular reduction, no library
// distributions, so results agree across standard libraries.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : engine_(seed) {}
    std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }
    int between(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1))); }
    // p/q with |p| <= 3, 1 <= q <= 3, never zero.
    Rational nonzero_rational();
    // p/q with 1 <= p <= 4, 1 <= q <= 3.
    Rational positive_rational();

private:
    std::mt19937_64 engine_;
};

} // namespace logderiv

#endif // LOGDERIV_VERIFY_HPP
