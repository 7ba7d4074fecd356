/*
   Copyright 2026 The tcc Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Benchmark of the serial reference kernels against their
// OpenMP-parallel variants.  The two must agree bitwise; the exit code
// reports any mismatch, so this doubles as a correctness gate.
//
// Usage: bench_kernels [--quick]

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "tcc/kernels.hpp"
#include "tcc/matrix.hpp"
#include "tcc/rng.hpp"

namespace {

using tcc::Field;
using tcc::MatF;
using tcc::Mode;

double time_ms(const std::function<void()>& fn) {
    auto start = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

bool report(const char* name, const std::string& size, double serial_ms, double parallel_ms,
            bool equal) {
    std::printf("%-12s %-14s serial %9.2f ms   parallel %9.2f ms   speedup %5.2fx   %s\n", name,
                size.c_str(), serial_ms, parallel_ms,
                parallel_ms > 0 ? serial_ms / parallel_ms : 0.0, equal ? "match" : "MISMATCH");
    return equal;
}

}  // namespace

int main(int argc, char** argv) {
    bool quick = argc > 1 && std::string(argv[1]) == "--quick";
    bool all_equal = true;

    std::printf("OpenMP: %s\n", tcc::parallel_enabled() ? "enabled" : "disabled (serial fallback)");

    {
        Field F = Field::prime_field(251);
        uint32_t n = quick ? 64 : 256;
        tcc::SplitMix64 rng(1);
        MatF a = tcc::m_random(F, n, n, rng);
        MatF b = tcc::m_random(F, n, n, rng);
        MatF cs(F, 0, 0), cp(F, 0, 0);
        double ts = time_ms([&] { cs = tcc::k_matmul(a, b, Mode::Serial); });
        double tp = time_ms([&] { cp = tcc::k_matmul(a, b, Mode::Parallel); });
        all_equal &= report("matmul", std::to_string(n) + "x" + std::to_string(n), ts, tp, cs == cp);
    }

    {
        Field F = Field::prime_field(17);
        uint32_t n = quick ? 96 : 384;
        tcc::SplitMix64 rng(2);
        MatF a = tcc::m_random(F, n, 2 * n, rng);
        tcc::KRref rs{MatF(F, 0, 0), 0, {}}, rp{MatF(F, 0, 0), 0, {}};
        double ts = time_ms([&] { rs = tcc::k_rref(a, Mode::Serial); });
        double tp = time_ms([&] { rp = tcc::k_rref(a, Mode::Parallel); });
        bool equal = rs.R == rp.R && rs.rank == rp.rank && rs.pivot_cols == rp.pivot_cols;
        all_equal &= report("rref", std::to_string(n) + "x" + std::to_string(2 * n), ts, tp, equal);
    }

    {
        Field F = Field::prime_field(3);
        uint32_t dim = quick ? 9 : 13;
        tcc::SplitMix64 rng(3);
        std::vector<MatF> basis;
        for (uint32_t i = 0; i < dim; ++i) basis.push_back(tcc::m_random(F, 6, 6, rng));
        uint32_t ws = 0, wp = 0;
        double ts = time_ms([&] { ws = tcc::k_min_weight(basis, Mode::Serial); });
        double tp = time_ms([&] { wp = tcc::k_min_weight(basis, Mode::Parallel); });
        all_equal &= report("min_weight", "3^" + std::to_string(dim) + " words", ts, tp, ws == wp);
    }

    if (!all_equal) {
        std::printf("FAIL: parallel kernels disagree with the serial reference\n");
        return 1;
    }
    std::printf("all kernels match\n");
    return 0;
}
