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

#include "tcc/kernels.hpp"

#include <atomic>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tcc {

bool parallel_enabled() {
#ifdef _OPENMP
    return true;
#else
    return false;
#endif
}

namespace {

bool pick_parallel(Mode mode, uint64_t work, uint64_t threshold) {
    switch (mode) {
        case Mode::Serial:
            return false;
        case Mode::Parallel:
            return parallel_enabled();
        case Mode::Auto:
            return parallel_enabled() && work >= threshold;
    }
    return false;
}

void matmul_row(const Field& F, const MatF& a, const MatF& b, MatF& c, uint32_t i) {
    uint32_t n = a.cols(), m = b.cols();
    for (uint32_t k = 0; k < n; ++k) {
        uint32_t aik = a.at(i, k);
        if (aik == 0) continue;
        for (uint32_t j = 0; j < m; ++j) {
            uint32_t prod = F.mul(aik, b.at(k, j));
            if (prod) c.set(i, j, F.add(c.at(i, j), prod));
        }
    }
}

}  // namespace

MatF k_matmul(const MatF& a, const MatF& b, Mode mode) {
    detail::require_same_field(a.field(), b.field(), "k_matmul");
    if (a.cols() != b.rows()) throw std::invalid_argument("k_matmul: shape mismatch");
    const Field& F = a.field();
    MatF c(F, a.rows(), b.cols());
    uint64_t work = (uint64_t)a.rows() * a.cols() * b.cols();
    if (pick_parallel(mode, work, 1u << 15)) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
        for (int64_t i = 0; i < (int64_t)a.rows(); ++i) matmul_row(F, a, b, c, (uint32_t)i);
#endif
    } else {
        for (uint32_t i = 0; i < a.rows(); ++i) matmul_row(F, a, b, c, i);
    }
    return c;
}

KRref k_rref(const MatF& a, Mode mode) {
    const Field& F = a.field();
    KRref out{a, 0, {}};
    MatF& R = out.R;
    uint32_t rows = R.rows(), cols = R.cols();
    uint64_t work = (uint64_t)rows * cols;
    bool par = pick_parallel(mode, work * rows, 1u << 16);
    uint32_t rank = 0;
    for (uint32_t col = 0; col < cols && rank < rows; ++col) {
        uint32_t pivot = rows;
        for (uint32_t r = rank; r < rows; ++r)
            if (R.at(r, col) != 0) {
                pivot = r;
                break;
            }
        if (pivot == rows) continue;
        if (pivot != rank)
            for (uint32_t j = 0; j < cols; ++j) {
                uint32_t t = R.at(rank, j);
                R.set(rank, j, R.at(pivot, j));
                R.set(pivot, j, t);
            }
        uint32_t inv = F.inv(R.at(rank, col));
        if (inv != 1)
            for (uint32_t j = col; j < cols; ++j) R.set(rank, j, F.mul(inv, R.at(rank, j)));
        auto eliminate = [&](uint32_t i) {
            if (i == rank) return;
            uint32_t f = R.at(i, col);
            if (f == 0) return;
            for (uint32_t j = col; j < cols; ++j)
                R.set(i, j, F.sub(R.at(i, j), F.mul(f, R.at(rank, j))));
        };
        if (par) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
            for (int64_t i = 0; i < (int64_t)rows; ++i) eliminate((uint32_t)i);
#endif
        } else {
            for (uint32_t i = 0; i < rows; ++i) eliminate(i);
        }
        out.pivot_cols.push_back(col);
        ++rank;
    }
    out.rank = rank;
    return out;
}

namespace {

// Enumerate all coefficient tuples whose most significant digit is
// `msd`, maintaining suffix sums of scaled basis elements; updates
// `best` and sets `stop` when the global optimum 1 is reached.
void weight_block(const std::vector<std::vector<std::vector<uint32_t>>>& scaled,
                  const Field& F, uint32_t msd, uint32_t& best, std::atomic<bool>& stop) {
    size_t k = scaled.size();
    size_t len = scaled[0][1].size();
    uint32_t q = F.q();
    std::vector<std::vector<uint32_t>> part(k, std::vector<uint32_t>(len, 0));
    std::vector<uint32_t> d(k, 0);
    d[k - 1] = msd;
    part[k - 1] = scaled[k - 1][msd];
    for (size_t j = k - 1; j-- > 0;) part[j] = part[j + 1];

    bool first = true;
    while (true) {
        if (!(first && msd == 0)) {
            uint32_t w = 0;
            for (uint32_t v : part[0])
                if (v) ++w;
            if (w < best) best = w;
            if (best <= 1) {
                stop.store(true, std::memory_order_relaxed);
                return;
            }
        }
        first = false;
        if (stop.load(std::memory_order_relaxed)) return;
        size_t i = 0;
        while (i + 1 < k && d[i] == q - 1) {
            d[i] = 0;
            ++i;
        }
        if (i + 1 >= k) return;
        ++d[i];
        const std::vector<uint32_t>& add = scaled[i][d[i]];
        const std::vector<uint32_t>& up = part[i + 1];
        for (size_t t = 0; t < len; ++t) part[i][t] = F.add(up[t], add[t]);
        for (size_t j = i; j-- > 0;) part[j] = part[j + 1];
    }
}

}  // namespace

uint32_t k_min_weight(const std::vector<MatF>& basis, Mode mode) {
    if (basis.empty()) return 0;
    const Field& F = basis[0].field();
    uint32_t q = F.q();
    size_t k = basis.size();
    size_t len = (size_t)basis[0].rows() * basis[0].cols();
    for (const auto& b : basis)
        if ((size_t)b.rows() * b.cols() != len) throw std::invalid_argument("k_min_weight: shape mismatch");

    // scaled[j][c] = c * basis[j], flattened
    std::vector<std::vector<std::vector<uint32_t>>> scaled(k);
    for (size_t j = 0; j < k; ++j) {
        scaled[j].assign(q, std::vector<uint32_t>(len, 0));
        for (uint32_t c = 1; c < q; ++c)
            for (size_t t = 0; t < len; ++t) scaled[j][c][t] = F.mul(c, basis[j].data()[t]);
    }

    uint64_t tuples = 1;
    for (size_t j = 0; j < k; ++j) tuples *= q;
    std::atomic<bool> stop{false};
    uint32_t global_best = (uint32_t)len + 1;

    if (pick_parallel(mode, tuples * len, 1u << 18)) {
#ifdef _OPENMP
#pragma omp parallel
        {
            uint32_t local = (uint32_t)len + 1;
#pragma omp for schedule(dynamic, 1) nowait
            for (int64_t msd = 0; msd < (int64_t)q; ++msd)
                weight_block(scaled, F, (uint32_t)msd, local, stop);
#pragma omp critical
            if (local < global_best) global_best = local;
        }
#endif
    } else {
        for (uint32_t msd = 0; msd < q && !stop.load(std::memory_order_relaxed); ++msd)
            weight_block(scaled, F, msd, global_best, stop);
    }
    return global_best;
}

}  // namespace tcc
