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

#include "tcc/verify.hpp"

#include <stdexcept>

#include "tcc/codes.hpp"
#include "tcc/decomp.hpp"

namespace tcc {

std::optional<std::string> verify_one(const MatF& A, const FieldElem& gamma, bool check_spans,
                                      bool check_certificates) {
    uint32_t dim = twisted_dim(A, gamma);
    std::vector<MatF> oracle = oracle_kernel(A, gamma);
    if (dim != oracle.size())
        return "twisted_dim " + std::to_string(dim) + " != oracle nullity " +
               std::to_string(oracle.size());

    TwistedCodeBasis code = twisted_basis(A, gamma);
    if (code.dimension != dim || code.basis.size() != dim)
        return "basis count " + std::to_string(code.basis.size()) + " != twisted_dim " +
               std::to_string(dim);
    for (const MatF& x : code.basis)
        if (!is_codeword(A, gamma, x)) return std::string("basis element fails AX = gamma XA");
    if (!linearly_independent(code.basis)) return std::string("basis elements dependent");
    if (check_spans && !same_span(code.basis, oracle))
        return std::string("basis span differs from oracle kernel span");

    if (check_certificates) {
        PrimaryCyclicDecomposition dec = decompose(A);
        if (!validate_decomposition(dec).all())
            return std::string("decomposition certificates failed");
        if (!gamma.is_zero() && !validate_decomposition(twist_decomposition(dec, gamma)).all())
            return std::string("twisted decomposition certificates failed");
    }
    return std::nullopt;
}

SweepReport random_verify(const SweepConfig& cfg) {
    if (cfg.fields.empty()) throw std::invalid_argument("random_verify: no fields");
    if (cfg.n_max < 1) throw std::invalid_argument("random_verify: n_max must be >= 1");
    SweepReport report;
    report.trials_run = cfg.trials;
    if (cfg.trials == 0) return report;

    SplitMix64 master(cfg.seed);
    uint64_t best_fail = cfg.trials;

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8)
#endif
    for (int64_t t = 0; t < (int64_t)cfg.trials; ++t) {
        const Field& F = cfg.fields[(size_t)t % cfg.fields.size()];
        SplitMix64 rng = master.derive((uint64_t)t);
        uint32_t n = 1 + (uint32_t)rng.below(cfg.n_max);
        MatF A = m_random(F, n, n, rng);
        FieldElem gamma(F, (uint32_t)rng.below(F.q()));

        std::optional<std::string> err =
            verify_one(A, gamma, cfg.check_spans, cfg.check_certificates);

#ifdef _OPENMP
#pragma omp critical
#endif
        {
            if (gamma.is_zero())
                ++report.gamma_zero;
            else if (gamma.raw() == 1)
                ++report.gamma_one;
            else
                ++report.gamma_other;
            if (!err) {
                ++report.passed;
            } else {
                ++report.failed;
                if ((uint64_t)t < best_fail) {
                    best_fail = (uint64_t)t;
                    report.first_failure = TrialFailure{(uint64_t)t,        A,
                                                        gamma,              twisted_dim(A, gamma),
                                                        (uint32_t)oracle_kernel(A, gamma).size(),
                                                        *err};
                }
            }
        }
    }
    return report;
}

}  // namespace tcc
