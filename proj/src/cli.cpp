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

#include "tcc/cli.hpp"

#include <chrono>
#include <sstream>

#include "tcc/codes.hpp"
#include "tcc/decomp.hpp"

namespace tcc {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

Json problem_echo(const ProblemFile& p) {
    Json j;
    j["field"] = field_to_json(p.field);
    j["n"] = p.n;
    j["A"] = matrix_to_json(p.A);
    j["gamma"] = elem_to_json(p.field, p.gamma.raw());
    return j;
}

std::string order_str(const Poly& prime, uint32_t exponent) {
    if (exponent == 1) return prime.to_string();
    return "(" + prime.to_string() + ")^" + std::to_string(exponent);
}

std::string gamma_str(const ProblemFile& p) { return p.field.elem_to_string(p.gamma.raw()); }

Json provenance_to_json(const BasisProvenance& pr) {
    Json j;
    j["domain"] = {pr.block.domain_component, pr.block.domain_index};
    j["codomain"] = {pr.block.codomain_component, pr.block.codomain_index};
    j["power"] = pr.power;
    j["multiplier"] = poly_to_json(pr.block.multiplier);
    j["block_dim"] = pr.block.block_dim;
    return j;
}

}  // namespace

const char* check_state_name(CheckState s) {
    switch (s) {
        case CheckState::Passed:
            return "passed";
        case CheckState::Failed:
            return "failed";
        case CheckState::Skipped:
            return "skipped";
    }
    return "unknown";
}

bool RunReport::ok() const {
    for (const auto& [name, state] : checks)
        if (state == CheckState::Failed) return false;
    return true;
}

Json RunReport::to_json() const {
    Json j;
    j["command"] = command;
    j["inputs"] = inputs;
    j["result"] = result;
    j["elapsed_ms"] = elapsed_ms;
    Json c = Json::object();
    for (const auto& [name, state] : checks) c[name] = check_state_name(state);
    j["checks"] = c;
    return j;
}

RunReport cmd_dim(const ProblemFile& p) {
    auto start = Clock::now();
    RunReport r{"dim", problem_echo(p), {}, 0, {}, {}};
    DimBreakdown b = twisted_dim_breakdown(p.A, p.gamma);
    r.result["dimension"] = b.dimension;
    Json summands = Json::array();
    for (const auto& pair : b.pairs) {
        Json s;
        s["f"] = poly_to_json(pair.f);
        s["g"] = poly_to_json(pair.g);
        s["degree"] = pair.degree;
        summands.push_back(std::move(s));
    }
    r.result["summands"] = summands;

    std::ostringstream os;
    os << "dim C(A," << gamma_str(p) << ") = " << b.dimension;
    if (p.gamma.is_zero()) {
        os << " = n * nullity(A)";
    } else if (b.pairs.size() > 1) {
        os << " = ";
        for (size_t i = 0; i < b.pairs.size(); ++i) os << (i ? "+" : "") << b.pairs[i].degree;
    }
    r.text = os.str();
    r.checks.emplace_back("oracle_agreement", CheckState::Skipped);
    r.elapsed_ms = ms_since(start);
    return r;
}

RunReport cmd_basis(const ProblemFile& p) {
    auto start = Clock::now();
    RunReport r{"basis", problem_echo(p), {}, 0, {}, {}};
    TwistedCodeBasis code = twisted_basis(p.A, p.gamma);

    bool membership = true;
    for (const MatF& x : code.basis)
        if (!is_codeword(p.A, p.gamma, x)) membership = false;
    bool count = code.dimension == twisted_dim(p.A, p.gamma) && code.basis.size() == code.dimension;
    bool independent = linearly_independent(code.basis);
    r.checks.emplace_back("membership", membership ? CheckState::Passed : CheckState::Failed);
    r.checks.emplace_back("count_matches_dim", count ? CheckState::Passed : CheckState::Failed);
    r.checks.emplace_back("independent", independent ? CheckState::Passed : CheckState::Failed);

    r.result["dimension"] = code.dimension;
    Json basis = Json::array();
    for (const MatF& x : code.basis) basis.push_back(matrix_to_json(x));
    r.result["basis"] = basis;
    Json prov = Json::array();
    for (const auto& pr : code.provenance) prov.push_back(provenance_to_json(pr));
    r.result["provenance"] = prov;

    std::ostringstream os;
    os << "dim C(A," << gamma_str(p) << ") = " << code.dimension << "\n";
    for (size_t i = 0; i < code.basis.size(); ++i)
        os << "X" << (i + 1) << " =\n" << code.basis[i].to_string() << "\n";
    r.text = os.str();
    r.elapsed_ms = ms_since(start);
    return r;
}

RunReport cmd_decompose(const ProblemFile& p) {
    auto start = Clock::now();
    RunReport r{"decompose", problem_echo(p), {}, 0, {}, {}};
    PrimaryCyclicDecomposition dec = decompose(p.A);
    DecompCertificates cert = validate_decomposition(dec);
    r.checks.emplace_back("direct_sum", cert.direct_sum ? CheckState::Passed : CheckState::Failed);
    r.checks.emplace_back("orders_exact", cert.orders_exact ? CheckState::Passed : CheckState::Failed);
    r.checks.emplace_back("product_char", cert.product_char ? CheckState::Passed : CheckState::Failed);
    r.checks.emplace_back("lcm_minimal", cert.lcm_minimal ? CheckState::Passed : CheckState::Failed);

    r.result["minimal"] = poly_to_json(dec.minimal);
    r.result["characteristic"] = poly_to_json(dec.characteristic);
    Json comps = Json::array();
    for (const auto& comp : dec.components) {
        Json c;
        c["prime"] = poly_to_json(comp.prime);
        Json gens = Json::array();
        for (const auto& g : comp.generators) {
            Json gj;
            Json v = Json::array();
            for (uint32_t i = 0; i < g.v.rows(); ++i) v.push_back(elem_to_json(p.field, g.v.at(i, 0)));
            gj["vector"] = v;
            gj["exponent"] = g.exponent;
            gj["order"] = poly_to_json(g.order);
            gens.push_back(std::move(gj));
        }
        c["generators"] = gens;
        comps.push_back(std::move(c));
    }
    r.result["components"] = comps;
    r.result["certificate_basis"] = matrix_to_json(krylov_layout(dec).B);

    std::ostringstream os;
    os << "m_A = " << dec.minimal.to_string() << "\n";
    os << "char_A = " << dec.characteristic.to_string() << "\n";
    for (const auto& comp : dec.components) {
        os << "p = " << comp.prime.to_string() << ": orders";
        for (const auto& g : comp.generators) os << " " << order_str(comp.prime, g.exponent);
        os << "\n";
    }
    r.text = os.str();
    r.elapsed_ms = ms_since(start);
    return r;
}

RunReport cmd_check(const ProblemFile& p) {
    auto start = Clock::now();
    RunReport r{"check", problem_echo(p), {}, 0, {}, {}};
    if (!p.X) throw ParseError("check: no codeword supplied (embed \"X\" or pass --codeword)");
    bool member = is_codeword(p.A, p.gamma, *p.X);
    r.result["is_codeword"] = member;
    r.inputs["X"] = matrix_to_json(*p.X);
    r.text = member ? "true" : "false";
    r.checks.emplace_back("input_shapes", CheckState::Passed);
    r.elapsed_ms = ms_since(start);
    return r;
}

RunReport cmd_oracle(const ProblemFile& p, bool unsafe_large) {
    auto start = Clock::now();
    RunReport r{"oracle", problem_echo(p), {}, 0, {}, {}};
    std::vector<MatF> kernel = oracle_kernel(p.A, p.gamma, unsafe_large);

    bool members = true;
    for (const MatF& x : kernel)
        if (!is_codeword(p.A, p.gamma, x)) members = false;
    bool agrees = kernel.size() == twisted_dim(p.A, p.gamma);
    r.checks.emplace_back("elements_are_codewords", members ? CheckState::Passed : CheckState::Failed);
    r.checks.emplace_back("count_matches_dim", agrees ? CheckState::Passed : CheckState::Failed);

    r.result["dimension"] = kernel.size();
    Json basis = Json::array();
    for (const MatF& x : kernel) basis.push_back(matrix_to_json(x));
    r.result["basis"] = basis;
    r.text = "oracle dim C(A," + gamma_str(p) + ") = " + std::to_string(kernel.size());
    r.elapsed_ms = ms_since(start);
    return r;
}

RunReport cmd_params(const ProblemFile& p, bool distance, uint64_t max_enum) {
    auto start = Clock::now();
    RunReport r{"params", problem_echo(p), {}, 0, {}, {}};
    CodeParams cp = code_params(p.A, p.gamma, distance, max_enum);
    r.result["length"] = cp.length;
    r.result["dimension"] = cp.dimension;
    if (cp.distance)
        r.result["distance"] = *cp.distance;
    else
        r.result["distance"] = nullptr;
    r.checks.emplace_back("distance_enumerated",
                          cp.distance ? CheckState::Passed : CheckState::Skipped);

    std::ostringstream os;
    os << "[" << cp.length << ", " << cp.dimension;
    if (cp.distance) os << ", " << *cp.distance;
    os << "] code over GF(" << p.field.q() << ")";
    r.text = os.str();
    r.elapsed_ms = ms_since(start);
    return r;
}

RunReport cmd_random_verify(const SweepConfig& cfg) {
    auto start = Clock::now();
    RunReport r{"random-verify", Json::object(), {}, 0, {}, {}};
    Json qs = Json::array();
    for (const Field& f : cfg.fields) qs.push_back(f.q());
    r.inputs["q"] = qs;
    r.inputs["n_max"] = cfg.n_max;
    r.inputs["trials"] = cfg.trials;
    r.inputs["seed"] = cfg.seed;

    SweepReport rep = random_verify(cfg);
    r.result["trials"] = rep.trials_run;
    r.result["passed"] = rep.passed;
    r.result["failed"] = rep.failed;
    r.result["gamma_zero"] = rep.gamma_zero;
    r.result["gamma_one"] = rep.gamma_one;
    r.result["gamma_other"] = rep.gamma_other;
    if (rep.first_failure) {
        const TrialFailure& tf = *rep.first_failure;
        Json f;
        f["trial"] = tf.trial;
        f["field"] = field_to_json(tf.A.field());
        f["A"] = matrix_to_json(tf.A);
        f["gamma"] = elem_to_json(tf.A.field(), tf.gamma.raw());
        f["dim_formula"] = tf.dim_formula;
        f["dim_oracle"] = tf.dim_oracle;
        f["what"] = tf.what;
        r.result["first_failure"] = f;
    } else {
        r.result["first_failure"] = nullptr;
    }

    CheckState state = cfg.trials == 0 ? CheckState::Skipped
                       : rep.all_passed() ? CheckState::Passed
                                          : CheckState::Failed;
    r.checks.emplace_back("oracle_equivalence", state);

    std::ostringstream os;
    os << rep.passed << "/" << rep.trials_run << " trials passed";
    if (cfg.trials == 0) os << " (skipped: no trials requested)";
    if (rep.first_failure)
        os << "\nfirst failure: trial " << rep.first_failure->trial << ": " << rep.first_failure->what
           << "\nA =\n"
           << rep.first_failure->A.to_string() << "\ngamma = "
           << rep.first_failure->A.field().elem_to_string(rep.first_failure->gamma.raw());
    r.text = os.str();
    r.elapsed_ms = ms_since(start);
    return r;
}

Field field_from_q(uint64_t q) {
    if (q < 2) throw ParseError("q must be a prime power >= 2");
    uint64_t p = 0;
    for (uint64_t d = 2; d * d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    if (p == 0) return Field::prime_field((uint32_t)q);
    uint32_t k = 0;
    uint64_t v = q;
    while (v % p == 0) {
        v /= p;
        ++k;
    }
    if (v != 1) throw ParseError("q = " + std::to_string(q) + " is not a prime power");
    return Field::extension((uint32_t)p, k);
}

}  // namespace tcc
