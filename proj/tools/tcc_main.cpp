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

// tcc: exact dimensions and bases of twisted centralizer codes
// C(A, gamma) = {X : AX = gamma XA} over GF(q).

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "tcc/cli.hpp"

namespace {

struct CommonOpts {
    std::string input;
    std::string format;  // "", "text", "json"
    std::string gamma;   // override, JSON literal
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("-i,--input", o.input, "problem file (JSON)")->required();
    cmd->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--gamma", o.gamma,
                    "override gamma from the file (integer or coefficient array)");
}

tcc::ProblemFile load(const CommonOpts& o) {
    tcc::ProblemFile p = tcc::load_problem(o.input);
    if (!o.gamma.empty()) {
        tcc::Json g = tcc::Json::parse(o.gamma, nullptr, false);
        if (g.is_discarded()) throw tcc::ParseError("--gamma: not a valid JSON literal");
        p.gamma = tcc::FieldElem(p.field, tcc::elem_from_json(p.field, g, "--gamma"));
    }
    return p;
}

int emit(const tcc::RunReport& r, const CommonOpts& o, const tcc::ProblemFile* p) {
    std::string format = !o.format.empty()               ? o.format
                         : (p && p->options.format)      ? *p->options.format
                                                         : std::string("text");
    if (format == "json")
        std::cout << r.to_json().dump(2) << "\n";
    else
        std::cout << r.text << "\n";
    return r.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"twisted centralizer codes C(A,gamma) over finite fields"};
    app.require_subcommand(1);

    CommonOpts dim_o, basis_o, dec_o, check_o, oracle_o, params_o;
    std::string codeword_file;
    bool unsafe_large = false;
    bool distance = false;
    uint64_t max_enum = 1u << 24;

    CLI::App* dim = app.add_subcommand("dim", "exact code dimension (formula only)");
    add_common(dim, dim_o);
    CLI::App* basis = app.add_subcommand("basis", "explicit code basis with provenance");
    add_common(basis, basis_o);
    CLI::App* dec = app.add_subcommand("decompose", "primary cyclic decomposition of [A]F^n");
    add_common(dec, dec_o);
    CLI::App* check = app.add_subcommand("check", "test membership AX = gamma XA");
    add_common(check, check_o);
    check->add_option("--codeword", codeword_file, "candidate codeword file (JSON matrix)");
    CLI::App* oracle = app.add_subcommand("oracle", "brute-force Sylvester-kernel basis");
    add_common(oracle, oracle_o);
    oracle->add_flag("--unsafe-large", unsafe_large, "lift the n^2 <= 4096 oracle guard");
    CLI::App* params = app.add_subcommand("params", "code parameters [n^2, k(, d)]");
    add_common(params, params_o);
    params->add_flag("--distance", distance, "enumerate the minimum distance");
    params->add_option("--max-enum", max_enum, "codeword enumeration bound (default 2^24)");

    CLI::App* rv = app.add_subcommand("random-verify", "randomized oracle-equivalence sweep");
    std::string q_list = "2,3,4,5";
    uint32_t n_max = 6;
    uint32_t trials = 300;
    uint64_t seed = 42;
    std::string rv_format;
    rv->add_option("--q", q_list, "comma-separated field orders (prime powers)");
    rv->add_option("--n-max", n_max, "maximum matrix size");
    rv->add_option("--trials", trials, "number of random (A, gamma) trials");
    rv->add_option("--seed", seed, "master PRNG seed (splitmix64)")->envname("TCC_SEED");
    rv->add_option("--format", rv_format, "output format")->check(CLI::IsMember({"text", "json"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (dim->parsed()) {
            tcc::ProblemFile p = load(dim_o);
            return emit(tcc::cmd_dim(p), dim_o, &p);
        }
        if (basis->parsed()) {
            tcc::ProblemFile p = load(basis_o);
            return emit(tcc::cmd_basis(p), basis_o, &p);
        }
        if (dec->parsed()) {
            tcc::ProblemFile p = load(dec_o);
            return emit(tcc::cmd_decompose(p), dec_o, &p);
        }
        if (check->parsed()) {
            tcc::ProblemFile p = load(check_o);
            if (!codeword_file.empty()) p.X = tcc::load_matrix(codeword_file, p.field);
            return emit(tcc::cmd_check(p), check_o, &p);
        }
        if (oracle->parsed()) {
            tcc::ProblemFile p = load(oracle_o);
            return emit(tcc::cmd_oracle(p, unsafe_large), oracle_o, &p);
        }
        if (params->parsed()) {
            tcc::ProblemFile p = load(params_o);
            uint64_t bound = p.options.max_enum ? *p.options.max_enum : max_enum;
            if (params->count("--max-enum")) bound = max_enum;
            return emit(tcc::cmd_params(p, distance || p.options.distance, bound), params_o, &p);
        }
        if (rv->parsed()) {
            tcc::SweepConfig cfg;
            cfg.n_max = n_max;
            cfg.trials = trials;
            cfg.seed = seed;
            for (size_t pos = 0; pos < q_list.size();) {
                size_t comma = q_list.find(',', pos);
                if (comma == std::string::npos) comma = q_list.size();
                std::string tok = q_list.substr(pos, comma - pos);
                if (!tok.empty()) cfg.fields.push_back(tcc::field_from_q(std::stoull(tok)));
                pos = comma + 1;
            }
            tcc::RunReport r = tcc::cmd_random_verify(cfg);
            CommonOpts o;
            o.format = rv_format;
            return emit(r, o, nullptr);
        }
    } catch (const tcc::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
