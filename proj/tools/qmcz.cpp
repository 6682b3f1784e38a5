// Copyright 2026 The qmcz Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <iostream>

#include <CLI11.hpp>

#include "qmcz/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"CSS codes with addressable, parallel multi-control-Z gates"};
  app.require_subcommand(1);

  qmcz::RunConfig config;

  long long ell = 0, s = 0, N = 0, k = 0;
  int arity = 0;
  uint32_t p = 0, e = 0;
  long long grs_k = 0, grs_subgroup = 0;
  int grs_m_max = 0;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--budget", config.budget, "enumeration cap");
    cmd->add_option("--seed", config.seed, "seed for sampled checks");
    cmd->add_option("--out", config.out_path, "output file path");
  };
  auto add_instance_opts = [&](CLI::App* cmd) {
    cmd->add_option("--instance", config.instance_path, "instance file");
    cmd->add_option("--p", p, "field characteristic (build from parameters)");
    cmd->add_option("--e", e, "field extension degree");
    cmd->add_option("--k", grs_k, "evaluation code dimension");
    cmd->add_option("--subgroup", grs_subgroup, "additive subgroup size |V|");
    cmd->add_option("--rep", config.grs_rep, "coset representative value");
    cmd->add_option("--m-max", grs_m_max, "requested multiplication order");
  };

  CLI::App* bounds = app.add_subcommand("bounds", "closed-form family bound calculators");
  bounds->add_option("--ell", ell, "tower parameter ell")->required();
  bounds->add_option("--s", s, "tower parameter s")->required();
  bounds->add_option("--N", N, "code length")->required();
  bounds->add_option("--k", k, "logical dimension for the quantum bound");
  bounds->add_option("--arity", arity, "gate arity for the depth bound");
  add_common(bounds);

  CLI::App* build = app.add_subcommand("build", "instance -> CSS artifact");
  add_instance_opts(build);
  build->add_option("--emit-instance", config.emit_instance_path, "also write the instance file");
  add_common(build);

  CLI::App* check = app.add_subcommand("check", "full invariant suite on an instance");
  add_instance_opts(check);
  check->add_option("--arity", arity, "verify only this gate arity");
  add_common(check);

  CLI::App* compile = app.add_subcommand("compile", "logical circuit -> depth-one layer schedule");
  add_instance_opts(compile);
  compile->add_option("--circuit", config.circuit_path, "logical circuit file")->required();
  add_common(compile);

  CLI::App* phase = app.add_subcommand("phase", "evaluate a diagonal circuit's phase exponent");
  add_instance_opts(phase);
  phase->add_option("--circuit", config.circuit_path, "circuit file")->required();
  phase->add_option("--input", config.input_path, "input vectors file")->required();
  add_common(phase);

  CLI::App* distance = app.add_subcommand("distance", "brute-force distances within budget");
  add_instance_opts(distance);
  add_common(distance);

  CLI11_PARSE(app, argc, argv);

  CLI::App* parsed = app.get_subcommands().front();
  config.subcommand = parsed->get_name();
  if (bounds->parsed()) {
    config.ell = ell;
    config.s = s;
    config.N = N;
    if (bounds->count("--k") > 0) config.k = k;
    if (bounds->count("--arity") > 0) config.arity = arity;
  } else {
    if (parsed->count("--p") > 0) config.grs_p = p;
    if (parsed->count("--e") > 0) config.grs_e = e;
    if (parsed->count("--k") > 0) config.grs_k = grs_k;
    if (parsed->count("--subgroup") > 0) config.grs_subgroup = grs_subgroup;
    if (parsed->count("--m-max") > 0) config.grs_m_max = grs_m_max;
    if (parsed->get_option_no_throw("--arity") != nullptr && parsed->count("--arity") > 0) {
      config.arity = arity;
    }
  }

  return qmcz::run(config, std::cout, std::cerr);
}
