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

#include "qmcz/cli.hpp"

#include <iomanip>
#include <random>
#include <sstream>

namespace qmcz {

namespace {

struct CheckLine {
  std::string name;
  bool pass = false;
  std::string detail;
};

void print_lines(const std::vector<CheckLine>& lines, std::ostream& out) {
  for (const auto& line : lines) {
    out << (line.pass ? "PASS " : "FAIL ") << line.name;
    if (!line.detail.empty()) out << ": " << line.detail;
    out << "\n";
  }
}

Json lines_to_json(const std::vector<CheckLine>& lines) {
  Json arr = Json::array();
  for (const auto& line : lines) {
    arr.push_back(Json{{"name", line.name}, {"pass", line.pass}, {"detail", line.detail}});
  }
  return arr;
}

bool all_pass(const std::vector<CheckLine>& lines) {
  for (const auto& line : lines) {
    if (!line.pass) return false;
  }
  return true;
}

FamilyInstance load_or_build_instance(const RunConfig& config) {
  if (!config.instance_path.empty()) {
    return instance_from_json(load_json_file(config.instance_path));
  }
  if (config.grs_p && config.grs_e && config.grs_k && config.grs_subgroup) {
    FieldPtr f = Field::create(*config.grs_p, *config.grs_e);
    return grs_build(f, *config.grs_k, *config.grs_subgroup, config.grs_rep,
                     config.grs_m_max.value_or(2));
  }
  throw Error(ErrorCode::InvalidArgument,
              "either --instance or the full --p/--e/--k/--subgroup quadruple is required");
}

std::string tuple_str(const std::vector<Index>& t) {
  std::string out = "(";
  for (size_t i = 0; i < t.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(t[i]);
  }
  return out + ")";
}

int run_bounds(const RunConfig& config, std::ostream& out) {
  if (!config.ell || !config.s || !config.N) {
    throw Error(ErrorCode::InvalidArgument, "bounds requires --ell, --s and --N");
  }
  BoundReport report = classical_bounds(*config.ell, *config.s, *config.N);
  if (config.k) report = bounds_with_quantum(report, *config.k, config.arity);

  auto line = [&](const char* name, const std::string& value) {
    out << "  " << std::left << std::setw(10) << name << value << "\n";
  };
  out << "bound report\n";
  line("ell", std::to_string(report.ell));
  line("s", std::to_string(report.s));
  line("N", std::to_string(report.N));
  line("K_lb", report.K_lb.str() + "  (floor " + std::to_string(report.K_lb.floor()) + ")");
  line("D_lb", report.D_lb.str() + "  (floor " + std::to_string(report.D_lb.floor()) + ")");
  line("Dperp_lb",
       report.Dperp_lb.str() + "  (floor " + std::to_string(report.Dperp_lb.floor()) + ")");
  if (report.k) line("k", std::to_string(*report.k));
  if (report.d_lb) line("d_lb", std::to_string(*report.d_lb));
  if (report.depth_ub) line("depth_ub", std::to_string(*report.depth_ub));

  Json j{{"ell", report.ell},
         {"s", report.s},
         {"N", report.N},
         {"K_lb", Json{{"num", report.K_lb.num()}, {"den", report.K_lb.den()}, {"floor", report.K_lb.floor()}}},
         {"D_lb", Json{{"num", report.D_lb.num()}, {"den", report.D_lb.den()}, {"floor", report.D_lb.floor()}}},
         {"Dperp_lb", Json{{"num", report.Dperp_lb.num()},
                           {"den", report.Dperp_lb.den()},
                           {"floor", report.Dperp_lb.floor()}}}};
  if (report.k) j["k"] = *report.k;
  if (report.d_lb) j["d_lb"] = *report.d_lb;
  if (report.depth_ub) j["depth_ub"] = *report.depth_ub;
  out << "machine " << j.dump() << "\n";
  if (!config.out_path.empty()) save_json_file(config.out_path, j);
  return 0;
}

int run_build(const RunConfig& config, std::ostream& out, std::ostream& err) {
  FamilyInstance instance = load_or_build_instance(config);
  ValidationReport report = validate(instance);
  if (!report.all_pass()) {
    for (const auto& item : report.items) {
      if (!item.informational && !item.pass) err << "FAIL " << item.name << ": " << item.detail << "\n";
    }
    return 1;
  }
  StandardForm sf = standard_form(instance);
  CssCode css = build_css(sf, instance);
  if (!config.emit_instance_path.empty()) {
    save_json_file(config.emit_instance_path, instance_to_json(instance));
  }
  if (!config.out_path.empty()) save_json_file(config.out_path, css_to_json(css));
  out << "css code [[" << css.n() << ", " << css.k() << "]]_" << instance.field()->q()
      << "  (N=" << instance.n() << ", K=" << instance.code.dim() << ", stabilizer rows "
      << css.stab_rows() << ")\n";
  return 0;
}

std::vector<CheckLine> full_check(const FamilyInstance& instance, uint64_t seed, uint64_t budget,
                                  std::optional<int> only_arity) {
  std::vector<CheckLine> lines;
  ValidationReport vr = validate(instance);
  for (const auto& item : vr.items) {
    lines.push_back({"instance: " + item.name, item.informational ? true : item.pass,
                     item.informational ? (item.name + " = " + (item.pass ? "yes" : "no")) : item.detail});
  }
  if (!vr.all_pass()) return lines;

  const Field& f = *instance.field();
  StandardForm sf;
  CssCode css;
  try {
    sf = standard_form(instance);
    bool delta_ok = true;
    for (Index r = 0; r < sf.k && delta_ok; ++r) {
      for (Index c = 0; c < sf.k && delta_ok; ++c) {
        delta_ok = sf.g_tilde(r, c) == (r == c ? Fq(1) : Fq(0));
      }
    }
    lines.push_back({"standard form delta property g_Q(Q') = [Q = Q']", delta_ok, ""});
  } catch (const Error& e) {
    lines.push_back({"standard form delta property g_Q(Q') = [Q = Q']", false, e.what()});
    return lines;
  }
  try {
    css = build_css(sf, instance);
    lines.push_back({"block independence inner-product table", true, ""});
  } catch (const Error& e) {
    lines.push_back({"block independence inner-product table", false, e.what()});
    return lines;
  }

  for (int mt = 1; mt <= instance.m_max; ++mt) {
    IdentityCheck c = corollary_sum_check(instance, mt);
    lines.push_back({"full-support sum identity, order " + std::to_string(mt), c.pass,
                     c.pass ? "" : "witness tuple " + tuple_str(c.witness)});
  }

  std::mt19937_64 rng(seed);
  const Index k = css.k();
  for (int arity = 2; arity <= instance.m_max; ++arity) {
    if (only_arity && arity != *only_arity) continue;
    bool ok = true;
    std::string detail;
    // every sigma tuple when the count is small, else a seeded sample
    uint64_t tuple_count = 1;
    bool exhaustive = true;
    for (int j = 1; j < arity; ++j) {
      tuple_count *= instance.group.size();
      if (tuple_count > 4096) {
        exhaustive = false;
        break;
      }
    }
    const uint64_t n_tuples = exhaustive ? tuple_count : 256;
    for (uint64_t t = 0; t < n_tuples && ok; ++t) {
      std::vector<Permutation> sigmas;
      uint64_t rest = t;
      for (int j = 1; j < arity; ++j) {
        size_t gi = exhaustive ? rest % instance.group.size() : rng() % instance.group.size();
        rest /= instance.group.size();
        sigmas.push_back(instance.group[gi]);
      }
      // S over singletons and the full set, seeded gammas
      std::vector<std::vector<Index>> s_choices;
      for (Index t2 = 0; t2 < k; ++t2) {
        s_choices.push_back({css.logical_labels[static_cast<size_t>(t2)]});
      }
      s_choices.push_back(css.logical_labels);
      for (const auto& s_set : s_choices) {
        for (int draw = 0; draw < 8 && ok; ++draw) {
          std::vector<Fq> gamma;
          for (size_t i = 0; i < s_set.size(); ++i) {
            gamma.push_back(Fq(instance.field(), static_cast<uint32_t>(rng() % f.q())));
          }
          ModulationSpec mod = modulation_build(css, sf, s_set, gamma);
          IdentityCheck c = verify_main_theorem(css, sf, mod, sigmas);
          if (!c.pass) {
            ok = false;
            detail = "witness tuple " + tuple_str(c.witness);
          }
        }
        if (!ok) break;
      }
    }
    lines.push_back({"main circuit identity (physical layer = logical gates), arity " +
                         std::to_string(arity),
                     ok, detail});
  }

  // end-to-end phase comparison on sampled logical states, arity 2
  if (instance.m_max >= 2) {
    bool ok = true;
    std::string detail;
    uint64_t coset = 1;
    bool feasible = true;
    for (Index i = 0; i < css.stab_rows(); ++i) {
      coset *= f.q();
      if (coset * coset > budget) {
        feasible = false;
        break;
      }
    }
    if (feasible) {
      std::vector<LogicalGate> circuit;
      for (Index a = 0; a < k; ++a) {
        for (Index b = 0; b < k; ++b) {
          circuit.push_back(LogicalGate{Fq(instance.field(), 1),
                                        {css.logical_labels[static_cast<size_t>(a)],
                                         css.logical_labels[static_cast<size_t>(b)]}});
        }
      }
      GateSchedule schedule = compile_circuit(instance, css, sf, circuit);
      std::vector<PhysicalGate> gates = schedule.all_gates();
      for (int trial = 0; trial < 4 && ok; ++trial) {
        std::vector<FqRowVector> xs;
        std::vector<std::vector<FqRowVector>> states;
        for (int b = 0; b < 2; ++b) {
          FqRowVector x(k);
          for (Index i = 0; i < k; ++i) x(i) = Fq(instance.field(), static_cast<uint32_t>(rng() % f.q()));
          xs.push_back(x);
          states.push_back(logical_basis(css, x, budget));
        }
        SparseApplyResult result = sparse_apply(css, gates, states, budget);
        uint32_t expected = logical_phase(css, schedule.source, xs);
        if (!result.uniform || result.exponent != expected) {
          ok = false;
          detail = "sampled logical state disagrees with the compiled layer";
        }
      }
      lines.push_back({"end-to-end phase agreement on sampled logical states (arity 2)", ok, detail});
    } else {
      lines.push_back({"end-to-end phase agreement on sampled logical states (arity 2)", true,
                       "skipped: coset enumeration exceeds budget"});
    }
  }

  // depth bound on seeded random circuits, every supported arity
  for (int arity = 2; arity <= instance.m_max; ++arity) {
    if (only_arity && arity != *only_arity) continue;
    bool ok = true;
    const long long bound = depth_bound(k, arity);
    for (int trial = 0; trial < 50 && ok; ++trial) {
      std::vector<LogicalGate> circuit;
      const size_t n_gates = 1 + rng() % static_cast<uint64_t>(4 * bound);
      for (size_t g = 0; g < n_gates; ++g) {
        LogicalGate gate;
        gate.gamma = Fq(instance.field(), static_cast<uint32_t>(1 + rng() % (f.q() - 1)));
        for (int j = 0; j < arity; ++j) {
          gate.targets.push_back(css.logical_labels[rng() % static_cast<size_t>(k)]);
        }
        circuit.push_back(std::move(gate));
      }
      GateSchedule schedule = compile_circuit(instance, css, sf, circuit);
      ok = schedule_depth(schedule) <= bound;
    }
    lines.push_back({"depth bound k^(m-1) on seeded random circuits, arity " + std::to_string(arity),
                     ok, ok ? "" : "depth exceeded " + std::to_string(bound)});
  }

  return lines;
}

int run_check(const RunConfig& config, std::ostream& out) {
  FamilyInstance instance = load_or_build_instance(config);
  std::vector<CheckLine> lines = full_check(instance, config.seed, config.budget, config.arity);
  print_lines(lines, out);
  Json j{{"checks", lines_to_json(lines)}, {"all_pass", all_pass(lines)}};
  if (!config.out_path.empty()) save_json_file(config.out_path, j);
  return all_pass(lines) ? 0 : 1;
}

int run_compile(const RunConfig& config, std::ostream& out) {
  FamilyInstance instance = load_or_build_instance(config);
  if (config.circuit_path.empty()) {
    throw Error(ErrorCode::InvalidArgument, "compile requires --circuit");
  }
  StandardForm sf = standard_form(instance);
  CssCode css = build_css(sf, instance);
  std::vector<LogicalGate> circuit =
      logical_circuit_from_json(load_json_file(config.circuit_path), instance.field());
  GateSchedule schedule = compile_circuit(instance, css, sf, circuit);
  if (!config.out_path.empty()) {
    save_json_file(config.out_path, schedule_to_json(schedule, *instance.field()));
  }
  long long bound = circuit.empty() ? 0 : depth_bound(css.k(), static_cast<int>(circuit.front().arity()));
  out << "schedule depth " << schedule_depth(schedule) << " (bound " << bound << ") from "
      << circuit.size() << " logical gates\n";
  return 0;
}

int run_phase(const RunConfig& config, std::ostream& out) {
  FamilyInstance instance = load_or_build_instance(config);
  if (config.circuit_path.empty() || config.input_path.empty()) {
    throw Error(ErrorCode::InvalidArgument, "phase requires --circuit and --input");
  }
  StandardForm sf = standard_form(instance);
  CssCode css = build_css(sf, instance);
  Json cj = load_json_file(config.circuit_path);
  Json ij = load_json_file(config.input_path);
  if (!ij.contains("vectors") || !ij["vectors"].is_array()) {
    throw Error(ErrorCode::ParseError, "input file needs a \"vectors\" array");
  }
  bool physical = false;
  if (cj.contains("gates") && cj["gates"].is_array() && !cj["gates"].empty()) {
    physical = cj["gates"].front().contains("exponent");
  }
  std::vector<FqRowVector> vectors;
  for (const auto& vj : ij["vectors"]) {
    FqRowVector v(static_cast<Index>(vj.size()));
    for (size_t i = 0; i < vj.size(); ++i) {
      v(static_cast<Index>(i)) = Fq(instance.field(), vj[i].get<uint32_t>());
    }
    vectors.push_back(std::move(v));
  }
  uint32_t exponent = 0;
  if (physical) {
    exponent = physical_phase(css, physical_circuit_from_json(cj, instance.field()), vectors);
  } else {
    exponent = logical_phase(css, logical_circuit_from_json(cj, instance.field()), vectors);
  }
  Json j{{"p", instance.field()->p()}, {"exponent", exponent}};
  out << "phase exponent " << exponent << " (p = " << instance.field()->p() << ")\n";
  if (!config.out_path.empty()) save_json_file(config.out_path, j);
  return 0;
}

int run_distance(const RunConfig& config, std::ostream& out) {
  FamilyInstance instance = load_or_build_instance(config);
  StandardForm sf = standard_form(instance);
  CssCode css = build_css(sf, instance);
  CssDistance dist = css_distance(css, config.budget);
  std::optional<int> classical = min_distance(instance.code, config.budget);

  auto show = [&](const char* name, const std::optional<int>& v) {
    out << "  " << std::left << std::setw(22) << name
        << (v.has_value() ? std::to_string(*v) : std::string("not reached within budget")) << "\n";
  };
  out << "distance report [[" << css.n() << ", " << css.k() << "]]_" << instance.field()->q() << "\n";
  show("classical D", classical);
  show("quantum dX", dist.dx);
  show("quantum dZ", dist.dz);
  show("quantum d", dist.d);
  Json j{{"n", css.n()}, {"k", css.k()}};
  if (classical) j["D"] = *classical;
  if (dist.dx) j["dx"] = *dist.dx;
  if (dist.dz) j["dz"] = *dist.dz;
  if (dist.d) j["d"] = *dist.d;
  out << "machine " << j.dump() << "\n";
  if (!config.out_path.empty()) save_json_file(config.out_path, j);
  return 0;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.budget < 1) throw Error(ErrorCode::InvalidArgument, "budget must be >= 1");
    if (config.subcommand == "bounds") return run_bounds(config, out);
    if (config.subcommand == "build") return run_build(config, out, err);
    if (config.subcommand == "check") return run_check(config, out);
    if (config.subcommand == "compile") return run_compile(config, out);
    if (config.subcommand == "phase") return run_phase(config, out);
    if (config.subcommand == "distance") return run_distance(config, out);
    throw Error(ErrorCode::InvalidArgument, "unknown subcommand " + config.subcommand);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    switch (e.code()) {
      // malformed or out-of-domain inputs
      case ErrorCode::ParseError:
      case ErrorCode::InvalidArgument:
      case ErrorCode::UnknownLabel:
      case ErrorCode::LengthMismatch:
      case ErrorCode::DegreeMismatch:
      case ErrorCode::NonPrime:
      case ErrorCode::ReducibleModulus:
      case ErrorCode::SpecMismatch:
      case ErrorCode::ArityMismatch:
      case ErrorCode::BlockMismatch:
      case ErrorCode::HypothesisViolated:
      case ErrorCode::BlockNotCoset:
        return 2;
      // a mathematical check failed on well-formed data
      default:
        return 1;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace qmcz
