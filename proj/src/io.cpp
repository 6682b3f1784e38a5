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

#include "qmcz/io.hpp"

#include <fstream>

namespace qmcz {

namespace {

const Json& need(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) {
    throw Error(ErrorCode::ParseError, std::string("missing key \"") + key + "\"");
  }
  return *it;
}

uint32_t need_u32(const Json& j, const char* key) {
  const Json& v = need(j, key);
  if (!v.is_number_unsigned() && !v.is_number_integer()) {
    throw Error(ErrorCode::ParseError, std::string("key \"") + key + "\" must be an integer");
  }
  long long n = v.get<long long>();
  if (n < 0) throw Error(ErrorCode::ParseError, std::string("key \"") + key + "\" must be nonnegative");
  return static_cast<uint32_t>(n);
}

uint32_t need_elem(const Json& j, const char* key, const Field& f) {
  uint32_t v = need_u32(j, key);
  if (v >= f.q()) {
    throw Error(ErrorCode::ParseError, std::string("key \"") + key + "\" out of field range");
  }
  return v;
}

FqRowVector row_from_json(const Json& j, const FieldPtr& f, const char* what) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, std::string(what) + " must be an array");
  FqRowVector out(static_cast<Index>(j.size()));
  for (size_t i = 0; i < j.size(); ++i) {
    long long v = j[i].get<long long>();
    if (v < 0 || v >= static_cast<long long>(f->q())) {
      throw Error(ErrorCode::ParseError, std::string(what) + " entry out of field range");
    }
    out(static_cast<Index>(i)) = Fq(f, static_cast<uint32_t>(v));
  }
  return out;
}

Json row_to_json(const FqRowVector& v, const Field& f) {
  Json out = Json::array();
  for (Index i = 0; i < v.cols(); ++i) out.push_back(v(i).value_in(f));
  return out;
}

FqMatrix matrix_from_json(const Json& j, const FieldPtr& f, Index cols, const char* what) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, std::string(what) + " must be an array");
  FqMatrix out(static_cast<Index>(j.size()), cols);
  for (size_t r = 0; r < j.size(); ++r) {
    FqRowVector row = row_from_json(j[r], f, what);
    if (row.cols() != cols) {
      throw Error(ErrorCode::ParseError, std::string(what) + " row " + std::to_string(r) +
                                             " has length " + std::to_string(row.cols()) +
                                             ", expected " + std::to_string(cols));
    }
    out.row(static_cast<Index>(r)) = row;
  }
  return out;
}

Json matrix_to_json(const FqMatrix& m, const Field& f) {
  Json out = Json::array();
  for (Index r = 0; r < m.rows(); ++r) out.push_back(row_to_json(FqRowVector(m.row(r)), f));
  return out;
}

std::vector<Index> index_list_from_json(const Json& j, const char* what) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, std::string(what) + " must be an array");
  std::vector<Index> out;
  out.reserve(j.size());
  for (const auto& v : j) out.push_back(v.get<Index>());
  return out;
}

Json index_list_to_json(const std::vector<Index>& v) {
  Json out = Json::array();
  for (Index i : v) out.push_back(i);
  return out;
}

}  // namespace

Json field_to_json(const Field& f) {
  Json j;
  j["p"] = f.p();
  j["e"] = f.e();
  j["modulus"] = f.modulus();
  return j;
}

FieldPtr field_from_json(const Json& j) {
  uint32_t p = need_u32(j, "p");
  uint32_t e = need_u32(j, "e");
  const Json& mj = need(j, "modulus");
  if (!mj.is_array()) throw Error(ErrorCode::ParseError, "modulus must be an array");
  std::vector<uint32_t> modulus;
  for (const auto& c : mj) modulus.push_back(c.get<uint32_t>());
  return Field::create(p, e, modulus);
}

Json code_to_json(const LinearCode& c) {
  Json j;
  j["field"] = field_to_json(*c.field());
  j["n"] = c.n();
  j["gens"] = matrix_to_json(c.gens(), *c.field());
  return j;
}

LinearCode code_from_json(const Json& j) {
  FieldPtr f = field_from_json(need(j, "field"));
  Index n = need(j, "n").get<Index>();
  FqMatrix gens = matrix_from_json(need(j, "gens"), f, n, "gens");
  return LinearCode(f, n, std::move(gens));
}

Json instance_to_json(const FamilyInstance& instance) {
  Json j;
  j["code"] = code_to_json(instance.code);
  j["u"] = row_to_json(instance.u.entries(), *instance.field());
  Json group = Json::array();
  for (const auto& perm : instance.group) {
    Json pj = Json::array();
    for (Index v : perm) pj.push_back(v);
    group.push_back(std::move(pj));
  }
  j["group"] = std::move(group);
  j["logical_block"] = index_list_to_json(instance.logical_block);
  j["m_max"] = instance.m_max;
  return j;
}

FamilyInstance instance_from_json(const Json& j) {
  LinearCode code = code_from_json(need(j, "code"));
  FieldPtr f = code.field();
  TwistVector u(f, row_from_json(need(j, "u"), f, "u"));
  if (u.n() != code.n()) throw Error(ErrorCode::ParseError, "u length != code length");
  const Json& gj = need(j, "group");
  if (!gj.is_array()) throw Error(ErrorCode::ParseError, "group must be an array");
  std::vector<Permutation> group;
  for (const auto& pj : gj) {
    Permutation perm = index_list_from_json(pj, "group element");
    if (!is_permutation_of(perm, code.n())) {
      throw Error(ErrorCode::ParseError, "group element is not a coordinate permutation");
    }
    group.push_back(std::move(perm));
  }
  std::vector<Index> block = index_list_from_json(need(j, "logical_block"), "logical_block");
  int m_max = need(j, "m_max").get<int>();
  return FamilyInstance{std::move(code), std::move(u), std::move(group), std::move(block), m_max};
}

Json css_to_json(const CssCode& css) {
  Json j;
  j["field"] = field_to_json(*css.field);
  j["k"] = css.k();
  j["n"] = css.n();
  j["g1"] = matrix_to_json(css.g1, *css.field);
  j["g0"] = matrix_to_json(css.g0, *css.field);
  j["u_phys"] = row_to_json(css.u_phys, *css.field);
  j["u_log"] = row_to_json(css.u_log, *css.field);
  j["labels"] = Json{{"logical", index_list_to_json(css.logical_labels)},
                     {"physical", index_list_to_json(css.physical_labels)}};
  return j;
}

CssCode css_from_json(const Json& j) {
  CssCode css;
  css.field = field_from_json(need(j, "field"));
  Index k = need(j, "k").get<Index>();
  Index n = need(j, "n").get<Index>();
  css.g1 = matrix_from_json(need(j, "g1"), css.field, n, "g1");
  css.g0 = matrix_from_json(need(j, "g0"), css.field, n, "g0");
  if (css.g1.rows() != k) throw Error(ErrorCode::ParseError, "g1 must have k rows");
  css.u_phys = row_from_json(need(j, "u_phys"), css.field, "u_phys");
  css.u_log = row_from_json(need(j, "u_log"), css.field, "u_log");
  const Json& labels = need(j, "labels");
  css.logical_labels = index_list_from_json(need(labels, "logical"), "logical labels");
  css.physical_labels = index_list_from_json(need(labels, "physical"), "physical labels");
  if (css.u_phys.cols() != n || static_cast<Index>(css.physical_labels.size()) != n ||
      css.u_log.cols() != k || static_cast<Index>(css.logical_labels.size()) != k) {
    throw Error(ErrorCode::ParseError, "css artifact block sizes disagree");
  }
  return css;
}

Json logical_circuit_to_json(const std::vector<LogicalGate>& gates, const Field& f) {
  Json j;
  j["m"] = gates.empty() ? 0 : static_cast<int>(gates.front().arity());
  Json arr = Json::array();
  for (const auto& g : gates) {
    arr.push_back(Json{{"gamma", g.gamma.value_in(f)}, {"targets", index_list_to_json(g.targets)}});
  }
  j["gates"] = std::move(arr);
  return j;
}

std::vector<LogicalGate> logical_circuit_from_json(const Json& j, const FieldPtr& f) {
  const Json& arr = need(j, "gates");
  if (!arr.is_array()) throw Error(ErrorCode::ParseError, "gates must be an array");
  const int m = j.contains("m") ? j["m"].get<int>() : -1;
  std::vector<LogicalGate> out;
  for (const auto& gj : arr) {
    LogicalGate g;
    g.gamma = Fq(f, need_elem(gj, "gamma", *f));
    g.targets = index_list_from_json(need(gj, "targets"), "targets");
    if (m >= 0 && g.arity() != m) {
      throw Error(ErrorCode::ParseError, "gate arity disagrees with declared m");
    }
    out.push_back(std::move(g));
  }
  return out;
}

Json physical_circuit_to_json(const std::vector<PhysicalGate>& gates, const Field& f) {
  Json j;
  j["m"] = gates.empty() ? 0 : static_cast<int>(gates.front().arity());
  Json arr = Json::array();
  for (const auto& g : gates) {
    arr.push_back(
        Json{{"exponent", g.exponent.value_in(f)}, {"targets", index_list_to_json(g.targets)}});
  }
  j["gates"] = std::move(arr);
  return j;
}

std::vector<PhysicalGate> physical_circuit_from_json(const Json& j, const FieldPtr& f) {
  const Json& arr = need(j, "gates");
  if (!arr.is_array()) throw Error(ErrorCode::ParseError, "gates must be an array");
  std::vector<PhysicalGate> out;
  for (const auto& gj : arr) {
    PhysicalGate g;
    g.exponent = Fq(f, need_elem(gj, "exponent", *f));
    g.targets = index_list_from_json(need(gj, "targets"), "targets");
    out.push_back(std::move(g));
  }
  return out;
}

Json schedule_to_json(const GateSchedule& schedule, const Field& f) {
  Json j;
  j["m"] = schedule.m;
  Json layers = Json::array();
  for (const auto& layer : schedule.layers) {
    Json lj;
    lj["sigmas"] = layer.sigma_indices;
    lj["S"] = index_list_to_json(layer.mod.s_set);
    Json gamma = Json::object();
    for (size_t i = 0; i < layer.mod.s_set.size(); ++i) {
      gamma[std::to_string(layer.mod.s_set[i])] = layer.mod.gamma[i].value_in(f);
    }
    lj["gamma"] = std::move(gamma);
    Json gates = Json::array();
    for (const auto& g : layer.gates) {
      gates.push_back(
          Json{{"exponent", g.exponent.value_in(f)}, {"targets", index_list_to_json(g.targets)}});
    }
    lj["gates"] = std::move(gates);
    layers.push_back(std::move(lj));
  }
  j["layers"] = std::move(layers);
  return j;
}

GateSchedule schedule_from_json(const Json& j, const CssCode& css, const StandardForm& sf) {
  GateSchedule schedule;
  schedule.m = need(j, "m").get<int>();
  const Json& layers = need(j, "layers");
  if (!layers.is_array()) throw Error(ErrorCode::ParseError, "layers must be an array");
  for (const auto& lj : layers) {
    ScheduleLayer layer;
    for (const auto& s : need(lj, "sigmas")) layer.sigma_indices.push_back(s.get<int>());
    std::vector<Index> s_set = index_list_from_json(need(lj, "S"), "S");
    const Json& gamma = need(lj, "gamma");
    std::vector<Fq> coeffs;
    for (Index label : s_set) {
      auto it = gamma.find(std::to_string(label));
      if (it == gamma.end()) {
        throw Error(ErrorCode::ParseError, "gamma missing label " + std::to_string(label));
      }
      uint32_t value = it->get<uint32_t>();
      if (value >= css.field->q()) {
        throw Error(ErrorCode::ParseError, "gamma value out of field range");
      }
      coeffs.push_back(Fq(css.field, value));
    }
    layer.mod = modulation_build(css, sf, s_set, coeffs);
    layer.gates = physical_circuit_from_json(lj, css.field);
    schedule.layers.push_back(std::move(layer));
  }
  return schedule;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
  return j;
}

void save_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write " + path);
  out << dump(j);
}

}  // namespace qmcz
