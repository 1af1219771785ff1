// Copyright 2026 The nonstab Authors
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

#include "nonstab/serialization.hpp"

#include <sstream>
#include <stdexcept>

namespace nonstab::serialization {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::uint32_t modulus_from(const json& j) {
  auto q = field(j, "q").get<std::int64_t>();
  if (q < 2 || q > 65'521) throw std::invalid_argument("field size out of range");
  galois::require_prime(static_cast<std::uint32_t>(q));
  return static_cast<std::uint32_t>(q);
}

json big_to_json(const BigInt& v) {
  if (v <= std::numeric_limits<std::int64_t>::max()) return v.convert_to<std::int64_t>();
  return v.str();
}

BigInt big_from_json(const json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return BigInt(j.get<std::string>());
    } catch (const std::runtime_error&) {
      throw std::invalid_argument("expected an integer string");
    }
  }
  throw std::invalid_argument("expected an integer");
}

// Reports nlohmann type and range errors as malformed input.
template <typename F>
auto guarded(F&& body) -> decltype(body()) {
  try {
    return body();
  } catch (const json::exception& e) {
    throw std::invalid_argument(e.what());
  }
}

}  // namespace

json to_json(const galois::FieldVector& v) {
  json out = json::array();
  for (auto x : v.entries()) out.push_back(x);
  return out;
}

json to_json(const galois::FieldMatrix& m) {
  json out = json::array();
  for (const auto& row : m.to_rows()) out.push_back(row);
  return out;
}

galois::FieldVector vector_from_json(const json& j, std::uint32_t q) {
  return guarded([&] {
    if (!j.is_array()) throw std::invalid_argument("expected an integer array");
    return galois::FieldVector::from_signed(j.get<std::vector<std::int64_t>>(), q);
  });
}

galois::FieldMatrix matrix_from_json(const json& j, std::uint32_t q) {
  return guarded([&] {
    if (!j.is_array() || j.empty()) throw std::invalid_argument("expected a nonempty array of rows");
    auto rows = j.get<std::vector<std::vector<std::int64_t>>>();
    return galois::FieldMatrix::from_rows(rows, rows.front().size(), q);
  });
}

json to_json(const gottesman::GottesmanSpec& spec) {
  return json{{"q", spec.q()},
              {"n", spec.n()},
              {"r", spec.r()},
              {"L", to_json(spec.L())},
              {"M", to_json(spec.M())},
              {"D", spec.phase_table()},
              {"phase_denominator", spec.phase_denominator()}};
}

gottesman::GottesmanSpec spec_from_json(const json& j) {
  return guarded([&] {
    const auto q = modulus_from(j);
    auto L = matrix_from_json(field(j, "L"), q);
    auto M = matrix_from_json(field(j, "M"), q);
    if (j.contains("n") && j.at("n").get<std::size_t>() != L.rows()) throw std::invalid_argument("n does not match L");
    if (j.contains("r") && j.at("r").get<std::size_t>() != L.cols()) throw std::invalid_argument("r does not match L");
    if (j.contains("phase_denominator") && j.at("phase_denominator").get<std::uint32_t>() != 2 * q) {
      throw std::invalid_argument("phase_denominator must be 2q");
    }
    if (!j.contains("D")) return gottesman::GottesmanSpec::with_synthesized_phases(q, std::move(L), std::move(M));
    auto table = j.at("D").get<gottesman::PhaseTable>();
    return gottesman::GottesmanSpec(q, std::move(L), std::move(M), std::move(table));
  });
}

json to_json(const weyl::WeylElement& g) { return json{{"phase", g.phase}, {"a", g.a}, {"b", g.b}}; }

weyl::WeylElement element_from_json(const json& j, const weyl::ErrorGroup& group) {
  return guarded([&] {
    std::int64_t phase = j.contains("phase") ? j.at("phase").get<std::int64_t>() : 0;
    return group.make(phase, field(j, "a").get<weyl::Word>(), field(j, "b").get<weyl::Word>());
  });
}

json to_json(const families::SetFamily& family) {
  return json{{"universe", family.universe()}, {"members", family.members()}};
}

families::SetFamily set_family_from_json(const json& j) {
  return guarded([&] {
    return families::SetFamily(field(j, "universe").get<std::size_t>(),
                               field(j, "members").get<std::vector<std::vector<std::size_t>>>());
  });
}

json to_json(const families::SumZeroForm& form) { return json{{"q", form.q}, {"D", to_json(form.D)}}; }

families::SumZeroForm sum_zero_form_from_json(const json& j) {
  return guarded([&] {
    const auto q = modulus_from(j);
    return families::SumZeroForm{q, matrix_from_json(field(j, "D"), q)};
  });
}

std::string params_label(const fourier::CodeParams& params) {
  std::ostringstream os;
  os << "((" << params.n << "," << params.K << "," << params.d << "))_" << params.q;
  return os.str();
}

json to_json(const CodeBundle& bundle) {
  json members = json::array();
  for (const auto& u : bundle.code.members()) members.push_back(to_json(u));
  return json{{"spec", to_json(bundle.code.spec())},
              {"B", std::move(members)},
              {"params",
               {{"n", bundle.claimed.n},
                {"K", big_to_json(bundle.claimed.K)},
                {"d", bundle.claimed.d},
                {"q", bundle.claimed.q}}},
              {"provenance", bundle.provenance}};
}

CodeBundle bundle_from_json(const json& j) {
  return guarded([&] {
    auto spec = spec_from_json(field(j, "spec"));
    std::vector<galois::FieldVector> members;
    for (const auto& u : field(j, "B")) members.push_back(vector_from_json(u, spec.q()));
    fourier::CodeParams params{spec.n(), 0, 0, spec.q()};
    if (j.contains("params")) {
      const auto& p = j.at("params");
      if (p.contains("n")) params.n = p.at("n").get<std::size_t>();
      if (p.contains("K")) params.K = big_from_json(p.at("K"));
      if (p.contains("d")) params.d = p.at("d").get<std::size_t>();
      if (p.contains("q")) params.q = p.at("q").get<std::uint32_t>();
    }
    std::string provenance = j.contains("provenance") ? j.at("provenance").get<std::string>() : "";
    return CodeBundle{fourier::FourierDescription(std::move(spec), std::move(members)), params, provenance};
  });
}

json to_json(const fourier::DistanceReport& report) {
  json out{{"pass", report.pass},
           {"counts",
            {{"low_weight_elements", report.low_weight_elements},
             {"forbidden_size", report.forbidden_size},
             {"errors_scanned", report.errors_scanned}}}};
  if (!report.pass) {
    json witness{{"kind", report.failure}};
    if (report.error) witness["error"] = to_json(*report.error);
    if (report.first) witness["u1"] = to_json(*report.first);
    if (report.second) witness["u2"] = to_json(*report.second);
    if (report.first && report.second) witness["difference"] = to_json(*report.first - *report.second);
    out["witness"] = std::move(witness);
  }
  return out;
}

json to_json(const oracle::KLReport& report) {
  json out{{"pass", report.pass}, {"counts", {{"errors_checked", report.errors_checked}}}};
  if (!report.pass) {
    out["witness"] = json{{"error", to_json(*report.error)},
                          {"first", report.first},
                          {"second", report.second},
                          {"value", {report.value.real(), report.value.imag()}}};
  }
  return out;
}

json to_json(const circuits::Circuit& circuit) {
  json gates = json::array();
  for (const auto& g : circuit.gates()) {
    gates.push_back(json{{"kind", circuits::gate_name(g.kind)}, {"operands", g.operands}});
  }
  return json{{"q", circuit.q()}, {"registers", circuit.registers()}, {"gates", std::move(gates)}};
}

circuits::Circuit circuit_from_json(const json& j) {
  return guarded([&] {
    circuits::Circuit c(modulus_from(j), field(j, "registers").get<std::size_t>());
    for (const auto& g : field(j, "gates")) {
      c.add(circuits::gate_kind_from_name(field(g, "kind").get<std::string>()),
            field(g, "operands").get<std::vector<std::size_t>>());
    }
    return c;
  });
}

}  // namespace nonstab::serialization
