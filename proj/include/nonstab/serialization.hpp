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

#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "nonstab/circuits.hpp"
#include "nonstab/families.hpp"
#include "nonstab/fourier_code.hpp"
#include "nonstab/oracle.hpp"

// JSON documents. Matrices and vectors are arrays of integers; the modulus
// lives in the enclosing document.
namespace nonstab::serialization {

using json = nlohmann::ordered_json;

json to_json(const galois::FieldVector& v);
json to_json(const galois::FieldMatrix& m);
galois::FieldVector vector_from_json(const json& j, std::uint32_t q);
galois::FieldMatrix matrix_from_json(const json& j, std::uint32_t q);

// {q, n, r, L, M, D, phase_denominator}
json to_json(const gottesman::GottesmanSpec& spec);
gottesman::GottesmanSpec spec_from_json(const json& j);

// {phase, a, b}
json to_json(const weyl::WeylElement& g);
weyl::WeylElement element_from_json(const json& j, const weyl::ErrorGroup& group);

json to_json(const families::SetFamily& family);
families::SetFamily set_family_from_json(const json& j);

// {q, D}
json to_json(const families::SumZeroForm& form);
families::SumZeroForm sum_zero_form_from_json(const json& j);

struct CodeBundle {
  fourier::FourierDescription code;
  fourier::CodeParams claimed;
  std::string provenance;
};

// {spec, B, params: {n, K, d, q}, provenance}
json to_json(const CodeBundle& bundle);
CodeBundle bundle_from_json(const json& j);

// "((n,K,d))_q"
std::string params_label(const fourier::CodeParams& params);

json to_json(const fourier::DistanceReport& report);
json to_json(const oracle::KLReport& report);

// {q, registers, gates: [{kind, operands}]}
json to_json(const circuits::Circuit& circuit);
circuits::Circuit circuit_from_json(const json& j);

}  // namespace nonstab::serialization
