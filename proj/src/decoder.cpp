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

#include "nonstab/decoder.hpp"

#include <cmath>
#include <numbers>
#include <optional>
#include <unordered_set>

#include "nonstab/oracle.hpp"

namespace nonstab::decoder {

Syndrome measure_syndrome(const SparseState& state, const gottesman::GottesmanSpec& spec, double tolerance) {
  if (state.empty()) throw NotAnEigenvector("cannot measure the zero state");
  if (state.radix() != spec.q() || state.length() != spec.n()) {
    throw std::invalid_argument("state does not match the spec");
  }
  const auto& group = spec.group();
  const std::uint32_t P = spec.phase_denominator();
  Syndrome out;
  out.denominator = P;
  for (const auto& s : spec.generators()) {
    oracle::IndexAction action(group, s);
    std::optional<Complex> ratio;
    for (const auto& [index, amp] : state.entries()) {
      std::uint32_t e = 0;
      auto t = action.target(index, e);
      // (s psi)(t) = phase * psi(index); eigenvalue = (s psi)(t) / psi(t)
      Complex here = state.amplitude(t);
      if (std::abs(here) < SparseState::kPrune) throw NotAnEigenvector("generator moves the state off its support");
      Complex r = amp * weyl::phase_value(e, P) / here;
      if (!ratio) {
        ratio = r;
      } else if (std::abs(r - *ratio) > tolerance) {
        throw NotAnEigenvector("generator eigenvalue is not constant over the support");
      }
    }
    double turns = std::arg(*ratio) / (2.0 * std::numbers::pi);
    auto k = static_cast<std::int64_t>(std::llround(turns * P));
    auto exponent = static_cast<std::uint32_t>(((k % P) + P) % P);
    if (std::abs(*ratio - weyl::phase_value(exponent, P)) > tolerance) {
      throw NotAnEigenvector("eigenvalue is not a root of unity of order P");
    }
    out.exponents.push_back(exponent);
  }
  return out;
}

Correction search_error(const Syndrome& syndrome, const FourierDescription& code, std::size_t t,
                        const Limits& limits) {
  const auto& spec = code.spec();
  const auto& group = spec.group();
  const std::uint32_t P = spec.phase_denominator();
  const std::uint32_t step = P / spec.q();
  if (syndrome.exponents.size() != spec.r() || syndrome.denominator != P) {
    throw std::invalid_argument("syndrome does not match the spec");
  }
  std::unordered_set<FieldVector, galois::FieldVectorHash> members(code.members().begin(), code.members().end());
  auto gens = spec.generators();

  std::size_t checked = 0;
  std::optional<Correction> found;
  auto attempt = [&](const WeylElement& g) {
    ++checked;
    FieldVector u(spec.r(), spec.q());
    for (std::size_t i = 0; i < gens.size(); ++i) {
      std::uint32_t rest = (syndrome.exponents[i] + P - group.gamma(gens[i], g)) % P;
      if (rest % step != 0) return true;
      u.set(i, rest / step);
    }
    if (!members.contains(u)) return true;
    found = Correction{g, u, checked};
    return false;
  };
  if (!attempt(group.identity())) return *found;
  group.for_each_bounded(t, attempt, limits.max_errors);
  if (!found) {
    throw NoSolution("no error of weight <= " + std::to_string(t) + " and member of B match the syndrome");
  }
  return *found;
}

DecodeResult decode(const SparseState& state, const FourierDescription& code, std::size_t t, const Limits& limits) {
  auto correction = search_error(measure_syndrome(state, code.spec()), code, t, limits);
  const auto& group = code.spec().group();
  auto fixed = oracle::apply(group, group.inverse(correction.error), state);
  return DecodeResult{std::move(fixed), std::move(correction)};
}

}  // namespace nonstab::decoder
