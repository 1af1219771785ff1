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

#include "nonstab/fourier_code.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace nonstab::fourier {

FourierDescription::FourierDescription(GottesmanSpec spec, std::vector<FieldVector> members)
    : spec_(std::move(spec)), members_(std::move(members)) {
  if (members_.empty()) throw std::invalid_argument("Fourier description must be nonempty");
  std::unordered_set<FieldVector, galois::FieldVectorHash> seen;
  for (const auto& u : members_) {
    if (u.size() != spec_.r() || u.modulus() != spec_.q()) {
      throw std::invalid_argument("Fourier description members must lie in GF(q)^r");
    }
    if (!seen.insert(u).second) throw std::invalid_argument("duplicate member " + u.to_string());
  }
}

bool FourierDescription::contains(const FieldVector& u) const {
  return std::find(members_.begin(), members_.end(), u) != members_.end();
}

BigInt code_dimension(const FourierDescription& code) {
  const auto& spec = code.spec();
  BigInt extra = galois::power(spec.q(), static_cast<unsigned>(spec.n() - spec.r()));
  return extra * code.size();
}

DistanceReport verify_distance(const FourierDescription& code, std::size_t d, const Limits& limits) {
  DistanceReport report;
  if (d <= 1) return report;
  const auto& spec = code.spec();
  const auto& B = code.members();

  auto members = gottesman::low_weight_members(spec, d - 1, limits);
  report.low_weight_elements = members.size();
  for (const auto& m : members) {
    const std::uint32_t base = B.front().dot(m.index);
    for (const auto& u : B) {
      if (u.dot(m.index) != base) {
        report.pass = false;
        report.failure = "stabilizer-character";
        report.error = m.element;
        report.first = B.front();
        report.second = u;
        return report;
      }
    }
  }

  auto forbidden = gottesman::forbidden_set(spec, d, limits);
  report.forbidden_size = forbidden.size();
  report.errors_scanned = forbidden.errors_scanned();
  for (const auto& u1 : B) {
    for (const auto& u2 : B) {
      auto diff = u1 - u2;
      if (forbidden.contains(diff)) {
        report.pass = false;
        report.failure = "forbidden-difference";
        report.error = forbidden.origin(diff);
        report.first = u1;
        report.second = u2;
        return report;
      }
    }
  }
  return report;
}

std::vector<FieldVector> enumerate_indices(std::size_t r, std::uint32_t q, GreedyOrder order) {
  std::vector<FieldVector> out;
  if (order == GreedyOrder::Lexicographic) {
    const auto count = galois::power(q, static_cast<unsigned>(r)).convert_to<std::uint64_t>();
    out.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) out.push_back(galois::from_index(i, r, q));
    return out;
  }
  out.emplace_back(r, q);
  for (std::size_t w = 1; w <= r; ++w) {
    galois::for_each_combination(r, w, [&](const std::vector<std::size_t>& support) {
      std::vector<std::uint32_t> values(w, 1);
      while (true) {
        FieldVector v(r, q);
        for (std::size_t k = 0; k < w; ++k) v.set(support[k], values[k]);
        out.push_back(std::move(v));
        std::size_t k = w;
        while (k > 0 && values[k - 1] == q - 1) values[--k] = 1;
        if (k == 0) break;
        ++values[k - 1];
      }
      return true;
    });
  }
  return out;
}

GreedyResult greedy_construct(const GottesmanSpec& spec, std::size_t d, GreedyOrder order,
                              const std::vector<FieldVector>& candidates, const Limits& limits) {
  const BigInt group_order = spec.order();
  check_cap("greedy candidate space", group_order, limits.max_errors);
  if (d >= 1) {
    if (auto radius = gottesman::purity_radius(spec, d, limits)) {
      throw std::invalid_argument("greedy construction needs a d-pure spec; found a centralizer element of weight " +
                                  std::to_string(*radius));
    }
  }
  auto forbidden = gottesman::forbidden_set(spec, d, limits);
  const auto& pool = candidates.empty() ? enumerate_indices(spec.r(), spec.q(), order) : candidates;

  std::vector<bool> taken(group_order.convert_to<std::uint64_t>(), false);
  std::vector<FieldVector> chosen;
  for (const auto& u : pool) {
    if (u.size() != spec.r() || u.modulus() != spec.q()) {
      throw std::invalid_argument("greedy candidates must lie in GF(q)^r");
    }
    auto idx = galois::to_index(u);
    if (taken[idx]) continue;
    chosen.push_back(u);
    taken[idx] = true;
    for (const auto& f : forbidden.members()) taken[galois::to_index(u - f)] = true;
  }

  const std::size_t f = forbidden.size();
  BigInt guaranteed = (group_order + f) / (f + 1);
  BigInt floor_bound = f == 0 ? group_order : group_order / f;
  return GreedyResult{FourierDescription(spec, std::move(chosen)), f, guaranteed, floor_bound};
}

Bounds bounds(int n, std::uint32_t q, int t) {
  if (n < 0 || t < 0) throw std::invalid_argument("bounds: n and t must be nonnegative");
  const BigInt space = galois::power(q, static_cast<unsigned>(n));
  const int t2 = std::min(2 * t, n);
  return Bounds{Rational(space, galois::error_sphere_count(n, q, t2)),
                Rational(space, galois::error_sphere_count(n, q, std::min(t, n)))};
}

std::vector<Complex> projection_coefficients(const FourierDescription& code, const Limits& limits) {
  const auto& spec = code.spec();
  check_cap("Gottesman subgroup size", spec.order(), limits.max_group);
  const auto count = spec.order().convert_to<std::uint64_t>();
  const std::uint32_t P = spec.phase_denominator();
  std::vector<Complex> out(count);
  const double scale = 1.0 / static_cast<double>(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    auto a = galois::from_index(i, spec.r(), spec.q());
    Complex sum{};
    for (const auto& u : code.members()) sum += std::conj(weyl::phase_value(spec.character(u, a), P));
    out[i] = sum * scale;
  }
  return out;
}

weyl::DenseMatrix dense_projection(const FourierDescription& code, std::size_t max_dim,
                                   const Limits& limits) {
  const auto& spec = code.spec();
  const auto& group = spec.group();
  const std::uint32_t q = spec.q();
  const std::size_t n = spec.n();
  const BigInt dim_big = galois::power(q, static_cast<unsigned>(n));
  check_cap("dense projection dimension", dim_big, max_dim);
  const auto dim = dim_big.convert_to<std::uint64_t>();
  auto coefficients = projection_coefficients(code, limits);
  const std::uint32_t P = spec.phase_denominator();

  weyl::DenseMatrix out(dim);
  for (std::uint64_t i = 0; i < coefficients.size(); ++i) {
    if (std::abs(coefficients[i]) < 1e-15) continue;
    auto g = spec.element(galois::from_index(i, spec.r(), q));
    for (std::uint64_t col = 0; col < dim; ++col) {
      auto x = galois::from_index(col, n, q);
      auto shifted = x + FieldVector(g.a, q);
      std::uint32_t e = (g.phase + group.bicharacter(g.b, x.entries())) % P;
      out(galois::to_index(shifted), col) += coefficients[i] * weyl::phase_value(e, P);
    }
  }
  return out;
}

}  // namespace nonstab::fourier
