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

#include "nonstab/gottesman.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

namespace nonstab::gottesman {

namespace {

weyl::Word to_word(const FieldVector& v) { return v.entries(); }

FieldVector to_vector(const weyl::Word& w, std::uint32_t q) { return FieldVector(w, q); }

}  // namespace

GottesmanSpec::GottesmanSpec(std::uint32_t q, FieldMatrix L, FieldMatrix M, PhaseTable phases)
    : q_(q),
      L_(std::move(L)),
      M_(std::move(M)),
      phases_(std::move(phases)),
      group_(weyl::AlphabetGroup::prime_field(q), L_.rows()) {
  if (L_.modulus() != q || M_.modulus() != q) throw std::invalid_argument("L and M must be over GF(q)");
  if (L_.rows() != M_.rows() || L_.cols() != M_.cols()) {
    throw std::invalid_argument("L and M must have the same shape");
  }
  if (L_.rows() == 0 || L_.cols() == 0) throw std::invalid_argument("L and M must be nonempty");
  if (L_.cols() > L_.rows()) throw std::invalid_argument("r must not exceed n");
  if (phases_.size() != r()) throw std::invalid_argument("phase table must be r x r");
  const std::uint32_t P = phase_denominator();
  for (auto& row : phases_) {
    if (row.size() != r()) throw std::invalid_argument("phase table must be r x r");
    for (auto& e : row) e %= P;
  }
  Lt_ = L_.transpose();
  Mt_ = M_.transpose();
  stacked_ = std::make_shared<const galois::LinearSystem>(L_.stacked(M_));
}

GottesmanSpec GottesmanSpec::with_synthesized_phases(std::uint32_t q, FieldMatrix L, FieldMatrix M) {
  auto table = synthesize_phase_table(L, M);
  return GottesmanSpec(q, std::move(L), std::move(M), std::move(table));
}

std::uint32_t GottesmanSpec::rho(const FieldVector& a) const {
  if (a.size() != r() || a.modulus() != q_) throw std::invalid_argument("index vector must be in GF(q)^r");
  const std::uint64_t P = phase_denominator();
  std::uint64_t e = 0;
  for (std::size_t i = 0; i < r(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < r(); ++j) {
      if (a[j] == 0 || phases_[i][j] == 0) continue;
      e = (e + static_cast<std::uint64_t>(a[i]) * a[j] % P * phases_[i][j]) % P;
    }
  }
  return static_cast<std::uint32_t>(e);
}

WeylElement GottesmanSpec::element(const FieldVector& a) const {
  return WeylElement{rho(a), to_word(L_ * a), to_word(M_ * a)};
}

std::vector<WeylElement> GottesmanSpec::generators() const {
  std::vector<WeylElement> out;
  out.reserve(r());
  for (std::size_t i = 0; i < r(); ++i) out.push_back(element(FieldVector::unit(r(), i, q_)));
  return out;
}

std::uint32_t GottesmanSpec::character(const FieldVector& u, const FieldVector& a) const {
  if (u.size() != r() || a.size() != r()) throw std::invalid_argument("character: vectors must have length r");
  return u.dot(a) * (phase_denominator() / q_);
}

std::optional<FieldVector> GottesmanSpec::index_of(const weyl::Word& x, const weyl::Word& y) const {
  if (x.size() != n() || y.size() != n()) throw std::invalid_argument("index_of: word length mismatch");
  std::vector<std::uint32_t> rhs(x);
  rhs.insert(rhs.end(), y.begin(), y.end());
  return stacked_->solve(FieldVector(std::move(rhs), q_));
}

FieldVector GottesmanSpec::syndrome_index(const WeylElement& g) const {
  return Mt_ * to_vector(g.a, q_) - Lt_ * to_vector(g.b, q_);
}

PhaseTable synthesize_phase_table(const FieldMatrix& L, const FieldMatrix& M) {
  const std::uint32_t q = L.modulus();
  FieldMatrix K = L.transpose() * M;
  const std::size_t r = K.rows();
  PhaseTable D(r, std::vector<std::uint32_t>(r, 0));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i + 1; j < r; ++j) D[i][j] = 2 * K(i, j);
    if (q == 2) {
      D[i][i] = K(i, i);
    } else {
      D[i][i] = K(i, i) % 2 == 0 ? K(i, i) : K(i, i) + q;
    }
  }
  return D;
}

// ---------------------------------------------------------------- validate

ValidationReport validate(const GottesmanSpec& spec, std::uint64_t seed) {
  ValidationReport report;
  auto fail = [&](std::string message) {
    report.ok = false;
    report.violations.push_back(std::move(message));
  };
  const std::uint32_t q = spec.q();
  const std::size_t r = spec.r();
  const auto& group = spec.group();

  if (!(spec.L().transpose() * spec.M()).is_symmetric()) fail("L^T M is not symmetric");
  const std::size_t rank = spec.L().stacked(spec.M()).rank();
  if (rank != r) {
    std::ostringstream os;
    os << "a -> (La, Ma) is not injective: rank " << rank << " < r = " << r;
    fail(os.str());
  }

  // s_a s_b = s_{a+b} exactly; a mismatch puts a nontrivial scalar in <S>.
  std::size_t cocycle_failures = 0;
  std::optional<std::uint32_t> stray_scalar;
  auto check_pair = [&](const FieldVector& a, const FieldVector& b) {
    auto product = group.compose(spec.element(a), spec.element(b));
    auto expected = spec.element(a + b);
    if (product == expected) return;
    ++cocycle_failures;
    if (!stray_scalar && group.same_up_to_phase(product, expected)) {
      const std::uint32_t P = spec.phase_denominator();
      stray_scalar = (product.phase + P - expected.phase) % P;
    }
    if (cocycle_failures == 1) {
      fail("cocycle condition fails for a = " + a.to_string() + ", b = " + b.to_string());
    }
  };

  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      for (std::uint32_t x = 1; x < q; ++x)
        for (std::uint32_t y = 1; y < q; ++y) {
          check_pair(FieldVector::unit(r, i, q).scaled(x), FieldVector::unit(r, j, q).scaled(y));
        }

  const BigInt pairs = galois::power(q, static_cast<unsigned>(2 * r));
  if (pairs <= 65'536) {
    const auto count = galois::power(q, static_cast<unsigned>(r)).convert_to<std::uint64_t>();
    for (std::uint64_t i = 0; i < count; ++i)
      for (std::uint64_t j = 0; j < count; ++j) {
        check_pair(galois::from_index(i, r, q), galois::from_index(j, r, q));
      }
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint32_t> digit(0, q - 1);
    auto random_vector = [&] {
      FieldVector v(r, q);
      for (std::size_t i = 0; i < r; ++i) v.set(i, digit(rng));
      return v;
    };
    for (int k = 0; k < 256; ++k) check_pair(random_vector(), random_vector());
  }
  if (stray_scalar) {
    std::ostringstream os;
    os << "generated group contains the nontrivial scalar w^" << *stray_scalar << " I (P = "
       << spec.phase_denominator() << ")";
    fail(os.str());
  }

  auto gens = spec.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (group.gamma(gens[i], gens[j]) != 0) {
        std::ostringstream os;
        os << "generators " << i + 1 << " and " << j + 1 << " do not commute";
        fail(os.str());
      }
    }
  return report;
}

// ---------------------------------------------------------------- enumerations

std::optional<std::size_t> purity_radius(const GottesmanSpec& spec, std::size_t cutoff,
                                         const Limits& limits) {
  if (cutoff == 0) return std::nullopt;
  std::optional<std::size_t> found;
  const auto& group = spec.group();
  group.for_each_bounded(cutoff - 1, [&](const WeylElement& g) {
    if (spec.syndrome_index(g).is_zero()) {
      found = group.weight(g);
      return false;
    }
    return true;
  }, limits.max_errors);
  return found;
}

void ForbiddenSet::insert(const FieldVector& u, const WeylElement& origin) {
  if (index_.contains(u)) return;
  index_.emplace(u, members_.size());
  members_.push_back(u);
  origins_.push_back(origin);
}

ForbiddenSet forbidden_set(const GottesmanSpec& spec, std::size_t d, const Limits& limits) {
  ForbiddenSet out(d);
  if (d == 0) return out;
  std::size_t scanned = 0;
  spec.group().for_each_bounded(d - 1, [&](const WeylElement& g) {
    ++scanned;
    if (spec.index_of(g.a, g.b)) return true;
    out.insert(-spec.syndrome_index(g), g);
    return true;
  }, limits.max_errors);
  out.set_errors_scanned(scanned);
  return out;
}

std::vector<LowWeightMember> low_weight_members(const GottesmanSpec& spec, std::size_t w,
                                                const Limits& limits) {
  std::vector<LowWeightMember> out;
  spec.group().for_each_bounded(w, [&](const WeylElement& g) {
    if (auto a = spec.index_of(g.a, g.b)) out.push_back({*a, spec.element(*a)});
    return true;
  }, limits.max_errors);
  return out;
}

}  // namespace nonstab::gottesman
