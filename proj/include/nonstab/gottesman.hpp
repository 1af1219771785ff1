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

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "nonstab/galois.hpp"
#include "nonstab/limits.hpp"
#include "nonstab/weyl.hpp"

namespace nonstab::gottesman {

using galois::FieldMatrix;
using galois::FieldVector;
using weyl::WeylElement;

// r x r integer matrix of phase exponents mod P.
using PhaseTable = std::vector<std::vector<std::uint32_t>>;

// An abelian subgroup S = { w^rho(a) U_{La} V_{Ma} : a in GF(q)^r } of the
// error group on n qudits, with rho(a) = a^T D a evaluated on the canonical
// integer lifts of a and reduced mod P = 2q.
//
// Construction only checks shapes. Use validate() to confirm that the data
// actually describes a Gottesman subgroup.
class GottesmanSpec {
 public:
  GottesmanSpec(std::uint32_t q, FieldMatrix L, FieldMatrix M, PhaseTable phases);

  // Uses the phase table from synthesize_phase_table(L, M).
  static GottesmanSpec with_synthesized_phases(std::uint32_t q, FieldMatrix L, FieldMatrix M);

  std::uint32_t q() const { return q_; }
  std::size_t n() const { return L_.rows(); }
  std::size_t r() const { return L_.cols(); }
  const FieldMatrix& L() const { return L_; }
  const FieldMatrix& M() const { return M_; }
  const PhaseTable& phase_table() const { return phases_; }
  std::uint32_t phase_denominator() const { return group_.phase_denominator(); }
  const weyl::ErrorGroup& group() const { return group_; }

  bool is_maximal() const { return r() == n(); }
  BigInt order() const { return galois::power(q_, static_cast<unsigned>(r())); }

  std::uint32_t rho(const FieldVector& a) const;
  WeylElement element(const FieldVector& a) const;
  // s_{e_1}, ..., s_{e_r}.
  std::vector<WeylElement> generators() const;
  // Exponent (mod P) of the character value w_q^{u . a}.
  std::uint32_t character(const FieldVector& u, const FieldVector& a) const;
  // a with (La, Ma) = (x, y), if any.
  std::optional<FieldVector> index_of(const weyl::Word& x, const weyl::Word& y) const;
  // The character index delta with s_a g = w_q^{delta . a} g s_a, i.e.
  // delta = M^T x - L^T y for g = U_x V_y.
  FieldVector syndrome_index(const WeylElement& g) const;

  bool operator==(const GottesmanSpec& other) const {
    return q_ == other.q_ && L_ == other.L_ && M_ == other.M_ && phases_ == other.phases_;
  }

 private:
  std::uint32_t q_;
  FieldMatrix L_;
  FieldMatrix M_;
  PhaseTable phases_;
  weyl::ErrorGroup group_;
  FieldMatrix Lt_;
  FieldMatrix Mt_;
  std::shared_ptr<const galois::LinearSystem> stacked_;
};

// Quadratic phase table whose rho satisfies the cocycle condition for any
// (L, M) with L^T M symmetric: with K = L^T M, off-diagonal D_ij = 2 K_ij for
// i < j, and diagonal K_ii (q = 2) or the even representative of K_ii mod q.
PhaseTable synthesize_phase_table(const FieldMatrix& L, const FieldMatrix& M);

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> violations;
};

// Checks symmetry of L^T M, injectivity of a -> (La, Ma), the cocycle
// condition on rho, commutativity of the generators and the absence of
// nontrivial scalars. `seed` drives the random pair sample.
ValidationReport validate(const GottesmanSpec& spec, std::uint64_t seed = 0x5eed);

// Minimum weight of a nonscalar centralizer element if it is below `cutoff`;
// nullopt means the spec is cutoff-pure.
std::optional<std::size_t> purity_radius(const GottesmanSpec& spec, std::size_t cutoff,
                                         const Limits& limits = {});

// F_d: character indices L^T y - M^T x over errors U_x V_y with
// 1 <= wt(x, y) < d that are not in the (L, M)-image. Each member remembers
// the first error (in weight-lex order) producing it.
class ForbiddenSet {
 public:
  explicit ForbiddenSet(std::size_t d) : d_(d) {}

  std::size_t d() const { return d_; }
  std::size_t size() const { return members_.size(); }
  bool contains(const FieldVector& u) const { return index_.contains(u); }
  const WeylElement& origin(const FieldVector& u) const { return origins_[index_.at(u)]; }
  // Members in first-seen order.
  const std::vector<FieldVector>& members() const { return members_; }
  std::size_t errors_scanned() const { return scanned_; }

  void insert(const FieldVector& u, const WeylElement& origin);
  void set_errors_scanned(std::size_t n) { scanned_ = n; }

 private:
  std::size_t d_;
  std::size_t scanned_ = 0;
  std::vector<FieldVector> members_;
  std::vector<WeylElement> origins_;
  std::unordered_map<FieldVector, std::size_t, galois::FieldVectorHash> index_;
};

ForbiddenSet forbidden_set(const GottesmanSpec& spec, std::size_t d, const Limits& limits = {});

struct LowWeightMember {
  FieldVector index;
  WeylElement element;
};

// Elements of S with weight in [1, w], in weight-lex order of their (a, b).
std::vector<LowWeightMember> low_weight_members(const GottesmanSpec& spec, std::size_t w,
                                                const Limits& limits = {});

}  // namespace nonstab::gottesman
