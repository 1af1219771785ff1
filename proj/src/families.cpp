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

#include "nonstab/families.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace nonstab::families {

namespace {

void require_odd(std::size_t n) {
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("n must be odd and at least 3");
}

FieldMatrix ones(std::size_t n, std::uint32_t q) {
  FieldMatrix J(n, n, q);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) J.set(i, j, 1);
  return J;
}

}  // namespace

FieldMatrix cyclic_shift_matrix(std::size_t n, std::uint32_t q) {
  require_odd(n);
  const std::size_t m = (n - 1) / 2;
  FieldMatrix S(n, n, q);
  for (std::size_t j = 0; j < n; ++j) {
    S.set((j + m) % n, j, 1);
    S.set((j + m + 1) % n, j, 1);
  }
  return S;
}

FieldMatrix sum_zero_embedding(std::size_t n, std::uint32_t q) {
  FieldMatrix L(n, n, q);
  for (std::size_t j = 0; j + 1 < n; ++j) {
    L.set(j, j, 1);
    L.set(n - 1, j, -1);
  }
  return L;
}

GottesmanSpec cyclic_spec(std::size_t n, std::uint32_t q) {
  galois::require_prime(q);
  FieldMatrix L = sum_zero_embedding(n, q);
  FieldMatrix M = cyclic_shift_matrix(n, q) * L + ones(n, q);
  return GottesmanSpec::with_synthesized_phases(q, std::move(L), std::move(M));
}

FourierDescription distance2_family(std::size_t n, std::uint32_t q) {
  auto spec = cyclic_spec(n, q);
  const std::size_t e0 = n - 1;
  std::vector<FieldVector> B;
  B.emplace_back(n, q);
  for (std::uint32_t alpha = 1; alpha < q; ++alpha) B.push_back(FieldVector::unit(n, e0, q).scaled(alpha));
  for (std::uint32_t alpha = 1; alpha < q; ++alpha) {
    for (std::size_t j = 0; j + 1 < n; ++j) {
      FieldVector u = FieldVector::unit(n, e0, q);
      for (std::size_t i = 0; i + 1 < n; ++i) u.set(i, alpha);
      u.set(j, 0);
      B.push_back(std::move(u));
    }
  }
  return FourierDescription(std::move(spec), std::move(B));
}

GottesmanSpec laflamme_spec(std::size_t n) { return cyclic_spec(n, 2); }

// ---------------------------------------------------------------- SetFamily

SetFamily::SetFamily(std::size_t universe, std::vector<std::vector<std::size_t>> members)
    : universe_(universe), members_(std::move(members)) {
  std::set<std::vector<std::size_t>> seen;
  for (std::size_t k = 0; k < members_.size(); ++k) {
    auto& s = members_[k];
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
      throw std::invalid_argument("set family member repeats an element");
    }
    for (auto x : s) {
      if (x < 1 || x > universe_) throw std::invalid_argument("set family element outside {1..universe}");
    }
    if (!seen.insert(s).second) {
      throw std::invalid_argument("set family members " + std::to_string(k + 1) + " repeats an earlier member");
    }
  }
}

std::size_t symmetric_difference_size(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  std::vector<std::size_t> out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out.size();
}

std::set<std::size_t> SetFamily::symmetric_difference_sizes() const {
  std::set<std::size_t> out;
  for (std::size_t i = 0; i < members_.size(); ++i)
    for (std::size_t j = i + 1; j < members_.size(); ++j) {
      out.insert(symmetric_difference_size(members_[i], members_[j]));
    }
  return out;
}

SetFamily fifteen_qubit_family() {
  return SetFamily(15, {{1, 2, 3, 4, 13},
                        {5, 6, 7, 8, 13},
                        {9, 10, 11, 12, 13},
                        {1, 2, 5, 6, 9, 10},
                        {1, 2, 7, 8, 11, 12},
                        {3, 4, 7, 8, 9, 10},
                        {3, 4, 5, 6, 11, 12},
                        {14, 15}});
}

FourierDescription code_15_8_3() { return family_to_B(fifteen_qubit_family(), 15); }

SetFamily subspace_family(std::size_t m, std::size_t r, std::uint32_t q, const Limits& limits) {
  if (r > m) throw std::invalid_argument("subspace dimension exceeds ambient dimension");
  galois::require_prime(q);
  check_cap("subspace family size",
            galois::gaussian_binomial(static_cast<int>(m), q, static_cast<int>(r)) *
                galois::power(q, static_cast<unsigned>(r)),
            limits.max_errors);
  const auto universe = galois::power(q, static_cast<unsigned>(m)).convert_to<std::size_t>();
  const auto span_size = galois::power(q, static_cast<unsigned>(r)).convert_to<std::uint64_t>();
  std::vector<std::vector<std::size_t>> members;

  auto emit = [&](const std::vector<FieldVector>& basis) {
    std::vector<std::size_t> points;
    points.reserve(span_size);
    for (std::uint64_t c = 0; c < span_size; ++c) {
      auto coeffs = galois::from_index(c, r, q);
      FieldVector v(m, q);
      for (std::size_t i = 0; i < r; ++i) v.axpy(coeffs[i], basis[i]);
      points.push_back(1 + galois::to_index(v));
    }
    members.push_back(std::move(points));
  };

  if (r == 0) {
    emit({});
    return SetFamily(universe, std::move(members));
  }
  galois::for_each_combination(m, r, [&](const std::vector<std::size_t>& pivots) {
    // free slots: (row, column) right of the row's pivot and not a pivot column
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t c = pivots[i] + 1; c < m; ++c) {
        if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) slots.emplace_back(i, c);
      }
    const auto fills = galois::power(q, static_cast<unsigned>(slots.size())).convert_to<std::uint64_t>();
    for (std::uint64_t f = 0; f < fills; ++f) {
      auto values = galois::from_index(f, slots.size(), q);
      std::vector<FieldVector> basis(r, FieldVector(m, q));
      for (std::size_t i = 0; i < r; ++i) basis[i].set(pivots[i], 1);
      for (std::size_t s = 0; s < slots.size(); ++s) basis[slots[s].first].set(slots[s].second, values[s]);
      emit(basis);
    }
    return true;
  });
  return SetFamily(universe, std::move(members));
}

std::set<std::size_t> forbidden_weights(std::size_t n, std::size_t d, const Limits& limits) {
  std::set<std::size_t> out;
  auto forbidden = gottesman::forbidden_set(laflamme_spec(n), d, limits);
  for (const auto& u : forbidden.members()) out.insert(u.weight());
  return out;
}

FourierDescription family_to_B(const SetFamily& family, std::size_t n, const Limits& limits) {
  if (family.universe() > n) throw std::invalid_argument("family universe does not embed in {1..n}");
  auto spec = laflamme_spec(n);
  auto weights = forbidden_weights(n, 3, limits);
  const auto& members = family.members();
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      auto size = symmetric_difference_size(members[i], members[j]);
      if (weights.contains(size)) {
        std::ostringstream os;
        os << "members " << i + 1 << " and " << j + 1 << " have symmetric difference " << size
           << ", a forbidden weight";
        throw FamilyRejected(os.str(), i, j, size);
      }
    }
  std::vector<FieldVector> B;
  B.reserve(members.size());
  for (const auto& s : members) {
    FieldVector u(n, 2);
    for (auto pos : s) u.set(pos - 1, 1);
    B.push_back(std::move(u));
  }
  return FourierDescription(std::move(spec), std::move(B));
}

SetFamily puncture(const SetFamily& family, std::size_t coordinate) {
  if (coordinate < 1 || coordinate > family.universe()) throw std::invalid_argument("coordinate outside universe");
  std::vector<std::vector<std::size_t>> members;
  members.reserve(family.size());
  for (const auto& s : family.members()) {
    std::vector<std::size_t> out;
    for (auto x : s) {
      if (x == coordinate) continue;
      out.push_back(x > coordinate ? x - 1 : x);
    }
    members.push_back(std::move(out));
  }
  return SetFamily(family.universe() - 1, std::move(members));
}

// ---------------------------------------------------------------- sum-zero form

GottesmanSpec sum_zero_spec(const SumZeroForm& form) {
  const std::size_t n = form.n();
  const std::uint32_t q = form.q;
  if (form.D.cols() != n || form.D.modulus() != q) throw std::invalid_argument("D must be n x n over GF(q)");
  if (n < 2) throw std::invalid_argument("sum-zero form needs n >= 2");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      if (form.D(i, j) != 0) throw std::invalid_argument("D must be upper triangular");
    }
  FieldMatrix E(n, n - 1, q);
  for (std::size_t j = 0; j + 1 < n; ++j) {
    E.set(j, j, 1);
    E.set(n - 1, j, -1);
  }
  FieldMatrix symmetric = form.D + form.D.transpose();
  FieldMatrix LE = symmetric * E;
  FieldMatrix L(n, n, q);
  FieldMatrix M(n, n, q);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j + 1 < n; ++j) {
      L.set(i, j, E(i, j));
      M.set(i, j, LE(i, j));
    }
    M.set(i, n - 1, 1);
  }
  FieldMatrix quad = E.transpose() * form.D * E;
  gottesman::PhaseTable table(n, std::vector<std::uint32_t>(n, 0));
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = 0; j + 1 < n; ++j) table[i][j] = 2 * quad(i, j);
  return GottesmanSpec(q, std::move(L), std::move(M), std::move(table));
}

FieldVector message_to_index(const SumZeroForm& form, const Message& message) {
  const std::size_t n = form.n();
  const std::uint32_t q = form.q;
  if (message.c.size() != n || message.d.size() != n) throw std::invalid_argument("message vectors must have length n");
  FieldVector u(n, q);
  for (std::size_t j = 0; j + 1 < n; ++j) {
    u.set(j, static_cast<std::int64_t>(message.c[j]) - message.c[n - 1]);
  }
  std::int64_t total = 0;
  for (std::size_t i = 0; i < n; ++i) total += message.d[i];
  u.set(n - 1, total);
  return u;
}

Message index_to_message(const SumZeroForm& form, const FieldVector& u) {
  const std::size_t n = form.n();
  const std::uint32_t q = form.q;
  if (u.size() != n) throw std::invalid_argument("index must have length n");
  FieldVector c(n, q);
  for (std::size_t j = 0; j + 1 < n; ++j) c.set(j, u[j]);
  FieldVector d(n, q);
  d.set(0, u[n - 1]);
  return {c, d};
}

SumZeroForm cyclic_sum_zero_form(std::size_t n, std::uint32_t q) {
  auto S = cyclic_shift_matrix(n, q);
  FieldMatrix D(n, n, q);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) D.set(i, j, S(i, j));
  return SumZeroForm{q, D};
}

FourierDescription relabel(const FourierDescription& code, const GottesmanSpec& target) {
  const auto& source = code.spec();
  if (source.q() != target.q() || source.n() != target.n() || source.r() != target.r()) {
    throw std::invalid_argument("relabel: specs have different shapes");
  }
  const std::uint32_t q = source.q();
  const std::uint32_t step = source.phase_denominator() / q;
  const std::size_t r = source.r();
  FieldMatrix phi(r, r, q);
  FieldVector shift(r, q);
  for (std::size_t i = 0; i < r; ++i) {
    auto g = target.element(FieldVector::unit(r, i, q));
    auto a = source.index_of(g.a, g.b);
    if (!a) throw std::invalid_argument("relabel: target generator is not in the source subgroup");
    const std::uint32_t P = source.phase_denominator();
    std::uint32_t diff = (g.phase + P - source.rho(*a)) % P;
    if (diff % step != 0) throw std::invalid_argument("relabel: phase difference is not a q-th root of unity");
    shift.set(i, diff / step);
    for (std::size_t k = 0; k < r; ++k) phi.set(k, i, (*a)[k]);
  }
  if (phi.rank() != r) throw std::invalid_argument("relabel: subgroups differ");
  FieldMatrix phi_t = phi.transpose();
  std::vector<FieldVector> members;
  members.reserve(code.size());
  for (const auto& u : code.members()) members.push_back(phi_t * u + shift);
  return FourierDescription(target, std::move(members));
}

// ---------------------------------------------------------------- alpha-good

AlphaGoodReport alpha_good(const FieldMatrix& R, const Rational& alpha, const Limits& limits) {
  if (R.rows() != R.cols()) throw std::invalid_argument("alpha_good: R must be square");
  if (R.modulus() != 2) throw std::invalid_argument("alpha_good: R must be binary");
  if (alpha <= 0 || alpha >= 1) throw std::invalid_argument("alpha_good: alpha must lie in (0, 1)");
  const std::size_t n = R.rows();
  const Rational alpha_n = alpha * n;
  const auto k = static_cast<std::size_t>(
      boost::multiprecision::numerator(alpha_n) / boost::multiprecision::denominator(alpha_n));
  check_cap("alpha-good subset enumeration", galois::binomial(static_cast<int>(n), static_cast<int>(k)) * 2,
            limits.max_errors);
  const Rational upper = (1 - alpha) * n;

  const FieldMatrix Rt = R.transpose();
  auto sum_weight = [&](const FieldMatrix& m, const std::vector<std::size_t>& picks) {
    FieldVector acc(n, 2);
    for (auto c : picks) acc += m.row(c);
    return acc.weight();
  };
  AlphaGoodReport report;
  // condition 1/3 look at column sums (rows of R^T), 2/4 at row sums
  const std::pair<int, const FieldMatrix*> checks[] = {{1, &Rt}, {2, &R}, {3, &Rt}, {4, &R}};
  for (const auto& [condition, matrix] : checks) {
    galois::for_each_combination(n, k, [&](const std::vector<std::size_t>& picks) {
      auto w = sum_weight(*matrix, picks);
      bool ok = condition <= 2 ? Rational(w) >= alpha_n : Rational(w) <= upper;
      if (ok) return true;
      report.pass = false;
      report.failed_condition = condition;
      report.witness = picks;
      report.weight = w;
      return false;
    });
    if (!report.pass) return report;
  }
  return report;
}

SumZeroForm alpha_good_form(const FieldMatrix& R) {
  if (R.rows() != R.cols() || R.modulus() != 2) throw std::invalid_argument("R must be square and binary");
  const std::size_t n = R.rows();
  FieldMatrix D(2 * n, 2 * n, 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) D.set(i, n + j, R(i, j));
  return SumZeroForm{2, D};
}

GottesmanSpec alpha_good_spec(const FieldMatrix& R) { return sum_zero_spec(alpha_good_form(R)); }

std::optional<FieldMatrix> search_alpha_good(std::size_t n, const Rational& alpha, std::uint64_t seed,
                                             std::size_t trials, const Limits& limits) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution bit(0.5);
  for (std::size_t t = 0; t < trials; ++t) {
    FieldMatrix R(n, n, 2);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) R.set(i, j, bit(rng) ? 1 : 0);
    if (alpha_good(R, alpha, limits).pass) return R;
  }
  return std::nullopt;
}

}  // namespace nonstab::families
