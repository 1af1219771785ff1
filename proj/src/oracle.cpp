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

#include "nonstab/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <unordered_map>

namespace nonstab::oracle {

namespace {

constexpr std::uint64_t kDenseLimit = std::uint64_t{1} << 24;

// Amplitude lookup by index: a dense table when the space is small enough,
// binary search otherwise.
class Lookup {
 public:
  explicit Lookup(const SparseState& state) : state_(&state) {
    if (state.dimension() <= kDenseLimit) {
      dense_.assign(state.dimension(), Complex{});
      for (const auto& [index, amp] : state.entries()) dense_[index] = amp;
    }
  }
  Complex operator()(std::uint64_t index) const {
    return dense_.empty() ? state_->amplitude(index) : dense_[index];
  }

 private:
  const SparseState* state_;
  std::vector<Complex> dense_;
};

// Accumulates amplitudes keyed by index in a deterministic order.
class Accumulator {
 public:
  explicit Accumulator(std::uint64_t dimension) : dimension_(dimension) {
    if (dimension <= kDenseLimit) dense_.assign(dimension, Complex{});
  }
  void add(std::uint64_t index, Complex value) {
    if (dense_.empty()) {
      sparse_[index] += value;
    } else {
      dense_[index] += value;
    }
  }
  std::vector<SparseState::Entry> entries() const {
    std::vector<SparseState::Entry> out;
    if (dense_.empty()) {
      out.assign(sparse_.begin(), sparse_.end());
    } else {
      for (std::uint64_t i = 0; i < dimension_; ++i) {
        if (dense_[i] != Complex{}) out.emplace_back(i, dense_[i]);
      }
    }
    return out;
  }

 private:
  std::uint64_t dimension_;
  std::vector<Complex> dense_;
  std::unordered_map<std::uint64_t, Complex> sparse_;
};

void require_prime_alphabet(const FourierDescription& code, const SparseState& probe) {
  if (probe.radix() != code.spec().q() || probe.length() != code.spec().n()) {
    throw std::invalid_argument("state does not match the code's alphabet and length");
  }
}

}  // namespace

// ---------------------------------------------------------------- action

IndexAction::IndexAction(const ErrorGroup& group, const WeylElement& g)
    : group_(&group),
      base_phase_(g.phase),
      P_(group.phase_denominator()),
      radix_(group.alphabet().size()),
      length_(group.length()),
      a_(g.a),
      b_(g.b) {
  if (g.a.size() != length_ || g.b.size() != length_) throw std::invalid_argument("Weyl element length mismatch");
  if (radix_ == 2 && length_ < 64) {
    binary_ = true;
    for (std::size_t i = 0; i < length_; ++i) {
      const std::uint64_t bit = std::uint64_t{1} << (length_ - 1 - i);
      if (g.a[i]) a_mask_ |= bit;
      if (g.b[i]) b_mask_ |= bit;
    }
  }
}

std::uint64_t IndexAction::target(std::uint64_t index, std::uint32_t& exponent) const {
  if (binary_) {
    // U_a V_b |x> = (-1)^{b.x} |x + a>
    exponent = (base_phase_ + (P_ / 2) * (std::popcount(index & b_mask_) & 1)) % P_;
    return index ^ a_mask_;
  }
  const auto& alphabet = group_->alphabet();
  std::uint64_t e = base_phase_;
  std::uint64_t out = 0;
  std::uint64_t place = 1;
  for (std::size_t i = length_; i-- > 0;) {
    auto x = static_cast<std::uint32_t>(index % radix_);
    index /= radix_;
    e += alphabet.pairing(b_[i], x);
    out += alphabet.add(x, a_[i]) * place;
    place *= radix_;
  }
  exponent = static_cast<std::uint32_t>(e % P_);
  return out;
}

SparseState apply(const ErrorGroup& group, const WeylElement& g, const SparseState& state) {
  if (state.radix() != group.alphabet().size() || state.length() != group.length()) {
    throw std::invalid_argument("state does not match the error group");
  }
  IndexAction action(group, g);
  const std::uint32_t P = group.phase_denominator();
  std::vector<SparseState::Entry> out;
  out.reserve(state.support_size());
  for (const auto& [index, amp] : state.entries()) {
    std::uint32_t e = 0;
    auto t = action.target(index, e);
    out.emplace_back(t, amp * weyl::phase_value(e, P));
  }
  return SparseState::from_entries(state.radix(), state.length(), std::move(out));
}

double eigen_residual(const ErrorGroup& group, const WeylElement& g, std::uint32_t exponent,
                      const SparseState& state) {
  auto moved = apply(group, g, state);
  auto expected = state.scaled(weyl::phase_value(exponent, group.phase_denominator()));
  double worst = 0.0;
  Lookup lhs(moved);
  Lookup rhs(expected);
  for (const auto& [index, amp] : moved.entries()) worst = std::max(worst, std::abs(amp - rhs(index)));
  for (const auto& [index, amp] : expected.entries()) worst = std::max(worst, std::abs(amp - lhs(index)));
  return worst;
}

// ---------------------------------------------------------------- codewords

std::vector<SparseState> codewords(const FourierDescription& code, const Limits& limits) {
  const auto& spec = code.spec();
  if (!spec.is_maximal()) throw std::invalid_argument("codewords need a maximal spec (r = n)");
  check_cap("Gottesman subgroup size", spec.order(), limits.max_group);
  const std::uint32_t q = spec.q();
  const std::size_t n = spec.n();
  const std::size_t r = spec.r();
  const std::uint32_t P = spec.phase_denominator();
  const auto& group = spec.group();

  const auto count = spec.order().convert_to<std::uint64_t>();
  std::vector<galois::FieldVector> indices;
  std::vector<IndexAction> actions;
  indices.reserve(count);
  actions.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    indices.push_back(galois::from_index(i, r, q));
    actions.emplace_back(group, spec.element(indices.back()));
  }

  // Words supported off the pivot coordinates of L^T complement image(L).
  galois::LinearSystem rows(spec.L().transpose());
  std::vector<std::size_t> free_coords;
  for (std::size_t c = 0; c < n; ++c) {
    const auto& pivots = rows.pivot_columns();
    if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) free_coords.push_back(c);
  }
  const BigInt reps_big = galois::power(q, static_cast<unsigned>(free_coords.size()));
  check_cap("coset representatives", reps_big, limits.max_group);
  const auto reps = reps_big.convert_to<std::uint64_t>();

  SparseState shape(q, n);
  const double scale = 1.0 / static_cast<double>(count);
  std::vector<SparseState> out;
  out.reserve(code.size());
  for (const auto& u : code.members()) {
    std::optional<SparseState> found;
    for (std::uint64_t k = 0; k < reps && !found; ++k) {
      auto digits = galois::from_index(k, free_coords.size(), q);
      Word x(n, 0);
      for (std::size_t j = 0; j < free_coords.size(); ++j) x[free_coords[j]] = digits[j];
      const std::uint64_t start = shape.index_of(x);

      Accumulator acc(shape.dimension());
      for (std::uint64_t i = 0; i < count; ++i) {
        std::uint32_t e = 0;
        auto t = actions[i].target(start, e);
        // conj(chi_u(a)) s_a |x>
        std::uint32_t total = (e + P - spec.character(u, indices[i])) % P;
        acc.add(t, weyl::phase_value(total, P) * scale);
      }
      auto state = SparseState::from_entries(q, n, acc.entries());
      if (state.norm_squared() > 1e-12) found = state.normalized();
    }
    if (!found) throw std::runtime_error("projection vanished on every coset representative for u = " + u.to_string());
    out.push_back(std::move(*found));
  }
  return out;
}

SparseState codeword(const FourierDescription& code, const FieldVector& u, const Limits& limits) {
  if (!code.contains(u)) throw std::invalid_argument("codeword: u is not a member of B");
  FourierDescription single(code.spec(), {u});
  return codewords(single, limits).front();
}

std::vector<SparseState> code_basis(const FourierDescription& code, const Limits& limits) {
  const auto& spec = code.spec();
  if (spec.is_maximal()) return codewords(code, limits);
  auto projection = fourier::dense_projection(code, 4096, limits);
  const std::size_t dim = projection.dim;
  std::vector<std::vector<Complex>> basis;
  for (std::size_t col = 0; col < dim; ++col) {
    std::vector<Complex> v(dim);
    for (std::size_t row = 0; row < dim; ++row) v[row] = projection(row, col);
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& b : basis) {
        Complex dot{};
        for (std::size_t i = 0; i < dim; ++i) dot += std::conj(b[i]) * v[i];
        for (std::size_t i = 0; i < dim; ++i) v[i] -= dot * b[i];
      }
    }
    double norm = 0.0;
    for (auto c : v) norm += std::norm(c);
    if (norm < 1e-8) continue;
    norm = std::sqrt(norm);
    for (auto& c : v) c /= norm;
    basis.push_back(std::move(v));
  }
  std::vector<SparseState> out;
  out.reserve(basis.size());
  for (const auto& v : basis) {
    std::vector<SparseState::Entry> entries;
    for (std::size_t i = 0; i < dim; ++i) entries.emplace_back(i, v[i]);
    out.push_back(SparseState::from_entries(spec.q(), spec.n(), std::move(entries)));
  }
  return out;
}

SparseState closed_form_codeword(const families::SumZeroForm& form, const families::Message& message) {
  const std::size_t n = form.n();
  const std::uint32_t q = form.q;
  const auto& D = form.D;
  const auto free_count = galois::power(q, static_cast<unsigned>(n - 1)).convert_to<std::uint64_t>();
  const double amplitude = 1.0 / std::sqrt(static_cast<double>(free_count));
  SparseState shape(q, n);
  std::vector<SparseState::Entry> entries;
  entries.reserve(free_count);
  for (std::uint64_t k = 0; k < free_count; ++k) {
    auto head = galois::from_index(k, n - 1, q);
    FieldVector x(n, q);
    std::int64_t total = 0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      x.set(i, head[i]);
      total += head[i];
    }
    x.set(n - 1, -total);
    auto z = x + message.d;
    std::uint32_t quad = z.dot(D * z);
    std::uint32_t e = (quad + q - x.dot(message.c)) % q;
    entries.emplace_back(shape.index_of(z.entries()), weyl::phase_value(e, q) * amplitude);
  }
  return SparseState::from_entries(q, n, std::move(entries));
}

// ---------------------------------------------------------------- checks

KLReport kl_check(const std::vector<SparseState>& basis, const ErrorGroup& group, std::size_t d,
                  const Limits& limits, double tolerance) {
  KLReport report;
  if (basis.empty() || d <= 1) return report;
  auto errors = group.enumerate_bounded(d - 1, limits.max_errors);
  report.errors_checked = errors.size();
  const std::size_t K = basis.size();
  std::vector<Lookup> lookups;
  lookups.reserve(K);
  for (const auto& s : basis) lookups.emplace_back(s);
  const std::uint32_t P = group.phase_denominator();

  struct Failure {
    std::size_t first, second;
    Complex value;
  };
  auto check_error = [&](const WeylElement& g) -> std::optional<Failure> {
    IndexAction action(group, g);
    std::vector<Complex> gram(K * K);
    for (std::size_t v = 0; v < K; ++v) {
      for (const auto& [index, amp] : basis[v].entries()) {
        std::uint32_t e = 0;
        auto t = action.target(index, e);
        const Complex moved = amp * weyl::phase_value(e, P);
        for (std::size_t u = 0; u < K; ++u) gram[u * K + v] += std::conj(lookups[u](t)) * moved;
      }
    }
    const Complex scalar = gram[0];
    for (std::size_t u = 0; u < K; ++u)
      for (std::size_t v = 0; v < K; ++v) {
        const Complex expected = u == v ? scalar : Complex{};
        if (std::abs(gram[u * K + v] - expected) > tolerance) return Failure{u, v, gram[u * K + v]};
      }
    return std::nullopt;
  };

  const unsigned threads = std::max(1u, std::min<unsigned>(limits.threads, static_cast<unsigned>(errors.size())));
  std::atomic<std::size_t> first_bad{errors.size()};
  std::vector<std::optional<Failure>> failures(errors.size());
  auto worker = [&](unsigned id) {
    for (std::size_t i = id; i < errors.size(); i += threads) {
      if (i > first_bad.load()) break;
      if (auto f = check_error(errors[i])) {
        failures[i] = f;
        std::size_t cur = first_bad.load();
        while (i < cur && !first_bad.compare_exchange_weak(cur, i)) {
        }
      }
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    for (auto& t : pool) t.join();
  }
  if (first_bad.load() < errors.size()) {
    const auto i = first_bad.load();
    report.pass = false;
    report.error = errors[i];
    report.first = failures[i]->first;
    report.second = failures[i]->second;
    report.value = failures[i]->value;
  }
  return report;
}

KLReport kl_check(const FourierDescription& code, std::size_t d, const Limits& limits, double tolerance) {
  auto basis = code_basis(code, limits);
  if (!basis.empty()) require_prime_alphabet(code, basis.front());
  return kl_check(basis, code.spec().group(), d, limits, tolerance);
}

OrthonormalityReport orthonormality_check(const std::vector<SparseState>& states, double tolerance) {
  OrthonormalityReport report;
  for (std::size_t i = 0; i < states.size(); ++i)
    for (std::size_t j = i; j < states.size(); ++j) {
      Complex value = states[i].inner(states[j]);
      Complex expected = i == j ? Complex{1.0, 0.0} : Complex{};
      if (std::abs(value - expected) > tolerance) {
        report.pass = false;
        report.first = i;
        report.second = j;
        report.value = value;
        return report;
      }
    }
  return report;
}

}  // namespace nonstab::oracle
