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

#include "nonstab/weyl.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace nonstab::weyl {

AlphabetGroup::AlphabetGroup(std::vector<std::uint32_t> orders) : orders_(std::move(orders)) {
  if (orders_.empty()) throw std::invalid_argument("alphabet needs at least one cyclic factor");
  std::uint64_t size = 1;
  std::uint64_t lcm = 1;
  for (auto o : orders_) {
    if (o < 2) throw std::invalid_argument("cyclic factor orders must be >= 2");
    size *= o;
    lcm = std::lcm(lcm, static_cast<std::uint64_t>(o));
    if (size > 4096) throw std::invalid_argument("alphabet too large");
  }
  size_ = static_cast<std::uint32_t>(size);
  exponent_ = static_cast<std::uint32_t>(lcm);
  const std::uint32_t P = phase_denominator();

  add_.resize(size_ * size_);
  pair_.resize(size_ * size_);
  neg_.resize(size_);
  for (std::uint32_t x = 0; x < size_; ++x) {
    auto cx = components(x);
    std::vector<std::uint32_t> minus(cx.size());
    for (std::size_t j = 0; j < cx.size(); ++j) minus[j] = (orders_[j] - cx[j]) % orders_[j];
    neg_[x] = letter(minus);
    for (std::uint32_t y = 0; y < size_; ++y) {
      auto cy = components(y);
      std::vector<std::uint32_t> sum(cx.size());
      std::uint64_t e = 0;
      for (std::size_t j = 0; j < cx.size(); ++j) {
        sum[j] = (cx[j] + cy[j]) % orders_[j];
        // omega_{n_j}^{x_j y_j} = e^{2 pi i (x_j y_j P / n_j) / P}
        e += static_cast<std::uint64_t>(cx[j]) * cy[j] % orders_[j] * (P / orders_[j]);
      }
      add_[x * size_ + y] = letter(sum);
      pair_[x * size_ + y] = static_cast<std::uint32_t>(e % P);
    }
  }
}

AlphabetGroup AlphabetGroup::prime_field(std::uint32_t p) {
  galois::require_prime(p);
  return AlphabetGroup({p});
}

std::vector<std::uint32_t> AlphabetGroup::components(std::uint32_t letter) const {
  std::vector<std::uint32_t> out(orders_.size());
  for (std::size_t j = orders_.size(); j-- > 0;) {
    out[j] = letter % orders_[j];
    letter /= orders_[j];
  }
  return out;
}

std::uint32_t AlphabetGroup::letter(const std::vector<std::uint32_t>& components) const {
  if (components.size() != orders_.size()) throw std::invalid_argument("component count mismatch");
  std::uint32_t out = 0;
  for (std::size_t j = 0; j < orders_.size(); ++j) out = out * orders_[j] + components[j] % orders_[j];
  return out;
}

Complex phase_value(std::uint32_t exponent, std::uint32_t denominator) {
  exponent %= denominator;
  // exact values on the axes keep the dense oracles free of rounding noise
  if (4 * exponent % denominator == 0) {
    switch (4 * exponent / denominator) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      default: return {0.0, -1.0};
    }
  }
  double angle = 2.0 * std::numbers::pi * exponent / denominator;
  return {std::cos(angle), std::sin(angle)};
}

// ---------------------------------------------------------------- DenseMatrix

DenseMatrix DenseMatrix::operator*(const DenseMatrix& other) const {
  if (dim != other.dim) throw std::invalid_argument("dense matrix dimension mismatch");
  DenseMatrix out(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t k = 0; k < dim; ++k) {
      Complex a = (*this)(i, k);
      if (a == Complex{}) continue;
      for (std::size_t j = 0; j < dim; ++j) out(i, j) += a * other(k, j);
    }
  return out;
}

DenseMatrix DenseMatrix::adjoint() const {
  DenseMatrix out(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

Complex DenseMatrix::trace() const {
  Complex t{};
  for (std::size_t i = 0; i < dim; ++i) t += (*this)(i, i);
  return t;
}

DenseMatrix DenseMatrix::identity(std::size_t d) {
  DenseMatrix out(d);
  for (std::size_t i = 0; i < d; ++i) out(i, i) = 1.0;
  return out;
}

// ---------------------------------------------------------------- ErrorGroup

ErrorGroup::ErrorGroup(AlphabetGroup alphabet, std::size_t n)
    : alphabet_(std::move(alphabet)), n_(n) {}

void ErrorGroup::check(const WeylElement& g) const {
  if (g.a.size() != n_ || g.b.size() != n_) throw std::invalid_argument("Weyl element length mismatch");
  if (g.phase >= phase_denominator()) throw std::invalid_argument("phase not reduced");
}

WeylElement ErrorGroup::identity() const { return {0, Word(n_, 0), Word(n_, 0)}; }

WeylElement ErrorGroup::scalar(std::uint32_t phase) const {
  auto g = identity();
  g.phase = phase % phase_denominator();
  return g;
}

WeylElement ErrorGroup::make(std::int64_t phase, Word a, Word b) const {
  const std::int64_t P = phase_denominator();
  std::int64_t reduced = phase % P;
  if (reduced < 0) reduced += P;
  WeylElement g{static_cast<std::uint32_t>(reduced), std::move(a), std::move(b)};
  check(g);
  for (std::size_t i = 0; i < n_; ++i) {
    if (g.a[i] >= alphabet_.size() || g.b[i] >= alphabet_.size()) {
      throw std::invalid_argument("letter outside alphabet");
    }
  }
  return g;
}

std::uint32_t ErrorGroup::bicharacter(const Word& a, const Word& b) const {
  if (a.size() != n_ || b.size() != n_) throw std::invalid_argument("bicharacter: word length mismatch");
  std::uint64_t e = 0;
  for (std::size_t i = 0; i < n_; ++i) e += alphabet_.pairing(a[i], b[i]);
  return static_cast<std::uint32_t>(e % phase_denominator());
}

WeylElement ErrorGroup::compose(const WeylElement& g, const WeylElement& h) const {
  check(g);
  check(h);
  // omega^i U_a V_b omega^j U_c V_d = omega^{i+j} <b,c> U_{a+c} V_{b+d}
  WeylElement out;
  out.phase = static_cast<std::uint32_t>(
      (static_cast<std::uint64_t>(g.phase) + h.phase + bicharacter(g.b, h.a)) % phase_denominator());
  out.a.resize(n_);
  out.b.resize(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    out.a[i] = alphabet_.add(g.a[i], h.a[i]);
    out.b[i] = alphabet_.add(g.b[i], h.b[i]);
  }
  return out;
}

WeylElement ErrorGroup::inverse(const WeylElement& g) const {
  check(g);
  // (omega^i U_a V_b)^{-1} = omega^{-i} <a,b> U_{-a} V_{-b}
  const std::uint32_t P = phase_denominator();
  WeylElement out;
  out.phase = (P - g.phase + bicharacter(g.a, g.b)) % P;
  out.a.resize(n_);
  out.b.resize(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    out.a[i] = alphabet_.negate(g.a[i]);
    out.b[i] = alphabet_.negate(g.b[i]);
  }
  return out;
}

std::uint32_t ErrorGroup::gamma(const WeylElement& g, const WeylElement& h) const {
  check(g);
  check(h);
  // <b, c> * conj(<a, d>)
  const std::uint32_t P = phase_denominator();
  return (bicharacter(g.b, h.a) + P - bicharacter(g.a, h.b)) % P;
}

std::size_t ErrorGroup::weight(const WeylElement& g) const {
  check(g);
  std::size_t w = 0;
  for (std::size_t i = 0; i < n_; ++i) w += (g.a[i] != 0 || g.b[i] != 0) ? 1 : 0;
  return w;
}

DenseMatrix ErrorGroup::dense_matrix(const WeylElement& g, std::size_t max_dim) const {
  check(g);
  const std::uint64_t M = alphabet_.size();
  std::uint64_t dim = 1;
  for (std::size_t i = 0; i < n_; ++i) {
    dim *= M;
    if (dim > max_dim) {
      throw CapExceeded("dense matrix dimension", BigInt(galois::power(alphabet_.size(), n_)), max_dim);
    }
  }
  DenseMatrix out(dim);
  const std::uint32_t P = phase_denominator();
  Word x(n_, 0);
  for (std::uint64_t col = 0; col < dim; ++col) {
    std::uint64_t rest = col;
    for (std::size_t i = n_; i-- > 0;) {
      x[i] = static_cast<std::uint32_t>(rest % M);
      rest /= M;
    }
    // U_a V_b |x> = <b, x> |x + a>
    std::uint64_t row = 0;
    for (std::size_t i = 0; i < n_; ++i) row = row * M + alphabet_.add(x[i], g.a[i]);
    std::uint32_t e = (g.phase + bicharacter(g.b, x)) % P;
    out(row, col) = phase_value(e, P);
  }
  return out;
}

void ErrorGroup::for_each_bounded(std::size_t max_weight,
                                  const std::function<bool(const WeylElement&)>& visit,
                                  const BigInt& cap) const {
  max_weight = std::min(max_weight, n_);
  if (max_weight == 0) return;
  check_cap("error enumeration",
            galois::error_sphere_count(static_cast<int>(n_), alphabet_.size(), static_cast<int>(max_weight)),
            cap);
  const std::uint32_t M = alphabet_.size();
  const std::uint32_t local_count = M * M;  // local index = a_i * M + b_i, skip 0
  WeylElement g = identity();
  bool keep_going = true;
  for (std::size_t w = 1; w <= max_weight && keep_going; ++w) {
    galois::for_each_combination(n_, w, [&](const std::vector<std::size_t>& support) {
      std::vector<std::uint32_t> local(w, 1);
      while (true) {
        for (std::size_t k = 0; k < w; ++k) {
          g.a[support[k]] = local[k] / M;
          g.b[support[k]] = local[k] % M;
        }
        if (!visit(g)) {
          keep_going = false;
          break;
        }
        std::size_t k = w;
        while (k > 0 && local[k - 1] == local_count - 1) {
          local[k - 1] = 1;
          --k;
        }
        if (k == 0) break;
        ++local[k - 1];
      }
      for (auto s : support) g.a[s] = g.b[s] = 0;
      return keep_going;
    });
  }
}

std::vector<WeylElement> ErrorGroup::enumerate_bounded(std::size_t max_weight, const BigInt& cap) const {
  std::vector<WeylElement> out;
  for_each_bounded(max_weight, [&](const WeylElement& g) {
    out.push_back(g);
    return true;
  }, cap);
  return out;
}

}  // namespace nonstab::weyl
