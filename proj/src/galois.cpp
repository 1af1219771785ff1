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

#include "nonstab/galois.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace nonstab::galois {

namespace {

std::uint32_t reduce(std::int64_t value, std::uint32_t p) {
  std::int64_t r = value % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

std::uint32_t mulmod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

}  // namespace

bool is_prime(std::uint32_t p) {
  // bit k set iff k < 64 is prime
  constexpr std::uint64_t kSmallPrimes = 0x28208a20a08a28acULL;
  if (p < 64) return (kSmallPrimes >> p) & 1;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

void require_prime(std::uint32_t p) {
  if (!is_prime(p)) {
    throw std::invalid_argument("field modulus " + std::to_string(p) +
                                " is not prime");
  }
}

std::uint32_t inverse_mod(std::uint32_t value, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = value % p;
  if (new_r == 0) throw std::domain_error("zero has no inverse");
  while (new_r != 0) {
    std::int64_t quotient = r / new_r;
    std::tie(t, new_t) = std::make_pair(new_t, t - quotient * new_t);
    std::tie(r, new_r) = std::make_pair(new_r, r - quotient * new_r);
  }
  if (r != 1) throw std::domain_error("value not invertible");
  return reduce(t, p);
}

// ---------------------------------------------------------------- FieldScalar

FieldScalar::FieldScalar(std::int64_t value, std::uint32_t modulus)
    : value_(reduce(value, modulus)), modulus_(modulus) {}

FieldScalar FieldScalar::operator+(const FieldScalar& other) const {
  if (modulus_ != other.modulus_) throw std::invalid_argument("modulus mismatch");
  return {static_cast<std::int64_t>(value_) + other.value_, modulus_};
}

FieldScalar FieldScalar::operator-(const FieldScalar& other) const {
  if (modulus_ != other.modulus_) throw std::invalid_argument("modulus mismatch");
  return {static_cast<std::int64_t>(value_) - other.value_, modulus_};
}

FieldScalar FieldScalar::operator*(const FieldScalar& other) const {
  if (modulus_ != other.modulus_) throw std::invalid_argument("modulus mismatch");
  return {mulmod(value_, other.value_, modulus_), modulus_};
}

FieldScalar FieldScalar::operator-() const {
  return {-static_cast<std::int64_t>(value_), modulus_};
}

FieldScalar FieldScalar::inverse() const {
  return {inverse_mod(value_, modulus_), modulus_};
}

// ---------------------------------------------------------------- FieldVector

FieldVector::FieldVector(std::size_t size, std::uint32_t modulus)
    : modulus_(modulus), entries_(size, 0) {
  require_prime(modulus);
}

FieldVector::FieldVector(std::vector<std::uint32_t> entries, std::uint32_t modulus)
    : modulus_(modulus), entries_(std::move(entries)) {
  require_prime(modulus);
  for (auto& e : entries_) e %= modulus_;
}

FieldVector::FieldVector(std::initializer_list<std::int64_t> entries,
                         std::uint32_t modulus)
    : modulus_(modulus) {
  require_prime(modulus);
  entries_.reserve(entries.size());
  for (auto e : entries) entries_.push_back(reduce(e, modulus));
}

FieldVector FieldVector::from_signed(const std::vector<std::int64_t>& entries,
                                     std::uint32_t modulus) {
  FieldVector v(entries.size(), modulus);
  for (std::size_t i = 0; i < entries.size(); ++i) v.entries_[i] = reduce(entries[i], modulus);
  return v;
}

FieldVector FieldVector::unit(std::size_t size, std::size_t index,
                              std::uint32_t modulus) {
  FieldVector v(size, modulus);
  v.entries_.at(index) = 1 % modulus;
  return v;
}

void FieldVector::set(std::size_t i, std::int64_t value) {
  entries_.at(i) = reduce(value, modulus_);
}

void FieldVector::check_compatible(const FieldVector& other) const {
  if (modulus_ != other.modulus_) throw std::invalid_argument("mixed-modulus vectors");
  if (entries_.size() != other.entries_.size()) {
    throw std::invalid_argument("vector length mismatch");
  }
}

FieldVector FieldVector::operator+(const FieldVector& other) const {
  FieldVector out = *this;
  out += other;
  return out;
}

FieldVector& FieldVector::operator+=(const FieldVector& other) {
  check_compatible(other);
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    entries_[i] += other.entries_[i];
    if (entries_[i] >= modulus_) entries_[i] -= modulus_;
  }
  return *this;
}

FieldVector FieldVector::operator-(const FieldVector& other) const {
  check_compatible(other);
  FieldVector out = *this;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    out.entries_[i] = (entries_[i] + modulus_ - other.entries_[i]) % modulus_;
  }
  return out;
}

FieldVector FieldVector::operator-() const {
  FieldVector out = *this;
  for (auto& e : out.entries_) e = (modulus_ - e) % modulus_;
  return out;
}

FieldVector FieldVector::scaled(std::uint32_t factor) const {
  FieldVector out = *this;
  for (auto& e : out.entries_) e = mulmod(e, factor % modulus_, modulus_);
  return out;
}

void FieldVector::axpy(std::uint32_t factor, const FieldVector& other) {
  check_compatible(other);
  factor %= modulus_;
  if (factor == 0) return;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    entries_[i] = (entries_[i] + mulmod(factor, other.entries_[i], modulus_)) % modulus_;
  }
}

std::uint32_t FieldVector::dot(const FieldVector& other) const {
  check_compatible(other);
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    acc = (acc + static_cast<std::uint64_t>(entries_[i]) * other.entries_[i]) % modulus_;
  }
  return static_cast<std::uint32_t>(acc);
}

std::size_t FieldVector::weight() const {
  return static_cast<std::size_t>(
      std::count_if(entries_.begin(), entries_.end(), [](auto e) { return e != 0; }));
}

bool FieldVector::is_zero() const { return weight() == 0; }

std::string FieldVector::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const FieldVector& v) {
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  return os << ')';
}

std::size_t FieldVectorHash::operator()(const FieldVector& v) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull ^ v.modulus();
  for (auto e : v.entries()) {
    h ^= e + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

// ---------------------------------------------------------------- FieldMatrix

FieldMatrix::FieldMatrix(std::size_t rows, std::size_t cols, std::uint32_t modulus)
    : rows_(rows), cols_(cols), modulus_(modulus), data_(rows * cols, 0) {
  require_prime(modulus);
}

FieldMatrix::FieldMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows,
                         std::uint32_t modulus)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0), modulus_(modulus) {
  require_prime(modulus);
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("ragged matrix");
    for (auto e : row) data_.push_back(reduce(e, modulus));
  }
}

FieldMatrix FieldMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows,
                                   std::size_t cols, std::uint32_t modulus) {
  FieldMatrix m(rows.size(), cols, modulus);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged matrix");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

FieldMatrix FieldMatrix::identity(std::size_t size, std::uint32_t modulus) {
  FieldMatrix m(size, size, modulus);
  for (std::size_t i = 0; i < size; ++i) m.set(i, i, 1);
  return m;
}

void FieldMatrix::set(std::size_t r, std::size_t c, std::int64_t value) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index");
  data_[r * cols_ + c] = reduce(value, modulus_);
}

FieldVector FieldMatrix::row(std::size_t r) const {
  std::vector<std::uint32_t> out(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                                 data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
  return {std::move(out), modulus_};
}

FieldVector FieldMatrix::column(std::size_t c) const {
  FieldVector out(rows_, modulus_);
  for (std::size_t r = 0; r < rows_; ++r) out.set(r, (*this)(r, c));
  return out;
}

FieldMatrix FieldMatrix::transpose() const {
  FieldMatrix t(cols_, rows_, modulus_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.data_[c * rows_ + r] = (*this)(r, c);
  return t;
}

FieldMatrix FieldMatrix::operator*(const FieldMatrix& other) const {
  if (cols_ != other.rows_ || modulus_ != other.modulus_) {
    throw std::invalid_argument("matrix product dimension mismatch");
  }
  FieldMatrix out(rows_, other.cols_, modulus_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      std::uint32_t a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) {
        auto& cell = out.data_[i * other.cols_ + j];
        cell = (cell + mulmod(a, other(k, j), modulus_)) % modulus_;
      }
    }
  }
  return out;
}

FieldVector FieldMatrix::operator*(const FieldVector& v) const {
  if (cols_ != v.size() || modulus_ != v.modulus()) {
    throw std::invalid_argument("matrix-vector dimension mismatch");
  }
  std::vector<std::uint32_t> out(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::uint64_t acc = 0;
    for (std::size_t k = 0; k < cols_; ++k) acc += static_cast<std::uint64_t>((*this)(i, k)) * v[k];
    out[i] = static_cast<std::uint32_t>(acc % modulus_);
  }
  return {std::move(out), modulus_};
}

FieldMatrix FieldMatrix::operator+(const FieldMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_ || modulus_ != other.modulus_) {
    throw std::invalid_argument("matrix sum dimension mismatch");
  }
  FieldMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = (data_[i] + other.data_[i]) % modulus_;
  return out;
}

FieldMatrix FieldMatrix::stacked(const FieldMatrix& bottom) const {
  if (cols_ != bottom.cols_ || modulus_ != bottom.modulus_) {
    throw std::invalid_argument("stacked: column mismatch");
  }
  FieldMatrix out(rows_ + bottom.rows_, cols_, modulus_);
  std::copy(data_.begin(), data_.end(), out.data_.begin());
  std::copy(bottom.data_.begin(), bottom.data_.end(),
            out.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
  return out;
}

FieldMatrix FieldMatrix::joined(const FieldMatrix& right) const {
  if (rows_ != right.rows_ || modulus_ != right.modulus_) {
    throw std::invalid_argument("joined: row mismatch");
  }
  FieldMatrix out(rows_, cols_ + right.cols_, modulus_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out.data_[r * out.cols_ + c] = (*this)(r, c);
    for (std::size_t c = 0; c < right.cols_; ++c) out.data_[r * out.cols_ + cols_ + c] = right(r, c);
  }
  return out;
}

bool FieldMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

std::size_t FieldMatrix::rank() const { return LinearSystem(*this).rank(); }

std::vector<std::vector<std::int64_t>> FieldMatrix::to_rows() const {
  std::vector<std::vector<std::int64_t>> out(rows_, std::vector<std::int64_t>(cols_));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r][c] = (*this)(r, c);
  return out;
}

// ---------------------------------------------------------------- LinearSystem

LinearSystem::LinearSystem(const FieldMatrix& a)
    : rows_(a.rows()),
      cols_(a.cols()),
      modulus_(a.modulus()),
      reduced_(a),
      transform_(FieldMatrix::identity(a.rows(), a.modulus())) {
  require_prime(modulus_);
  const std::uint32_t p = modulus_;
  auto& m = reduced_;
  auto& t = transform_;
  auto swap_rows = [](FieldMatrix& x, std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < x.cols(); ++c) {
      auto vi = x(i, c);
      x.set(i, c, x(j, c));
      x.set(j, c, vi);
    }
  };
  auto scale_row = [p](FieldMatrix& x, std::size_t i, std::uint32_t f) {
    for (std::size_t c = 0; c < x.cols(); ++c) x.set(i, c, mulmod(x(i, c), f, p));
  };
  // row_i -= f * row_j
  auto eliminate = [p](FieldMatrix& x, std::size_t i, std::size_t j, std::uint32_t f) {
    for (std::size_t c = 0; c < x.cols(); ++c) {
      auto vj = x(j, c);
      if (vj == 0) continue;
      x.set(i, c, static_cast<std::int64_t>(x(i, c)) - mulmod(f, vj, p));
    }
  };

  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols_ && pivot_row < rows_; ++col) {
    std::size_t found = rows_;
    for (std::size_t r = pivot_row; r < rows_; ++r) {
      if (m(r, col) != 0) {
        found = r;
        break;
      }
    }
    if (found == rows_) continue;
    if (found != pivot_row) {
      swap_rows(m, found, pivot_row);
      swap_rows(t, found, pivot_row);
    }
    std::uint32_t inv = inverse_mod(m(pivot_row, col), p);
    scale_row(m, pivot_row, inv);
    scale_row(t, pivot_row, inv);
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == pivot_row) continue;
      std::uint32_t f = m(r, col);
      if (f == 0) continue;
      eliminate(m, r, pivot_row, f);
      eliminate(t, r, pivot_row, f);
    }
    pivots_.push_back(col);
    ++pivot_row;
  }

  std::vector<bool> is_pivot(cols_, false);
  for (auto c : pivots_) is_pivot[c] = true;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    FieldVector k(cols_, p);
    k.set(free, 1);
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
      k.set(pivots_[i], -static_cast<std::int64_t>(m(i, free)));
    }
    kernel_.push_back(std::move(k));
  }
}

FieldVector LinearSystem::transform(const FieldVector& b) const {
  if (b.size() != rows_) throw std::invalid_argument("right-hand side length mismatch");
  if (b.modulus() != modulus_) throw std::invalid_argument("right-hand side modulus mismatch");
  std::vector<std::uint64_t> acc(rows_, 0);
  for (std::size_t k = 0; k < rows_; ++k) {
    std::uint32_t bk = b[k];
    if (bk == 0) continue;
    for (std::size_t i = 0; i < rows_; ++i) acc[i] += static_cast<std::uint64_t>(transform_(i, k)) * bk;
  }
  std::vector<std::uint32_t> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = static_cast<std::uint32_t>(acc[i] % modulus_);
  return {std::move(out), modulus_};
}

bool LinearSystem::in_column_space(const FieldVector& b) const {
  FieldVector tb = transform(b);
  for (std::size_t i = pivots_.size(); i < rows_; ++i)
    if (tb[i] != 0) return false;
  return true;
}

std::optional<FieldVector> LinearSystem::solve(const FieldVector& b) const {
  FieldVector tb = transform(b);
  for (std::size_t i = pivots_.size(); i < rows_; ++i)
    if (tb[i] != 0) return std::nullopt;
  FieldVector x(cols_, modulus_);
  for (std::size_t i = 0; i < pivots_.size(); ++i) x.set(pivots_[i], tb[i]);
  return x;
}

SolveResult linear_solve(const FieldMatrix& a, const FieldVector& b) {
  if (a.rows() != b.size()) throw std::invalid_argument("linear_solve: dimension mismatch");
  LinearSystem system(a);
  return {system.solve(b), system.kernel()};
}

// ---------------------------------------------------------------- counting

std::uint64_t to_index(const FieldVector& v) {
  std::uint64_t out = 0;
  for (auto x : v.entries()) out = out * v.modulus() + x;
  return out;
}

FieldVector from_index(std::uint64_t index, std::size_t size, std::uint32_t modulus) {
  std::vector<std::uint32_t> entries(size);
  for (std::size_t i = size; i-- > 0;) {
    entries[i] = static_cast<std::uint32_t>(index % modulus);
    index /= modulus;
  }
  return FieldVector(std::move(entries), modulus);
}

BigInt power(std::uint32_t base, unsigned exponent) {
  return boost::multiprecision::pow(BigInt(base), exponent);
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt out = 1;
  for (int i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;
  }
  return out;
}

BigInt gaussian_binomial(int m, std::uint32_t q, int r) {
  if (r < 0 || m < 0 || r > m) {
    throw std::invalid_argument("gaussian_binomial requires 0 <= r <= m");
  }
  // g(k) = |GL_k(q)| = prod_{i<k} (q^k - q^i)
  auto general_linear_order = [q](int k) {
    BigInt qk = power(q, static_cast<unsigned>(k));
    BigInt out = 1;
    for (int i = 0; i < k; ++i) out *= qk - power(q, static_cast<unsigned>(i));
    return out;
  };
  BigInt numerator = general_linear_order(m);
  BigInt denominator = general_linear_order(r) * general_linear_order(m - r) *
                       power(q, static_cast<unsigned>((m - r) * r));
  return numerator / denominator;
}

BigInt error_sphere_count(int n, std::uint32_t q, int d) {
  if (d < 0 || d > n) throw std::invalid_argument("error_sphere_count requires 0 <= d <= n");
  BigInt per_site = BigInt(q) * q - 1;
  BigInt out = 0;
  for (int i = 0; i <= d; ++i) out += binomial(n, i) * boost::multiprecision::pow(per_site, static_cast<unsigned>(i));
  return out;
}

void for_each_combination(std::size_t n, std::size_t k,
                          const std::function<bool(const std::vector<std::size_t>&)>& visit) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (!visit(idx)) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace nonstab::galois
