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

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace nonstab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

namespace galois {

bool is_prime(std::uint32_t p);

// Throws std::invalid_argument unless p is prime.
void require_prime(std::uint32_t p);

std::uint32_t inverse_mod(std::uint32_t value, std::uint32_t p);

// Element of GF(p). Value is always reduced.
class FieldScalar {
 public:
  FieldScalar(std::int64_t value, std::uint32_t modulus);

  std::uint32_t value() const { return value_; }
  std::uint32_t modulus() const { return modulus_; }

  FieldScalar operator+(const FieldScalar& other) const;
  FieldScalar operator-(const FieldScalar& other) const;
  FieldScalar operator*(const FieldScalar& other) const;
  FieldScalar operator-() const;
  FieldScalar inverse() const;

  bool operator==(const FieldScalar& other) const = default;

 private:
  std::uint32_t value_;
  std::uint32_t modulus_;
};

class FieldVector {
 public:
  FieldVector() = default;
  FieldVector(std::size_t size, std::uint32_t modulus);
  FieldVector(std::vector<std::uint32_t> entries, std::uint32_t modulus);
  FieldVector(std::initializer_list<std::int64_t> entries, std::uint32_t modulus);

  static FieldVector from_signed(const std::vector<std::int64_t>& entries,
                                 std::uint32_t modulus);
  static FieldVector unit(std::size_t size, std::size_t index,
                          std::uint32_t modulus);

  std::size_t size() const { return entries_.size(); }
  std::uint32_t modulus() const { return modulus_; }
  std::uint32_t operator[](std::size_t i) const { return entries_[i]; }
  void set(std::size_t i, std::int64_t value);
  const std::vector<std::uint32_t>& entries() const { return entries_; }

  FieldVector operator+(const FieldVector& other) const;
  FieldVector operator-(const FieldVector& other) const;
  FieldVector operator-() const;
  FieldVector scaled(std::uint32_t factor) const;
  FieldVector& operator+=(const FieldVector& other);
  // Adds factor * other in place.
  void axpy(std::uint32_t factor, const FieldVector& other);

  std::uint32_t dot(const FieldVector& other) const;
  std::size_t weight() const;
  bool is_zero() const;

  bool operator==(const FieldVector& other) const = default;
  auto operator<=>(const FieldVector& other) const = default;

  std::string to_string() const;

 private:
  void check_compatible(const FieldVector& other) const;

  std::uint32_t modulus_ = 2;
  std::vector<std::uint32_t> entries_;
};

std::ostream& operator<<(std::ostream& os, const FieldVector& v);

struct FieldVectorHash {
  std::size_t operator()(const FieldVector& v) const noexcept;
};

class FieldMatrix {
 public:
  FieldMatrix() = default;
  FieldMatrix(std::size_t rows, std::size_t cols, std::uint32_t modulus);
  FieldMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows,
              std::uint32_t modulus);
  static FieldMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows,
                               std::size_t cols, std::uint32_t modulus);
  static FieldMatrix identity(std::size_t size, std::uint32_t modulus);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint32_t modulus() const { return modulus_; }

  std::uint32_t operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  void set(std::size_t r, std::size_t c, std::int64_t value);

  FieldVector row(std::size_t r) const;
  FieldVector column(std::size_t c) const;

  FieldMatrix transpose() const;
  FieldMatrix operator*(const FieldMatrix& other) const;
  FieldVector operator*(const FieldVector& v) const;
  FieldMatrix operator+(const FieldMatrix& other) const;
  bool operator==(const FieldMatrix& other) const = default;

  // Rows of `bottom` appended below this matrix.
  FieldMatrix stacked(const FieldMatrix& bottom) const;
  // Columns of `right` appended to the right.
  FieldMatrix joined(const FieldMatrix& right) const;

  bool is_symmetric() const;
  std::size_t rank() const;

  std::vector<std::vector<std::int64_t>> to_rows() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::uint32_t modulus_ = 2;
  std::vector<std::uint32_t> data_;
};

struct SolveResult {
  std::optional<FieldVector> particular;
  std::vector<FieldVector> kernel;
};

// Solves A x = b. Pivoting picks the first row with a nonzero entry in the
// pivot column so kernel bases are reproducible.
SolveResult linear_solve(const FieldMatrix& a, const FieldVector& b);

// Row-reduction of A kept around so that many right-hand sides can be solved
// against the same matrix.
class LinearSystem {
 public:
  explicit LinearSystem(const FieldMatrix& a);

  std::size_t rank() const { return pivots_.size(); }
  const std::vector<std::size_t>& pivot_columns() const { return pivots_; }
  const std::vector<FieldVector>& kernel() const { return kernel_; }

  std::optional<FieldVector> solve(const FieldVector& b) const;
  bool in_column_space(const FieldVector& b) const;

 private:
  FieldVector transform(const FieldVector& b) const;

  std::size_t rows_;
  std::size_t cols_;
  std::uint32_t modulus_;
  FieldMatrix reduced_;     // reduced row echelon form of A
  FieldMatrix transform_;   // T with T * A = reduced_
  std::vector<std::size_t> pivots_;
  std::vector<FieldVector> kernel_;
};

// Number of r-dimensional subspaces of GF(q)^m.
BigInt gaussian_binomial(int m, std::uint32_t q, int r);

// sum_{i=0}^{d} C(n,i) (q^2 - 1)^i : Weyl errors of weight at most d.
BigInt error_sphere_count(int n, std::uint32_t q, int d);

BigInt binomial(int n, int k);

// Big-endian base-q index of a vector (entry 0 is the most significant digit).
std::uint64_t to_index(const FieldVector& v);
FieldVector from_index(std::uint64_t index, std::size_t size, std::uint32_t modulus);
BigInt power(std::uint32_t base, unsigned exponent);

// Calls visit(index_set) for every k-subset of {0..n-1} in lexicographic order.
// Stops early when visit returns false.
void for_each_combination(std::size_t n, std::size_t k,
                          const std::function<bool(const std::vector<std::size_t>&)>& visit);

}  // namespace galois
}  // namespace nonstab
