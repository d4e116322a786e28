// Copyright 2026 The esdsim Authors
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

// Dense complex matrices for one and two qubits.
//
// Basis ordering is fixed everywhere: single qubit [+, -] with |+> the
// excited state, two qubits [++, +-, -+, --] with qubit A the leftmost
// Kronecker factor.

#include <array>
#include <complex>
#include <initializer_list>
#include <span>

#include "errors.hpp"

namespace esd {

using cplx = std::complex<double>;

enum class Qubit { kA, kB };

/// Square complex matrix of dimension 2 or 4, stored row-major in place.
class ComplexMat {
 public:
  ComplexMat() : ComplexMat(2) {}
  explicit ComplexMat(int dim);
  ComplexMat(int dim, std::initializer_list<cplx> row_major);

  static ComplexMat identity(int dim);
  static ComplexMat diagonal(std::initializer_list<cplx> diag);

  int dim() const noexcept { return dim_; }
  int size() const noexcept { return dim_ * dim_; }

  cplx& operator()(int row, int col) { return data_[row * dim_ + col]; }
  const cplx& operator()(int row, int col) const { return data_[row * dim_ + col]; }

  std::span<cplx> entries() noexcept { return {data_.data(), static_cast<size_t>(size())}; }
  std::span<const cplx> entries() const noexcept {
    return {data_.data(), static_cast<size_t>(size())};
  }

  bool all_finite() const noexcept;

  ComplexMat& operator+=(const ComplexMat& rhs);
  ComplexMat& operator-=(const ComplexMat& rhs);
  ComplexMat& operator*=(cplx scale) noexcept;

  friend ComplexMat operator+(ComplexMat lhs, const ComplexMat& rhs) { return lhs += rhs; }
  friend ComplexMat operator-(ComplexMat lhs, const ComplexMat& rhs) { return lhs -= rhs; }
  friend ComplexMat operator*(ComplexMat m, cplx s) noexcept { return m *= s; }
  friend ComplexMat operator*(cplx s, ComplexMat m) noexcept { return m *= s; }
  friend ComplexMat operator*(const ComplexMat& lhs, const ComplexMat& rhs);

 private:
  int dim_;
  std::array<cplx, 16> data_{};
};

ComplexMat kron(const ComplexMat& a, const ComplexMat& b);
ComplexMat dagger(const ComplexMat& a);
ComplexMat conjugate(const ComplexMat& a);
cplx trace(const ComplexMat& a);

/// Largest absolute entry of a - b.
double max_abs_diff(const ComplexMat& a, const ComplexMat& b);
double max_abs(const ComplexMat& a);

/// Real spectrum of up to four values.
struct Spectrum {
  std::array<double, 4> values{};
  int count = 0;

  double operator[](int i) const { return values[i]; }
  std::span<const double> view() const { return {values.data(), static_cast<size_t>(count)}; }
  double sum() const;
};

/// Ascending eigenvalues of a Hermitian matrix. Block-structured 4x4 inputs
/// (X shape: outer {0,3} and inner {1,2} blocks) take a closed-form path.
/// Throws InvalidArgument if the input deviates from hermiticity by more than 1e-10.
Spectrum hermitian_eigvals(const ComplexMat& a);

/// Spectrum of the (non-Hermitian) product rho * rho_tilde used by the
/// concurrence. Imaginary parts and small negatives are discarded; values
/// come back descending and nonnegative. Throws NumericalFailure when an
/// imaginary or negative part exceeds 1e-6.
std::array<double, 4> product_spectrum(const ComplexMat& a);

struct DensityTolerance {
  double hermitian = 1e-12;
  double trace = 1e-12;
  double positivity = 1e-10;
};

/// Validated quantum state over one or two qubits.
class DensityMatrix {
 public:
  /// Throws InvalidState naming the first violated invariant.
  static DensityMatrix validate(const ComplexMat& m, const DensityTolerance& tol = {});

  int n_qubits() const noexcept { return mat_.dim() == 2 ? 1 : 2; }
  int dim() const noexcept { return mat_.dim(); }
  const ComplexMat& mat() const noexcept { return mat_; }
  const cplx& operator()(int row, int col) const { return mat_(row, col); }

 private:
  explicit DensityMatrix(const ComplexMat& m) : mat_(m) {}
  ComplexMat mat_;
};

inline DensityMatrix validate_density(const ComplexMat& m, const DensityTolerance& tol = {}) {
  return DensityMatrix::validate(m, tol);
}

/// Reduced single-qubit state keeping `keep`. Input must be 4x4.
ComplexMat partial_trace(const ComplexMat& m, Qubit keep);

/// Pauli and ladder matrices in the [+, -] basis.
namespace pauli {
ComplexMat sigma_z();
ComplexMat sigma_y();
/// |-><+|, lowers the excited state.
ComplexMat sigma_minus();
/// |+><-|.
ComplexMat sigma_plus();
}  // namespace pauli

}  // namespace esd
