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

#include "qmat.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include <Eigen/Eigenvalues>

namespace esd {
namespace {

void require_dim(int dim) {
  if (dim != 2 && dim != 4) {
    throw InvalidArgument("matrix dimension must be 2 or 4, got " + std::to_string(dim));
  }
}

void require_same_dim(const ComplexMat& a, const ComplexMat& b, const char* op) {
  if (a.dim() != b.dim()) {
    throw InvalidArgument(std::string(op) + ": dimension mismatch (" + std::to_string(a.dim()) +
                          " vs " + std::to_string(b.dim()) + ")");
  }
}

double hermiticity_residual(const ComplexMat& a) {
  double worst = 0.0;
  for (int i = 0; i < a.dim(); ++i) {
    for (int j = i; j < a.dim(); ++j) {
      worst = std::max(worst, std::abs(a(i, j) - std::conj(a(j, i))));
    }
  }
  return worst;
}

// Eigenvalues of the Hermitian 2x2 [[p, q], [q*, r]], ascending.
std::array<double, 2> hermitian_2x2(double p, double r, cplx q) {
  const double mean = 0.5 * (p + r);
  const double radius = std::hypot(0.5 * (p - r), std::abs(q));
  return {mean - radius, mean + radius};
}

bool is_x_blocked(const ComplexMat& a) {
  // Nonzero entries allowed only on the diagonal and at (0,3), (3,0), (1,2), (2,1).
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      const bool allowed = i == j || i + j == 3;
      if (!allowed && a(i, j) != cplx{}) return false;
    }
  }
  return true;
}

using RowMajor4 = Eigen::Matrix<cplx, 4, 4, Eigen::RowMajor>;
using RowMajor2 = Eigen::Matrix<cplx, 2, 2, Eigen::RowMajor>;

}  // namespace

ComplexMat::ComplexMat(int dim) : dim_(dim) { require_dim(dim); }

ComplexMat::ComplexMat(int dim, std::initializer_list<cplx> row_major) : ComplexMat(dim) {
  if (static_cast<int>(row_major.size()) != dim * dim) {
    throw InvalidArgument("expected " + std::to_string(dim * dim) + " entries, got " +
                          std::to_string(row_major.size()));
  }
  std::copy(row_major.begin(), row_major.end(), data_.begin());
}

ComplexMat ComplexMat::identity(int dim) {
  ComplexMat m(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMat ComplexMat::diagonal(std::initializer_list<cplx> diag) {
  ComplexMat m(static_cast<int>(diag.size()));
  int i = 0;
  for (const cplx& v : diag) {
    m(i, i) = v;
    ++i;
  }
  return m;
}

bool ComplexMat::all_finite() const noexcept {
  return std::all_of(entries().begin(), entries().end(),
                     [](const cplx& v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); });
}

ComplexMat& ComplexMat::operator+=(const ComplexMat& rhs) {
  require_same_dim(*this, rhs, "add");
  for (int k = 0; k < size(); ++k) data_[k] += rhs.data_[k];
  return *this;
}

ComplexMat& ComplexMat::operator-=(const ComplexMat& rhs) {
  require_same_dim(*this, rhs, "subtract");
  for (int k = 0; k < size(); ++k) data_[k] -= rhs.data_[k];
  return *this;
}

ComplexMat& ComplexMat::operator*=(cplx scale) noexcept {
  for (int k = 0; k < size(); ++k) data_[k] *= scale;
  return *this;
}

ComplexMat operator*(const ComplexMat& lhs, const ComplexMat& rhs) {
  require_same_dim(lhs, rhs, "multiply");
  const int n = lhs.dim();
  ComplexMat out(n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const cplx l = lhs(i, k);
      if (l == cplx{}) continue;
      for (int j = 0; j < n; ++j) out(i, j) += l * rhs(k, j);
    }
  }
  return out;
}

ComplexMat kron(const ComplexMat& a, const ComplexMat& b) {
  if (a.dim() != 2 || b.dim() != 2) {
    throw InvalidArgument("kron: both factors must be 2x2");
  }
  ComplexMat out(4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) out(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return out;
}

ComplexMat dagger(const ComplexMat& a) {
  ComplexMat out(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) out(j, i) = std::conj(a(i, j));
  return out;
}

ComplexMat conjugate(const ComplexMat& a) {
  ComplexMat out(a.dim());
  for (int k = 0; k < a.size(); ++k) out.entries()[k] = std::conj(a.entries()[k]);
  return out;
}

cplx trace(const ComplexMat& a) {
  cplx sum{};
  for (int i = 0; i < a.dim(); ++i) sum += a(i, i);
  return sum;
}

double max_abs_diff(const ComplexMat& a, const ComplexMat& b) {
  require_same_dim(a, b, "max_abs_diff");
  double worst = 0.0;
  for (int k = 0; k < a.size(); ++k) worst = std::max(worst, std::abs(a.entries()[k] - b.entries()[k]));
  return worst;
}

double max_abs(const ComplexMat& a) {
  double worst = 0.0;
  for (const cplx& v : a.entries()) worst = std::max(worst, std::abs(v));
  return worst;
}

double Spectrum::sum() const {
  double s = 0.0;
  for (double v : view()) s += v;
  return s;
}

Spectrum hermitian_eigvals(const ComplexMat& a) {
  const double residual = hermiticity_residual(a);
  if (residual > 1e-10) {
    throw InvalidArgument("hermitian_eigvals: input not hermitian (residual " +
                          std::to_string(residual) + ")");
  }
  Spectrum out;
  out.count = a.dim();
  if (a.dim() == 2) {
    const auto ev = hermitian_2x2(a(0, 0).real(), a(1, 1).real(), a(0, 1));
    out.values = {ev[0], ev[1], 0.0, 0.0};
    return out;
  }
  if (is_x_blocked(a)) {
    const auto outer = hermitian_2x2(a(0, 0).real(), a(3, 3).real(), a(0, 3));
    const auto inner = hermitian_2x2(a(1, 1).real(), a(2, 2).real(), a(1, 2));
    out.values = {outer[0], outer[1], inner[0], inner[1]};
  } else {
    const Eigen::Map<const RowMajor4> m(a.entries().data());
    Eigen::SelfAdjointEigenSolver<RowMajor4> solver(m, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
      throw NumericalFailure("hermitian_eigvals: eigensolver did not converge");
    }
    for (int i = 0; i < 4; ++i) out.values[i] = solver.eigenvalues()(i);
  }
  std::sort(out.values.begin(), out.values.end());
  return out;
}

std::array<double, 4> product_spectrum(const ComplexMat& a) {
  if (a.dim() != 4) throw InvalidArgument("product_spectrum: input must be 4x4");
  constexpr double kFail = 1e-6;

  const Eigen::Map<const RowMajor4> m(a.entries().data());
  Eigen::ComplexEigenSolver<RowMajor4> solver(m, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) {
    throw NumericalFailure("product_spectrum: eigensolver did not converge");
  }
  std::array<double, 4> out{};
  for (int i = 0; i < 4; ++i) {
    const cplx ev = solver.eigenvalues()(i);
    if (std::abs(ev.imag()) > kFail) {
      throw NumericalFailure("product_spectrum: eigenvalue with imaginary part " +
                             std::to_string(ev.imag()));
    }
    if (ev.real() < -kFail) {
      throw NumericalFailure("product_spectrum: negative eigenvalue " + std::to_string(ev.real()));
    }
    // Roundoff residues (imaginary parts, negatives) below kFail are dropped.
    out[i] = std::max(ev.real(), 0.0);
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

DensityMatrix DensityMatrix::validate(const ComplexMat& m, const DensityTolerance& tol) {
  if (!m.all_finite()) throw InvalidArgument("density matrix has non-finite entries");
  const double herm = hermiticity_residual(m);
  if (herm > tol.hermitian) throw InvalidState(StateDefect::kNotHermitian, herm);
  const double trace_err = std::abs(trace(m) - 1.0);
  if (trace_err > tol.trace) throw InvalidState(StateDefect::kTraceMismatch, trace_err);
  const double min_eig = hermitian_eigvals(m)[0];
  if (min_eig < -tol.positivity) throw InvalidState(StateDefect::kNotPositive, -min_eig);
  return DensityMatrix(m);
}

ComplexMat partial_trace(const ComplexMat& m, Qubit keep) {
  if (m.dim() != 4) throw InvalidArgument("partial_trace: input must be 4x4");
  ComplexMat out(2);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) {
        out(i, j) += keep == Qubit::kA ? m(2 * i + k, 2 * j + k) : m(2 * k + i, 2 * k + j);
      }
    }
  }
  return out;
}

namespace pauli {
ComplexMat sigma_z() { return ComplexMat::diagonal({1.0, -1.0}); }
ComplexMat sigma_y() { return ComplexMat(2, {0.0, cplx{0.0, -1.0}, cplx{0.0, 1.0}, 0.0}); }
ComplexMat sigma_minus() { return ComplexMat(2, {0.0, 0.0, 1.0, 0.0}); }
ComplexMat sigma_plus() { return ComplexMat(2, {0.0, 1.0, 0.0, 0.0}); }
}  // namespace pauli

}  // namespace esd
