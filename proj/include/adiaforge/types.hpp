// Copyright 2026 The adiaforge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>
#include <Eigen/Sparse>

namespace adiaforge {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;
using RealMatrix = Eigen::MatrixXd;
using SparseMatrix = Eigen::SparseMatrix<Complex, Eigen::RowMajor, std::int64_t>;

/// Basis index into a tensor-product space. Particle 0 is the most
/// significant digit.
using BasisIndex = std::uint64_t;

/// Raised when an input violates a documented precondition or size guard.
/// The CLI maps this to exit code 1.
class ValidationError : public std::invalid_argument {
  public:
    explicit ValidationError(const std::string &what) : std::invalid_argument(what) {
    }
};

/// Raised when a numerical routine fails (non-convergence, norm drift,
/// violated Perron preconditions discovered during computation). Exit code 2.
class NumericalError : public std::runtime_error {
  public:
    explicit NumericalError(const std::string &what) : std::runtime_error(what) {
    }
};

/// Integer power d^k with overflow detection against 2^63.
BasisIndex checked_pow(std::uint64_t base, int exponent);

}  // namespace adiaforge
