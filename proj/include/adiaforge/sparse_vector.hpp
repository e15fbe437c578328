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

#include <utility>
#include <vector>

#include "adiaforge/types.hpp"

namespace adiaforge {

/// A state on a (possibly huge) tensor-product space stored by its nonzero
/// amplitudes. Entries are kept sorted by index with no duplicates.
class SparseVector {
  public:
    using Entry = std::pair<BasisIndex, Complex>;

    SparseVector() = default;
    explicit SparseVector(BasisIndex dimension) : dim_(dimension) {
    }
    /// Sorts and merges duplicate indices, dropping exact zeros.
    SparseVector(BasisIndex dimension, std::vector<Entry> entries);

    static SparseVector from_dense(const Vector &v, double drop_below = 0.0);
    Vector to_dense() const;

    BasisIndex dimension() const {
        return dim_;
    }
    const std::vector<Entry> &entries() const {
        return entries_;
    }
    std::size_t nnz() const {
        return entries_.size();
    }

    double norm() const;
    Complex dot(const SparseVector &other) const;  // <this|other>
    void scale(Complex factor);
    /// this += factor * other
    void axpy(Complex factor, const SparseVector &other);

  private:
    BasisIndex dim_ = 0;
    std::vector<Entry> entries_;
};

}  // namespace adiaforge
