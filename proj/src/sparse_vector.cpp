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

#include "adiaforge/sparse_vector.hpp"

#include <algorithm>
#include <cmath>

namespace adiaforge {

SparseVector::SparseVector(BasisIndex dimension, std::vector<Entry> entries)
    : dim_(dimension), entries_(std::move(entries)) {
    std::sort(entries_.begin(), entries_.end(),
              [](const Entry &a, const Entry &b) { return a.first < b.first; });
    std::vector<Entry> merged;
    merged.reserve(entries_.size());
    for (const auto &e : entries_) {
        if (e.first >= dim_) {
            throw ValidationError("SparseVector: index outside dimension");
        }
        if (!merged.empty() && merged.back().first == e.first) {
            merged.back().second += e.second;
        } else {
            merged.push_back(e);
        }
    }
    std::erase_if(merged, [](const Entry &e) { return e.second == Complex(0.0, 0.0); });
    entries_ = std::move(merged);
}

SparseVector SparseVector::from_dense(const Vector &v, double drop_below) {
    SparseVector out(static_cast<BasisIndex>(v.size()));
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (std::abs(v[i]) > drop_below) {
            out.entries_.emplace_back(static_cast<BasisIndex>(i), v[i]);
        }
    }
    return out;
}

Vector SparseVector::to_dense() const {
    if (dim_ > (BasisIndex{1} << 28)) {
        throw ValidationError("SparseVector::to_dense: dimension exceeds the dense vector cap 2^28");
    }
    Vector v = Vector::Zero(static_cast<Eigen::Index>(dim_));
    for (const auto &[i, a] : entries_) v[static_cast<Eigen::Index>(i)] = a;
    return v;
}

double SparseVector::norm() const {
    double acc = 0.0;
    for (const auto &e : entries_) acc += std::norm(e.second);
    return std::sqrt(acc);
}

Complex SparseVector::dot(const SparseVector &other) const {
    Complex acc = 0.0;
    auto a = entries_.begin();
    auto b = other.entries_.begin();
    while (a != entries_.end() && b != other.entries_.end()) {
        if (a->first < b->first) {
            ++a;
        } else if (b->first < a->first) {
            ++b;
        } else {
            acc += std::conj(a->second) * b->second;
            ++a;
            ++b;
        }
    }
    return acc;
}

void SparseVector::scale(Complex factor) {
    for (auto &e : entries_) e.second *= factor;
}

void SparseVector::axpy(Complex factor, const SparseVector &other) {
    std::vector<Entry> out;
    out.reserve(entries_.size() + other.entries_.size());
    auto a = entries_.begin();
    auto b = other.entries_.begin();
    while (a != entries_.end() || b != other.entries_.end()) {
        if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
            out.push_back(*a++);
        } else if (a == entries_.end() || b->first < a->first) {
            out.emplace_back(b->first, factor * b->second);
            ++b;
        } else {
            out.emplace_back(a->first, a->second + factor * b->second);
            ++a;
            ++b;
        }
    }
    entries_ = std::move(out);
}

}  // namespace adiaforge
