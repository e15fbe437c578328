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

#include <optional>
#include <vector>

#include "adiaforge/types.hpp"

namespace adiaforge {

/// Phase-fixed entries non-increasing and nonnegative within tol.
bool check_monotone(const Vector &v, double tol);
bool check_monotone(const RealVector &v, double tol);

struct Disc {
    double center = 0.0;
    double radius = 0.0;
};

struct DiscComponent {
    double lo = 0.0;
    double hi = 0.0;
    std::vector<int> discs;
    int eigenvalue_count = 0;
};

struct GerschgorinReport {
    std::vector<Disc> discs;
    std::vector<DiscComponent> components;  // ordered by lo
    RealVector eigenvalues;
    bool all_contained = true;  // every eigenvalue inside some disc
    bool counts_match = true;   // each component holds as many eigenvalues as discs
};

/// Discs of a Hermitian matrix (on the real line) and their connected
/// components.
GerschgorinReport gerschgorin(const Matrix &H);

struct LeakReport {
    double a = 0.0, b = 0.0;    // lowest two eigenvalues restricted to S
    double a_full = 0.0;        // a'
    double b_full = 0.0;        // b'
    double K = 0.0;             // ||H1||
    double J = 0.0;
    double shift = 0.0;         // K^2 / (J - 2K)
    double overlap = 0.0;       // |<xi|xi'>|^2
    double overlap_bound = 0.0;  // 1 - K^2 / ((b - a)(J - 2K))
    bool hypothesis = false;     // J > 2K
    bool lower_ok = false;       // a - shift <= a'
    bool upper_ok = false;       // a' <= a
    bool second_ok = false;      // b' >= b - shift
    bool overlap_ok = false;
    bool holds() const {
        return hypothesis && lower_ok && upper_ok && second_ok && overlap_ok;
    }
};

inline constexpr double kLemmaSlack = 1e-9;

/// H = H1 + H2 where H2 vanishes on span(S) and is >= J on its complement.
/// S has orthonormal columns.
LeakReport leak_certify(const Matrix &H1, const Matrix &H2, const Matrix &S, double J, double slack = kLemmaSlack);

/// Convenience form with H2 = J (I - S S^dag).
LeakReport leak_certify(const Matrix &H1, const Matrix &S, double J, double slack = kLemmaSlack);

struct AngleReport {
    double a1 = 0.0, a2 = 0.0;
    double gap1 = 0.0, gap2 = 0.0;  // ground-space-to-rest splittings
    double Lambda = 0.0;
    double theta = 0.0;  // minimal principal angle between ground spaces
    double bound = 0.0;  // a1 + a2 + 2 Lambda sin^2(theta / 2)
    double actual = 0.0;  // ground energy of H1 + H2
    int dim1 = 0, dim2 = 0;
    bool holds = false;
};

/// Ground spaces are eigenvalue clusters within kDegeneracyTol of the
/// minimum. Lambda defaults to min(gap1, gap2); a supplied value must not
/// exceed either splitting.
AngleReport angle_certify(const Matrix &H1, const Matrix &H2, std::optional<double> Lambda = std::nullopt);

}  // namespace adiaforge
