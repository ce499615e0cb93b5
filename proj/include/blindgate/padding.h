// Copyright 2026 The Blindgate Authors
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

#ifndef BLINDGATE_PADDING_H
#define BLINDGATE_PADDING_H

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include <Eigen/Dense>

#include "blindgate/linalg.h"
#include "blindgate/rng.h"
#include "blindgate/subspaces.h"

namespace blindgate {

/// Probability weights over Pauli rows, stored sparsely.
class PaddingSet {
  public:
    static constexpr size_t kMaxQubits = 6;

    PaddingSet(size_t n, std::map<uint64_t, double> weights);
    static PaddingSet point_mass(size_t n, uint64_t row = 0);
    static PaddingSet uniform(size_t n);

    size_t num_qubits() const { return n_; }
    const std::map<uint64_t, double> &weights() const { return weights_; }
    double weight(uint64_t row) const;

  private:
    size_t n_;
    std::map<uint64_t, double> weights_;
};

/// Weight 2^{-(2n-r)} on every element of B.
PaddingSet b_uniform_padding(const BasisB &b);

/// hat(alpha)_y = sum_x alpha_x (-1)^{c(x, y)}, indexed by the row y.
std::vector<double> walsh_transform(const PaddingSet &p);
/// Inverse of `walsh_transform`: alpha_x = 4^{-n} sum_y hat(alpha)_y (-1)^{c(x, y)}.
std::vector<double> inverse_walsh_transform(size_t n, const std::vector<double> &hat);

struct HidingRuleReport {
    bool pass = true;
    double max_violation = 0.0;
    std::vector<uint64_t> violations;
    std::vector<double> walsh;
};

/// Requires hat(alpha)_y = 0 (to 1e-10) for every y outside `pf`.
HidingRuleReport check_hiding_rule(const PaddingSet &p, const PauliSubspace &pf);

/// Computational states, (I +- P)/2^n for each non-identity P, then `haar_count` Haar pure states.
std::vector<Matrix> default_hiding_test_states(size_t n, Rng &rng, size_t haar_count = 32);

/// sum_x alpha_x P_x rho P_x.
Matrix pauli_channel(const PaddingSet &p, const Matrix &rho);

struct HidingPropertyReport {
    bool pass = true;
    double max_distance = 0.0;
    std::vector<double> distances;
};

/// Compares the padded outputs of rho and U rho U^dagger by trace distance (tolerance 1e-9).
HidingPropertyReport check_hiding_property(const PaddingSet &p0, const PaddingSet &p1, const Matrix &u,
                                           const std::vector<Matrix> &test_states);

/// All alpha satisfying normalisation and the hiding rule: particular + span(kernel columns).
/// Nonnegativity is reported for the particular solution only.
struct PaddingSolutionSpace {
    size_t n = 0;
    Eigen::VectorXd particular;
    Eigen::MatrixXd kernel;
    double residual = 0.0;
    bool particular_nonnegative = true;

    size_t dimension() const { return static_cast<size_t>(kernel.cols()); }
    /// Whether `p` satisfies the same equalities.
    bool contains(const PaddingSet &p, double tol = 1e-10) const;
};

PaddingSolutionSpace solve_valid_paddings(const PauliSubspace &pf);

}  // namespace blindgate

#endif
