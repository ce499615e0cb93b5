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

#include "blindgate/rng.h"

#include <cmath>
#include <numbers>

namespace blindgate {

uint64_t Rng::below(uint64_t bound) {
    if (bound <= 1) {
        return 0;
    }
    const uint64_t limit = max() - max() % bound;
    uint64_t v = next();
    while (v >= limit) {
        v = next();
    }
    return v % bound;
}

double Rng::gaussian() {
    double u1 = uniform();
    while (u1 <= 0.0) {
        u1 = uniform();
    }
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Vector haar_state(size_t dim, Rng &rng) {
    Vector v(dim);
    for (size_t i = 0; i < dim; i++) {
        v(i) = Complex(rng.gaussian(), rng.gaussian());
    }
    return v / v.norm();
}

Matrix haar_unitary(size_t dim, Rng &rng) {
    Matrix g(dim, dim);
    for (size_t c = 0; c < dim; c++) {
        for (size_t r = 0; r < dim; r++) {
            g(r, c) = Complex(rng.gaussian(), rng.gaussian());
        }
    }
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ();
    const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (size_t i = 0; i < dim; i++) {
        const Complex d = r(i, i);
        q.col(i) *= std::abs(d) > 0 ? d / std::abs(d) : Complex(1, 0);
    }
    return q;
}

}  // namespace blindgate
