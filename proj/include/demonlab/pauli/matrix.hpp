// Copyright 2026 The demonlab Authors
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

#include <Eigen/Dense>

#include "demonlab/pauli/pauli_string.hpp"
#include "demonlab/pauli/pauli_sum.hpp"

namespace demonlab::pauli {

inline constexpr int kMaxMatrixQubits = 12;

/// Dense 2^n x 2^n matrix. Qubit 0 is the least-significant bit of the
/// basis index, so X_0 at n = 2 is I (x) X in the usual Kronecker order.
Eigen::MatrixXcd pauli_to_matrix(const PauliString& p, int n);
Eigen::MatrixXcd pauli_to_matrix(const PauliSum& h, int n);

}  // namespace demonlab::pauli
