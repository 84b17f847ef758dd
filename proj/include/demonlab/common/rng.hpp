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

#include <cstdint>
#include <random>

namespace demonlab {

/// Independent random streams derived from one user seed. Hamiltonian fields
/// and ansatz angles share a seed but never a stream.
enum class Stream : std::uint64_t {
    kHamiltonian = 0,
    kAnsatz = 1,
};

/// Portable seeded generator.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the C++
/// standard. Its seed is splitmix64(seed + 0x9E3779B97F4A7C15 * (stream + 1)).
/// Uniform reals are built by hand, not with std::uniform_real_distribution
/// (whose algorithm is implementation-defined):
///
///     u = (engine() >> 11) * 2^-53        in [0, 1)
///     uniform(lo, hi) = lo + (hi - lo) * u
///
/// so the same seed yields bit-identical draws on every conforming platform.
class Rng {
   public:
    Rng(std::uint64_t seed, Stream stream);

    double uniform01();
    double uniform(double lo, double hi);

   private:
    std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace demonlab
