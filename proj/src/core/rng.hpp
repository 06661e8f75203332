// irsnoma - IRS-assisted downlink NOMA simulator with imperfect phase compensation
// Copyright (C) 2026 the irsnoma authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef IRSNOMA_CORE_RNG_HPP
#define IRSNOMA_CORE_RNG_HPP

#include <cstdint>
#include <initializer_list>
#include <random>

namespace irsnoma
{

/// One SplitMix64 step; used both as a generator finalizer and a seed mixer.
std::uint64_t splitmix64(std::uint64_t &state);

/// Deterministically derives an independent substream seed from a root seed
/// and a path of indices (e.g. {drop, bs, group}). Streams derived from
/// distinct paths are statistically independent, which keeps parallel
/// evaluation order from affecting results.
std::uint64_t derive_seed(std::uint64_t root, std::initializer_list<std::uint64_t> path);

/// Seeded random stream. Floating-point draws are produced from raw 64-bit
/// outputs rather than std::uniform_real_distribution so that sequences are
/// identical across standard-library implementations.
class RandomStream
{
  public:
    explicit RandomStream(std::uint64_t seed);

    std::uint64_t next_u64();

    /// Uniform in [0, 1) with 53 random bits.
    double uniform01();

    /// Uniform in [a, b); returns exactly a when a == b.
    double uniform(double a, double b);

    /// Poisson draw by chunked inversion; exact for any practical mean.
    std::uint64_t poisson(double mean);

  private:
    std::mt19937_64 gen_;
};

} // namespace irsnoma

#endif
