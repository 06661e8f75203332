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

#include "rng.hpp"

#include <cmath>
#include <stdexcept>

namespace irsnoma
{

std::uint64_t splitmix64(std::uint64_t &state)
{
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t derive_seed(std::uint64_t root, std::initializer_list<std::uint64_t> path)
{
    std::uint64_t state = root;
    std::uint64_t out = splitmix64(state);
    for (std::uint64_t p : path)
    {
        state = out ^ (p + 0xD1B54A32D192ED03ULL);
        out = splitmix64(state);
    }
    return out;
}

RandomStream::RandomStream(std::uint64_t seed)
{
    // Expand the 64-bit seed into a full generator state.
    std::uint64_t state = seed;
    std::seed_seq seq{static_cast<std::uint32_t>(splitmix64(state)), static_cast<std::uint32_t>(splitmix64(state)),
                      static_cast<std::uint32_t>(splitmix64(state)), static_cast<std::uint32_t>(splitmix64(state)),
                      static_cast<std::uint32_t>(splitmix64(state)), static_cast<std::uint32_t>(splitmix64(state)),
                      static_cast<std::uint32_t>(splitmix64(state)), static_cast<std::uint32_t>(splitmix64(state))};
    gen_.seed(seq);
}

std::uint64_t RandomStream::next_u64()
{
    return gen_();
}

double RandomStream::uniform01()
{
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RandomStream::uniform(double a, double b)
{
    return a + uniform01() * (b - a);
}

std::uint64_t RandomStream::poisson(double mean)
{
    if (!(mean >= 0.0) || !std::isfinite(mean))
        throw std::invalid_argument("poisson: mean must be finite and non-negative");

    // Knuth's multiplicative method underflows for large means, so the mean
    // is split into chunks of at most 500 (exp(-500) is still a normal
    // double) and the partial counts are summed.
    std::uint64_t total = 0;
    double remaining = mean;
    while (remaining > 0.0)
    {
        const double chunk = remaining > 500.0 ? 500.0 : remaining;
        remaining -= chunk;
        const double limit = std::exp(-chunk);
        double product = uniform01();
        while (product >= limit)
        {
            ++total;
            product *= uniform01();
        }
    }
    return total;
}

} // namespace irsnoma
