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

#ifndef IRSNOMA_CORE_PAIRING_HPP
#define IRSNOMA_CORE_PAIRING_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "allocation.hpp"

namespace irsnoma
{

struct User
{
    std::uint64_t id;
    CsiSinr gamma_csi;
};

/// A set of users with unique ids; sorting is descending by SINR with
/// ascending-id tie-break, so orderings are deterministic.
class UserPopulation
{
  public:
    explicit UserPopulation(std::vector<User> users);

    const std::vector<User> &users() const { return users_; }
    std::size_t size() const { return users_.size(); }

  private:
    std::vector<User> users_;
};

UserPopulation sort_users(UserPopulation population);

enum class PairMode
{
    noma,
    oma
};

/// One pairing outcome. For a NOMA pair both ids are present along with the
/// split; an infeasible group yields one OMA decision per member (weak_id
/// absent), and an odd population leaves the median user as a singleton OMA
/// decision. group_index identifies the near-far group a decision came from;
/// for a singleton it is floor(G/2). sinc_sq_ub is NaN for singletons.
struct PairDecision
{
    std::uint64_t strong_id{0};
    std::optional<std::uint64_t> weak_id;
    PairMode mode{PairMode::oma};
    std::optional<PowerSplit> split;
    bool split_clamped{false};
    MinRates mins;
    double sinc_sq_ub{0.0};
    double gamma_strong{0.0};
    double gamma_weak{0.0};
    int group_index{0};
};

/// Adaptive user pairing: sorts users, groups the i-th strongest with the
/// i-th weakest, sets each user's minimum rate to its own OMA rate at the
/// operating delta, and pairs a group only when the phase-imperfection
/// feasibility test passes; otherwise both members fall back to OMA. Feasible
/// pairs are split by the given policy, with the split clamped into the
/// feasible alpha1 range.
std::vector<PairDecision> aup(const UserPopulation &population, double delta_rad, const AllocationPolicy &policy);

/// Near-far baseline: same grouping and minimum rates but no feasibility
/// gate; every group becomes a NOMA pair with alpha1 at its lower bound.
std::vector<PairDecision> near_far_baseline(const UserPopulation &population, double delta_rad);

} // namespace irsnoma

#endif
