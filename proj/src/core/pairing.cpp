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

#include "pairing.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <unordered_set>

namespace irsnoma
{

namespace
{

constexpr double nan_value = std::numeric_limits<double>::quiet_NaN();

PairDecision singleton_decision(const User &user, double delta_rad, int group_index)
{
    PairDecision d;
    d.strong_id = user.id;
    d.mode = PairMode::oma;
    d.mins = MinRates{oma_rate(user.gamma_csi, delta_rad), 0.0};
    d.sinc_sq_ub = nan_value;
    d.gamma_strong = user.gamma_csi.value();
    d.gamma_weak = nan_value;
    d.group_index = group_index;
    return d;
}

PowerSplit policy_split(const AllocationPolicy &policy, CsiSinr gamma2, double delta_rad, const MinRates &mins)
{
    switch (policy.kind())
    {
    case PolicyKind::mpa:
        return mpa_split(gamma2, delta_rad, mins.r2_min);
    case PolicyKind::fpa:
        return fpa_split(mins);
    case PolicyKind::fixed:
        return PowerSplit(policy.fixed_alpha1());
    }
    throw std::logic_error("policy_split: unknown policy kind");
}

} // namespace

UserPopulation::UserPopulation(std::vector<User> users) : users_(std::move(users))
{
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(users_.size());
    for (const User &u : users_)
        if (!seen.insert(u.id).second)
            throw std::invalid_argument("UserPopulation: duplicate user id " + std::to_string(u.id));
}

UserPopulation sort_users(UserPopulation population)
{
    std::vector<User> users = population.users();
    std::sort(users.begin(), users.end(), [](const User &a, const User &b) {
        if (a.gamma_csi.value() != b.gamma_csi.value())
            return a.gamma_csi.value() > b.gamma_csi.value();
        return a.id < b.id;
    });
    return UserPopulation(std::move(users));
}

std::vector<PairDecision> aup(const UserPopulation &population, double delta_rad, const AllocationPolicy &policy)
{
    const UserPopulation sorted = sort_users(population);
    const std::vector<User> &users = sorted.users();
    const std::size_t g = users.size();

    std::vector<PairDecision> decisions;
    decisions.reserve(g);

    for (std::size_t i = 0; i < g / 2; ++i)
    {
        const User &strong = users[i];
        const User &weak = users[g - 1 - i];
        const MinRates mins{oma_rate(strong.gamma_csi, delta_rad), oma_rate(weak.gamma_csi, delta_rad)};
        const double ub = sinc_sq_delta_ub(strong.gamma_csi, weak.gamma_csi, mins);

        if (pair_feasible(delta_rad, ub))
        {
            const AlphaBounds bounds = alpha_bounds(strong.gamma_csi, weak.gamma_csi, delta_rad, mins);
            const ValidatedSplit vs =
                validate_split(policy_split(policy, weak.gamma_csi, delta_rad, mins), bounds);

            PairDecision d;
            d.strong_id = strong.id;
            d.weak_id = weak.id;
            d.mode = PairMode::noma;
            d.split = vs.split;
            d.split_clamped = vs.clamped;
            d.mins = mins;
            d.sinc_sq_ub = ub;
            d.gamma_strong = strong.gamma_csi.value();
            d.gamma_weak = weak.gamma_csi.value();
            d.group_index = static_cast<int>(i);
            decisions.push_back(d);
        }
        else
        {
            for (const User *member : {&strong, &weak})
            {
                PairDecision d = singleton_decision(*member, delta_rad, static_cast<int>(i));
                d.sinc_sq_ub = ub;
                decisions.push_back(d);
            }
        }
    }

    if (g % 2 == 1)
        decisions.push_back(singleton_decision(users[g / 2], delta_rad, static_cast<int>(g / 2)));

    return decisions;
}

std::vector<PairDecision> near_far_baseline(const UserPopulation &population, double delta_rad)
{
    const UserPopulation sorted = sort_users(population);
    const std::vector<User> &users = sorted.users();
    const std::size_t g = users.size();

    std::vector<PairDecision> decisions;
    decisions.reserve(g / 2 + 1);

    for (std::size_t i = 0; i < g / 2; ++i)
    {
        const User &strong = users[i];
        const User &weak = users[g - 1 - i];
        const MinRates mins{oma_rate(strong.gamma_csi, delta_rad), oma_rate(weak.gamma_csi, delta_rad)};

        PairDecision d;
        d.strong_id = strong.id;
        d.weak_id = weak.id;
        d.mode = PairMode::noma;
        d.split = PowerSplit(alpha1_lower(strong.gamma_csi, delta_rad, mins.r1_min));
        d.mins = mins;
        d.sinc_sq_ub = sinc_sq_delta_ub(strong.gamma_csi, weak.gamma_csi, mins);
        d.gamma_strong = strong.gamma_csi.value();
        d.gamma_weak = weak.gamma_csi.value();
        d.group_index = static_cast<int>(i);
        decisions.push_back(d);
    }

    if (g % 2 == 1)
        decisions.push_back(singleton_decision(users[g / 2], delta_rad, static_cast<int>(g / 2)));

    return decisions;
}

} // namespace irsnoma
