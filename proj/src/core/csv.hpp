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

#ifndef IRSNOMA_CORE_CSV_HPP
#define IRSNOMA_CORE_CSV_HPP

#include <string>

#include "netsim.hpp"

namespace irsnoma
{

/// Formats a value with 9 significant digits, the fixed precision of every
/// numeric CSV field.
std::string format_number(double value);

/// Writes cdf.csv, outage.csv, pairs.csv and summary.csv into out_dir
/// (created if missing). Output is a pure function of the result, so equal
/// campaigns produce byte-identical files.
void write_campaign_csvs(const CampaignResult &result, const std::string &out_dir);

} // namespace irsnoma

#endif
