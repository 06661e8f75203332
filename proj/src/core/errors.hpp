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

#ifndef IRSNOMA_CORE_ERRORS_HPP
#define IRSNOMA_CORE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace irsnoma
{

// A requested power allocation cannot satisfy the rate constraints.
class infeasible_error : public std::runtime_error
{
  public:
    explicit infeasible_error(const std::string &what) : std::runtime_error(what) {}
};

// Malformed input file; the message carries the file name and line number.
class parse_error : public std::runtime_error
{
  public:
    explicit parse_error(const std::string &what) : std::runtime_error(what) {}
};

// Filesystem failure; the message carries the file path.
class io_error : public std::runtime_error
{
  public:
    explicit io_error(const std::string &what) : std::runtime_error(what) {}
};

} // namespace irsnoma

#endif
