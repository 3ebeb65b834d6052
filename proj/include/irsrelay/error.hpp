// SPDX-License-Identifier: Apache-2.0
//
// irsrelay - link-level simulator for IRS-aided multi-antenna relay networks
// Copyright (C) 2026 The irsrelay authors
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

#ifndef IRSRELAY_ERROR_HPP
#define IRSRELAY_ERROR_HPP

#include <stdexcept>
#include <string>

namespace irsrelay {

// Invalid scenario or argument combination (bad sizes, M not dividing N, unknown key, ...).
// The command line tool maps this family to exit code 1.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A valid configuration that a particular method cannot handle (e.g. NSP with one antenna).
class UnsupportedConfiguration : public ConfigError {
public:
    using ConfigError::ConfigError;
};

// Argument outside the mathematical domain of a formula (non-positive distance, noise, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Numerical failures during optimization. Exit code 2 in the command line tool.
class DegenerateChannelError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A null-space projector annihilated the vector it was supposed to keep.
class ProjectorDegenerateError : public DegenerateChannelError {
public:
    using DegenerateChannelError::DegenerateChannelError;
};

// Output destination could not be written.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline void require_config(bool ok, const std::string& what)
{
    if (!ok)
        throw ConfigError(what);
}

inline void require_domain(bool ok, const std::string& what)
{
    if (!ok)
        throw DomainError(what);
}

} // namespace detail
} // namespace irsrelay

#endif
