// SPDX-License-Identifier: Apache-2.0
//
// mmwrx - mmWave receiver architecture trade-off simulator
// Copyright (C) 2026 The mmwrx authors
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

#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>

#include <Eigen/Dense>

namespace mmwrx {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

enum class Architecture { AC, HC, DC };

std::string_view to_string(Architecture arch);

// Throws std::invalid_argument for anything other than "AC", "HC" or "DC".
Architecture architecture_from_string(std::string_view name);

// Raised when a channel (or equivalent channel) carries no energy.
class RankZeroError : public std::runtime_error
{
public:
    RankZeroError() : std::runtime_error("rank-zero channel") {}
};

// Invalid input, tagged with the dotted path of the offending field
// (e.g. "scenario.nrf_set[2]"). The path is empty for positional arguments.
class ValidationError : public std::invalid_argument
{
public:
    ValidationError(std::string field, const std::string &message)
        : std::invalid_argument(field.empty() ? message : field + ": " + message),
          field_(std::move(field)), message_(message)
    {
    }

    const std::string &field() const noexcept { return field_; }
    const std::string &message() const noexcept { return message_; }

private:
    std::string field_;
    std::string message_;
};

} // namespace mmwrx
