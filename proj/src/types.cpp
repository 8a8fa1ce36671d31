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

#include "mmwrx/types.hpp"

namespace mmwrx {

std::string_view to_string(Architecture arch)
{
    switch (arch)
    {
    case Architecture::AC:
        return "AC";
    case Architecture::HC:
        return "HC";
    case Architecture::DC:
        return "DC";
    }
    return "?";
}

Architecture architecture_from_string(std::string_view name)
{
    if (name == "AC")
        return Architecture::AC;
    if (name == "HC")
        return Architecture::HC;
    if (name == "DC")
        return Architecture::DC;
    throw std::invalid_argument("unknown architecture '" + std::string(name) + "'");
}

} // namespace mmwrx
