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

#include <ostream>

namespace mmwrx {

// Exit codes of the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 1;  // unparsable arguments or config
inline constexpr int kExitInvalid = 2; // invalid scenario, unknown preset
inline constexpr int kExitIo = 3;      // unreadable/unwritable files, bind failure

/// Entry point of the `mmwrx` tool: `presets`, `sweep` and `serve`.
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace mmwrx
