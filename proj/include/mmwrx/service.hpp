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

#include <cstddef>
#include <memory>
#include <string>

#include "mmwrx/presets.hpp"

namespace mmwrx {

struct ServiceOptions
{
    std::size_t max_trial_evaluations = 1'000'000; // n_trials x grid size per request
    unsigned threads = 0;
    std::string cors_origin = "*";
};

struct ApiResponse
{
    int status = 200;
    std::string body;
    std::string content_type = "application/json";
};

/// {"code": ..., "field": ..., "message": ...}
ApiResponse error_response(int status, const std::string &code, const std::string &field,
                           const std::string &message);

/// Stateless HTTP front end:
///   GET  /api/v1/health
///   GET  /api/v1/presets
///   POST /api/v1/sweep     body: {"scenario": ..., "components": ..., "chart": ...}
/// The handlers are callable directly; bind()/run() put them on a socket.
class Service
{
public:
    explicit Service(PresetCatalog catalog, ServiceOptions options = {});
    ~Service();
    Service(const Service &) = delete;
    Service &operator=(const Service &) = delete;

    ApiResponse health() const;
    ApiResponse presets() const;
    ApiResponse sweep(const std::string &body) const;

    /// Binds to host:port (port 0 picks a free port). Returns the bound port
    /// or -1 on failure.
    int bind(const std::string &host, int port);

    /// Serves until stop() is called. bind() must have succeeded.
    void run();
    void stop();

private:
    struct Impl;
    PresetCatalog catalog_;
    ServiceOptions options_;
    std::unique_ptr<Impl> impl_;
};

} // namespace mmwrx
