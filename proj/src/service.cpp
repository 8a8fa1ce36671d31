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

#include "mmwrx/service.hpp"

#include "mmwrx/serialization.hpp"

// after Eigen: glibc's resolv.h defines a `_res` macro
#include <httplib.h>

namespace mmwrx {

struct Service::Impl
{
    httplib::Server server;
};

ApiResponse error_response(int status, const std::string &code, const std::string &field,
                           const std::string &message)
{
    nlohmann::ordered_json j;
    j["code"] = code;
    j["field"] = field;
    j["message"] = message;
    return {status, j.dump() + "\n"};
}

Service::Service(PresetCatalog catalog, ServiceOptions options)
    : catalog_(std::move(catalog)), options_(std::move(options)), impl_(std::make_unique<Impl>())
{
    auto reply = [](httplib::Response &res, const ApiResponse &r) {
        res.status = r.status;
        res.set_content(r.body, r.content_type);
    };
    auto &srv = impl_->server;
    // SO_REUSEADDR only: a port held by another server must fail to bind
    srv.set_socket_options([](socket_t sock) {
        int yes = 1;
        setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, reinterpret_cast<const char *>(&yes), sizeof(yes));
    });
    srv.set_default_headers({{"Access-Control-Allow-Origin", options_.cors_origin},
                             {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"},
                             {"Access-Control-Allow-Headers", "Content-Type"}});
    srv.Get("/api/v1/health", [this, reply](const httplib::Request &, httplib::Response &res) {
        reply(res, health());
    });
    srv.Get("/api/v1/presets", [this, reply](const httplib::Request &, httplib::Response &res) {
        reply(res, presets());
    });
    srv.Post("/api/v1/sweep", [this, reply](const httplib::Request &req, httplib::Response &res) {
        reply(res, sweep(req.body));
    });
    srv.Options(R"(/api/v1/.*)", [](const httplib::Request &, httplib::Response &res) { res.status = 204; });
}

Service::~Service()
{
    stop();
}

ApiResponse Service::health() const
{
    nlohmann::ordered_json j;
    j["status"] = "ok";
    j["schema"] = kSchemaVersion;
    return {200, dump_document(j)};
}

ApiResponse Service::presets() const
{
    return {200, dump_document(catalog_.to_json())};
}

ApiResponse Service::sweep(const std::string &body) const
{
    nlohmann::json doc;
    try
    {
        doc = nlohmann::json::parse(body);
    }
    catch (const nlohmann::json::parse_error &e)
    {
        return error_response(400, "parse_error", "", e.what());
    }

    RunConfig cfg;
    try
    {
        cfg = run_config_from_json(doc, catalog_);
    }
    catch (const ConfigError &e)
    {
        return error_response(400, "config_error", e.field(), e.message());
    }
    catch (const ValidationError &e)
    {
        return error_response(422, "validation_error", e.field(), e.message());
    }

    const std::size_t evaluations =
        static_cast<std::size_t>(cfg.scenario.n_trials) * cfg.scenario.grid_size();
    if (evaluations > options_.max_trial_evaluations)
        return error_response(413, "too_large", "scenario.n_trials",
                              std::to_string(evaluations) + " trial evaluations exceed the limit of " +
                                  std::to_string(options_.max_trial_evaluations));

    try
    {
        SweepOptions opts;
        opts.threads = options_.threads;
        const SweepResult result = mmwrx::sweep(cfg.scenario, cfg.components, opts);
        return {200, dump_document(sweep_document(result, cfg))};
    }
    catch (const ValidationError &e)
    {
        return error_response(422, "validation_error", e.field(), e.message());
    }
    catch (const std::exception &e)
    {
        return error_response(500, "internal_error", "", e.what());
    }
}

int Service::bind(const std::string &host, int port)
{
    if (port == 0)
        return impl_->server.bind_to_any_port(host);
    return impl_->server.bind_to_port(host, port) ? port : -1;
}

void Service::run()
{
    impl_->server.listen_after_bind();
}

void Service::stop()
{
    if (impl_)
        impl_->server.stop();
}

} // namespace mmwrx
