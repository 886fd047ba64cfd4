// Copyright 2026 The Hedonic Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hedonic/service.h"

#include "httplib.h"

namespace hedonic {

Service::Service(api::Options options)
    : options_(options), server_(std::make_unique<httplib::Server>()) {
  auto route = [this](const httplib::Request& req, httplib::Response& res) {
    api::Response reply = api::Handle(req.method, req.path, req.body, options_);
    res.status = reply.status;
    res.set_content(reply.body, "application/json");
  };
  server_->Get("/api/health", route);
  server_->Get("/api/examples", route);
  server_->Post("/api/evaluate", route);
  server_->Post("/api/certify", route);
  server_->Post("/api/blocking", route);
  server_->Post("/api/core", route);
  // Lets a browser-hosted editor on another origin call the API.
  server_->set_default_headers({{"Access-Control-Allow-Origin", "*"}});
  server_->Options(R"(/api/.*)", [](const httplib::Request&,
                                    httplib::Response& res) {
    res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
    res.set_header("Access-Control-Allow-Headers", "Content-Type");
    res.status = 204;
  });
}

Service::~Service() { Stop(); }

bool Service::Listen(const std::string& host, int port) {
  return server_->listen(host, port);
}

int Service::BindToAnyPort(const std::string& host) {
  return server_->bind_to_any_port(host);
}

bool Service::ListenAfterBind() { return server_->listen_after_bind(); }

void Service::Stop() {
  if (server_->is_running()) server_->stop();
}

void Service::WaitUntilReady() const { server_->wait_until_ready(); }

}  // namespace hedonic
