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

#ifndef HEDONIC_SERVICE_H_
#define HEDONIC_SERVICE_H_

#include <memory>
#include <string>

#include "hedonic/api.h"

namespace httplib {
class Server;
}  // namespace httplib

namespace hedonic {

// Stateless HTTP front end for api::Handle. Every request carries its own
// game; concurrent requests share nothing.
class Service {
 public:
  explicit Service(api::Options options = {});
  ~Service();

  Service(const Service&) = delete;
  Service& operator=(const Service&) = delete;

  // Blocks until Stop. Returns false if the address cannot be bound.
  bool Listen(const std::string& host, int port);

  // Two-step start for tests: bind an ephemeral port, then serve (blocking)
  // from another thread. BindToAnyPort returns -1 on failure.
  int BindToAnyPort(const std::string& host);
  bool ListenAfterBind();

  void Stop();
  void WaitUntilReady() const;

 private:
  api::Options options_;
  std::unique_ptr<httplib::Server> server_;
};

}  // namespace hedonic

#endif  // HEDONIC_SERVICE_H_
