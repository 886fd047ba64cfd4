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

// Request handling shared by the command-line tool and the HTTP service.
// Both render results through the functions below, so their JSON output is
// identical for identical inputs.

#ifndef HEDONIC_API_H_
#define HEDONIC_API_H_

#include <chrono>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hedonic/documents.h"

namespace hedonic::api {

inline constexpr std::string_view kVersion = "1.0.0";

struct Options {
  // Wall-clock budget for one core computation.
  std::chrono::milliseconds core_budget{10000};
  int search_workers = 1;
};

Json Evaluate(const Game& game, const Partition& partition);
Json Certify(const Game& game, const Partition& partition,
             std::span<const StabilityNotion> notions,
             const Options& options = {});
Json Blocking(const Game& game, const Partition& partition,
              const Options& options = {});
// Throws CapExceeded above the partition cap and DeadlineExceeded past the
// budget.
Json Core(const Game& game, const Options& options = {});
Json Examples();
Json Health();

// Comma-separated notion names; empty means all. Throws InvalidInput.
std::vector<StabilityNotion> ParseNotionList(std::string_view list);

struct Response {
  int status = 200;
  std::string body;
};

// Serves one HTTP request: routing, body decoding and error mapping.
// Request bodies are {"game": <game document>, "partition": <partition
// document>, "notions": [...], "model": "<tag>"}; which fields are needed
// depends on the endpoint, "model" optionally overrides every player's model.
// Malformed requests get 400, semantic errors and exceeded caps or budgets
// 422 with {"error": ...}.
Response Handle(std::string_view method, std::string_view path,
                std::string_view body, const Options& options = {});

}  // namespace hedonic::api

#endif  // HEDONIC_API_H_
