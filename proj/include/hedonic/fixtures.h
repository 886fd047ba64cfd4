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

#ifndef HEDONIC_FIXTURES_H_
#define HEDONIC_FIXTURES_H_

#include <optional>
#include <span>
#include <string_view>

namespace hedonic {

// Game documents compiled in from fixtures/*.game.
struct Fixture {
  std::string_view name;
  std::string_view text;
};

// story (the kindergarten class: clique a,b,c,d plus a-e, truly altruistic),
// complete4 (K4, friend-oriented), empty5 (no edges, enemy-oriented).
std::span<const Fixture> BundledFixtures();
std::optional<std::string_view> FindFixture(std::string_view name);

}  // namespace hedonic

#endif  // HEDONIC_FIXTURES_H_
