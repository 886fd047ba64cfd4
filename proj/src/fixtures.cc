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

#include "hedonic/fixtures.h"

#include "fixtures_data.h"

namespace hedonic {

std::span<const Fixture> BundledFixtures() {
  static constexpr Fixture kFixtures[] = {
      {"story", fixture_data::kStory},
      {"complete4", fixture_data::kComplete4},
      {"empty5", fixture_data::kEmpty5},
  };
  return kFixtures;
}

std::optional<std::string_view> FindFixture(std::string_view name) {
  for (const Fixture& f : BundledFixtures()) {
    if (f.name == name) return f.text;
  }
  return std::nullopt;
}

}  // namespace hedonic
