// Copyright 2026 The netshare Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <random>

namespace netshare {

/// Seeded generator whose output is identical on every platform.
///
/// std::mt19937_64 is fully specified by the standard, but the standard
/// distributions are not, so bounded draws are done here by rejection.
class DeterministicRng
{
public:
  explicit DeterministicRng(std::uint64_t seed)
    : engine_(seed)
  {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, bound). bound must be non-zero.
  std::uint64_t below(std::uint64_t bound);

  /// Uniform in [lo, hi], inclusive.
  std::int64_t between(std::int64_t lo, std::int64_t hi);

  bool chance(std::uint64_t numerator, std::uint64_t denominator)
  {
    return below(denominator) < numerator;
  }

private:
  std::mt19937_64 engine_;
};

}  // namespace netshare
