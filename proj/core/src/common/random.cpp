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

#include "netshare/common/random.hpp"

#include <limits>
#include <stdexcept>

namespace netshare {

std::uint64_t DeterministicRng::below(std::uint64_t bound)
{
  if (bound == 0)
  {
    throw std::invalid_argument("DeterministicRng::below: zero bound");
  }
  // Reject the top partial bucket so every residue is equally likely.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  for (;;)
  {
    const std::uint64_t x = engine_();
    if (x < limit)
    {
      return x % bound;
    }
  }
}

std::int64_t DeterministicRng::between(std::int64_t lo, std::int64_t hi)
{
  if (hi < lo)
  {
    throw std::invalid_argument("DeterministicRng::between: empty range");
  }
  const auto span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
  if (span == std::numeric_limits<std::uint64_t>::max())
  {
    return static_cast<std::int64_t>(engine_());
  }
  return lo + static_cast<std::int64_t>(below(span + 1));
}

}  // namespace netshare
