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

#include "netshare/common/types.hpp"

#include <array>
#include <cstdint>
#include <span>
#include <string_view>

namespace netshare::crypto {

/// FIPS 202 SHA3-256 (Keccak-f[1600], rate 1088 bits, domain suffix 0x06).
///
/// Incremental: feed any number of update() calls, then finish() once.
class Sha3_256
{
public:
  static constexpr std::size_t kRateBytes   = 136;
  static constexpr std::size_t kDigestBytes = 32;

  Sha3_256() = default;

  Sha3_256 &update(std::span<const std::uint8_t> data);
  Sha3_256 &update(std::string_view data);
  Digest    finish();

private:
  void absorb_block();

  std::array<std::uint64_t, 25> state_{};
  std::array<std::uint8_t, kRateBytes> buffer_{};
  std::size_t buffered_{0};
  bool        finished_{false};
};

Digest sha3_256(std::span<const std::uint8_t> data);
Digest sha3_256(std::string_view data);

/// The Keccak-f[1600] permutation over a 5x5 lane state.
void keccak_f1600(std::array<std::uint64_t, 25> &state) noexcept;

}  // namespace netshare::crypto
