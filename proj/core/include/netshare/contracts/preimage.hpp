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

#include <optional>
#include <string>
#include <string_view>

namespace netshare::contracts {

/// The per-flow tuple a packet processor hashes. Only the digest goes on chain;
/// the preimage stays with the recording parties until disclosed for audit.
struct FlowPreimage
{
  PdlId        node_id;
  Ipv4         src_ip;
  Ipv4         dst_ip;
  std::int64_t timestamp_ms{0};

  /// "node_id|src_ip|dst_ip|timestamp_ms", dotted-quad, base-10, no spaces.
  std::string encode() const;
  Digest      digest() const;

  /// Inverse of encode(); nullopt unless `text` is exactly a canonical encoding.
  static std::optional<FlowPreimage> parse(std::string_view text);

  bool operator==(const FlowPreimage &) const = default;
};

/// Byte envelope observed for realistic preimage encodings.
inline constexpr std::size_t kPreimageMinBytes = 46;
inline constexpr std::size_t kPreimageMaxBytes = 56;

}  // namespace netshare::contracts
