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

#include <array>
#include <chrono>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace netshare {

using Bytes  = std::vector<std::uint8_t>;
using Digest = std::array<std::uint8_t, 32>;

/// Simulated time since the start of a run. Microsecond resolution is enough
/// to carry sub-millisecond processing overheads.
using SimTime     = std::chrono::microseconds;
using SimDuration = std::chrono::microseconds;
using Millis      = std::chrono::milliseconds;
using Seconds     = std::chrono::seconds;

inline constexpr Digest kZeroDigest{};

/// String-backed identifier that does not implicitly convert to or from other
/// identifier kinds.
template <class Tag>
class StrongString
{
public:
  StrongString() = default;
  explicit StrongString(std::string value)
    : value_(std::move(value))
  {}

  const std::string &str() const noexcept { return value_; }
  bool               empty() const noexcept { return value_.empty(); }

  auto operator<=>(const StrongString &) const = default;

private:
  std::string value_;
};

using PdlId     = StrongString<struct PdlIdTag>;
using DeviceId  = StrongString<struct DeviceIdTag>;
using LinkId    = StrongString<struct LinkIdTag>;
using FlowId    = StrongString<struct FlowIdTag>;
using RequestId = StrongString<struct RequestIdTag>;

/// Address of a deployed contract: a digest of (deployer, nonce, kind).
struct ContractAddress
{
  Digest bytes{};

  bool        is_zero() const noexcept { return bytes == kZeroDigest; }
  std::string hex() const;
  static std::optional<ContractAddress> from_hex(std::string_view text);

  auto operator<=>(const ContractAddress &) const = default;
};

class Ipv4
{
public:
  constexpr Ipv4() = default;
  constexpr explicit Ipv4(std::uint32_t value)
    : value_(value)
  {}

  /// Strict dotted-quad parse: four decimal octets, no leading zeros, no
  /// surrounding whitespace.
  static std::optional<Ipv4> parse(std::string_view text);

  constexpr std::uint32_t value() const noexcept { return value_; }
  std::string             str() const;

  auto operator<=>(const Ipv4 &) const = default;

private:
  std::uint32_t value_{0};
};

}  // namespace netshare

template <class Tag>
struct std::hash<netshare::StrongString<Tag>>
{
  std::size_t operator()(const netshare::StrongString<Tag> &id) const noexcept
  {
    return std::hash<std::string>{}(id.str());
  }
};
