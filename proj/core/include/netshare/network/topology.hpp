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
#include "netshare/contracts/types.hpp"

#include <map>
#include <optional>
#include <string_view>
#include <vector>

namespace netshare::network {

enum class BehaviorKind
{
  Honest,
  DelayedTimestamp,  // records its timestamps `amount` late
  DropReceipt,       // never submits its record
  FraudRouter,       // routes flows over the cheapest path instead of the fastest
  SlowForward,       // holds packets for `amount` before forwarding
};

std::string_view               to_string(BehaviorKind kind) noexcept;
std::optional<BehaviorKind>    parse_behavior(std::string_view text) noexcept;

struct Behavior
{
  BehaviorKind kind{BehaviorKind::Honest};
  Millis       amount{0};

  bool operator==(const Behavior &) const = default;
};

struct Device
{
  DeviceId id;
  PdlId    pdl_id;  // assigned by the orchestration layer; stable across IP changes
  Ipv4     ip;
  PdlId    owner;
  PdlId    vendor;
  Behavior behavior;
  bool     tee_enabled{false};
};

struct Link
{
  LinkId       id;
  DeviceId     a;
  DeviceId     b;
  std::int64_t capacity{0};
  Millis       latency{0};
  std::int64_t cost{0};

  const DeviceId &other(const DeviceId &end) const noexcept { return end == a ? b : a; }
};

struct TopologySpec
{
  std::vector<Device> devices;
  std::vector<Link>   links;
};

/// Devices and undirected links of the shared infrastructure.
class Topology
{
public:
  Topology() = default;

  /// Throws Error(DuplicateDeviceId), Error(DanglingLink), or
  /// Error(InvalidParams) for a link with non-positive capacity or negative
  /// latency.
  static Topology build(TopologySpec spec);

  /// Rebuilds the routing view published on chain. Behaviours and addresses
  /// are not part of the manifest.
  static Topology from_manifest(const contracts::NetworkManifest &manifest);
  contracts::NetworkManifest manifest() const;

  bool          has_device(const DeviceId &id) const { return devices_.contains(id); }
  const Device &device(const DeviceId &id) const;
  Device       &device(const DeviceId &id);
  const Link   &link(const LinkId &id) const;
  bool          has_link(const LinkId &id) const { return links_.contains(id); }

  /// Device carrying `pdl_id`, if any.
  const Device *find_by_pdl(const PdlId &pdl_id) const;

  const std::map<DeviceId, Device> &devices() const noexcept { return devices_; }
  const std::map<LinkId, Link>     &links() const noexcept { return links_; }

  /// Links incident to `id`, ordered by link id.
  const std::vector<LinkId> &incident(const DeviceId &id) const;

  /// Connected components, each sorted, ordered by smallest member.
  std::vector<std::vector<DeviceId>> components() const;
  bool                               connected(const DeviceId &a, const DeviceId &b) const;

private:
  std::map<DeviceId, Device>              devices_;
  std::map<LinkId, Link>                  links_;
  std::map<DeviceId, std::vector<LinkId>> incident_;
};

}  // namespace netshare::network
