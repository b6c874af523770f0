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

#include "netshare/contracts/types.hpp"
#include "netshare/network/topology.hpp"

#include <optional>
#include <set>

namespace netshare::network {

struct Path
{
  std::vector<DeviceId> devices;
  std::vector<LinkId>   links;
  Millis                latency{0};
  std::int64_t          cost{0};
  /// Set when a FraudRouter on the fastest path diverted the flow.
  std::optional<DeviceId> diverted_at;

  contracts::AgreedPath agreed() const { return {devices, links}; }

  bool operator==(const Path &) const = default;
};

enum class RouteMetric
{
  Latency,
  Cost,
};

/// Minimum-metric simple path; ties go to the lexicographically smallest
/// device-id sequence, then link-id sequence. Devices in `avoid` are never
/// entered.
std::optional<Path> shortest_path(const Topology &topology, const DeviceId &src,
                                  const DeviceId &dst, RouteMetric metric,
                                  const std::set<DeviceId> &avoid = {});

/// Path a FraudRouter at `devices[at]` of `honest` would choose: the honest
/// prefix up to it, then the cheapest continuation that does not revisit the
/// prefix. nullopt when no such continuation exists.
std::optional<Path> diverted_path(const Topology &topology, const Path &honest, std::size_t at);

/// Route actually taken. The fastest path, unless a device on it (other than
/// the destination) is a FraudRouter: then the first such device diverts the
/// flow onto the cheapest continuation. Throws Error(NoPath).
Path route(const Topology &topology, const DeviceId &src, const DeviceId &dst);

/// Fastest path, ignoring device behaviour. Throws Error(NoPath).
Path honest_route(const Topology &topology, const DeviceId &src, const DeviceId &dst);

/// Latency and cost of an explicit path. Throws Error(UnknownLink).
Path describe_path(const Topology &topology, const contracts::AgreedPath &path);

}  // namespace netshare::network
