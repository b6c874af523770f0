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

#include "netshare/orchestration/network_log.hpp"

#include "netshare/common/error.hpp"

#include <algorithm>

namespace netshare::orchestration {
namespace {

bool uses_link(const Allocation &a, const LinkId &link)
{
  return std::find(a.path.links.begin(), a.path.links.end(), link) != a.path.links.end();
}

}  // namespace

void NetworkLog::commit(const Allocation &allocation)
{
  if (allocation.bandwidth <= 0 || allocation.end <= allocation.start)
  {
    throw Error(ErrorCode::InvalidParams, "allocation needs positive bandwidth and window");
  }
  if (!allocations_.emplace(allocation.request_id, allocation).second)
  {
    throw Error(ErrorCode::InvalidParams, "allocation already committed: " + allocation.request_id.str());
  }
}

void NetworkLog::release(const RequestId &request_id)
{
  allocations_.erase(request_id);
}

const Allocation *NetworkLog::find(const RequestId &request_id) const
{
  auto it = allocations_.find(request_id);
  return it == allocations_.end() ? nullptr : &it->second;
}

std::int64_t NetworkLog::link_load_at(const LinkId &link, SimTime t) const
{
  std::int64_t load = 0;
  for (const auto &[_, a] : allocations_)
  {
    if (a.start <= t && t < a.end && uses_link(a, link))
    {
      load += a.bandwidth;
    }
  }
  return load;
}

std::int64_t NetworkLog::device_load_at(const DeviceId &device, SimTime t) const
{
  std::int64_t load = 0;
  for (const auto &[_, a] : allocations_)
  {
    if (a.start <= t && t < a.end &&
        std::find(a.path.devices.begin(), a.path.devices.end(), device) != a.path.devices.end())
    {
      load += a.bandwidth;
    }
  }
  return load;
}

std::int64_t NetworkLog::peak_link_load(const LinkId &link, SimTime from, SimTime to) const
{
  // Sweep over window boundaries clipped to [from, to). At equal times the
  // release sorts first because windows are half-open.
  std::vector<std::pair<SimTime, std::int64_t>> edges;
  for (const auto &[_, a] : allocations_)
  {
    if (!uses_link(a, link) || a.end <= from || a.start >= to)
    {
      continue;
    }
    edges.emplace_back(std::max(a.start, from), a.bandwidth);
    if (a.end < to)
    {
      edges.emplace_back(a.end, -a.bandwidth);
    }
  }
  std::sort(edges.begin(), edges.end());
  std::int64_t load = 0;
  std::int64_t peak = 0;
  for (const auto &[_, delta] : edges)
  {
    load += delta;
    peak = std::max(peak, load);
  }
  return peak;
}

}  // namespace netshare::orchestration
