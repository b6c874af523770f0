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

#include "netshare/network/topology.hpp"

#include "netshare/common/error.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <set>

namespace netshare::network {
namespace {

constexpr std::array<std::pair<BehaviorKind, std::string_view>, 5> kBehaviorNames = {{
    {BehaviorKind::Honest, "Honest"},
    {BehaviorKind::DelayedTimestamp, "DelayedTimestamp"},
    {BehaviorKind::DropReceipt, "DropReceipt"},
    {BehaviorKind::FraudRouter, "FraudRouter"},
    {BehaviorKind::SlowForward, "SlowForward"},
}};

const std::vector<LinkId> kNoLinks;

}  // namespace

std::string_view to_string(BehaviorKind kind) noexcept
{
  for (const auto &[k, name] : kBehaviorNames)
  {
    if (k == kind)
    {
      return name;
    }
  }
  return "?";
}

std::optional<BehaviorKind> parse_behavior(std::string_view text) noexcept
{
  for (const auto &[k, name] : kBehaviorNames)
  {
    if (name == text)
    {
      return k;
    }
  }
  return std::nullopt;
}

Topology Topology::build(TopologySpec spec)
{
  Topology t;
  for (auto &d : spec.devices)
  {
    if (d.id.empty())
    {
      throw Error(ErrorCode::InvalidParams, "device with empty id");
    }
    if (t.devices_.contains(d.id))
    {
      throw Error(ErrorCode::DuplicateDeviceId, d.id.str());
    }
    auto id = d.id;
    t.devices_.emplace(id, std::move(d));
    t.incident_[id];
  }
  for (auto &l : spec.links)
  {
    if (!t.devices_.contains(l.a) || !t.devices_.contains(l.b))
    {
      throw Error(ErrorCode::DanglingLink,
                  l.id.str() + " references " + (t.devices_.contains(l.a) ? l.b : l.a).str());
    }
    if (l.a == l.b)
    {
      throw Error(ErrorCode::InvalidParams, l.id.str() + " is a self-loop");
    }
    if (l.capacity <= 0 || l.latency < Millis{0} || l.cost < 0)
    {
      throw Error(ErrorCode::InvalidParams,
                  l.id.str() + " needs capacity > 0, latency >= 0 and cost >= 0");
    }
    if (t.links_.contains(l.id))
    {
      throw Error(ErrorCode::InvalidParams, "duplicate link id " + l.id.str());
    }
    t.incident_[l.a].push_back(l.id);
    t.incident_[l.b].push_back(l.id);
    auto id = l.id;
    t.links_.emplace(id, std::move(l));
  }
  for (auto &[_, ids] : t.incident_)
  {
    std::sort(ids.begin(), ids.end());
  }
  return t;
}

Topology Topology::from_manifest(const contracts::NetworkManifest &manifest)
{
  TopologySpec spec;
  for (const auto &d : manifest.devices)
  {
    Device dev;
    dev.id     = d.label;
    dev.pdl_id = d.pdl_id;
    dev.owner  = d.owner;
    dev.vendor = d.vendor;
    spec.devices.push_back(std::move(dev));
  }
  for (const auto &l : manifest.links)
  {
    spec.links.push_back(Link{l.id, l.a, l.b, l.capacity, l.latency, l.cost});
  }
  return build(std::move(spec));
}

contracts::NetworkManifest Topology::manifest() const
{
  contracts::NetworkManifest m;
  for (const auto &[id, d] : devices_)
  {
    m.devices.push_back({id, d.pdl_id, d.owner, d.vendor});
  }
  for (const auto &[id, l] : links_)
  {
    m.links.push_back({id, l.a, l.b, l.capacity, l.latency, l.cost});
  }
  return m;
}

const Device &Topology::device(const DeviceId &id) const
{
  auto it = devices_.find(id);
  if (it == devices_.end())
  {
    throw Error(ErrorCode::UnknownDevice, id.str());
  }
  return it->second;
}

Device &Topology::device(const DeviceId &id)
{
  auto it = devices_.find(id);
  if (it == devices_.end())
  {
    throw Error(ErrorCode::UnknownDevice, id.str());
  }
  return it->second;
}

const Link &Topology::link(const LinkId &id) const
{
  auto it = links_.find(id);
  if (it == links_.end())
  {
    throw Error(ErrorCode::UnknownLink, id.str());
  }
  return it->second;
}

const Device *Topology::find_by_pdl(const PdlId &pdl_id) const
{
  if (pdl_id.empty())
  {
    return nullptr;
  }
  for (const auto &[_, d] : devices_)
  {
    if (d.pdl_id == pdl_id)
    {
      return &d;
    }
  }
  return nullptr;
}

const std::vector<LinkId> &Topology::incident(const DeviceId &id) const
{
  auto it = incident_.find(id);
  return it == incident_.end() ? kNoLinks : it->second;
}

std::vector<std::vector<DeviceId>> Topology::components() const
{
  std::vector<std::vector<DeviceId>> out;
  std::set<DeviceId>                 seen;
  for (const auto &[start, _] : devices_)
  {
    if (seen.contains(start))
    {
      continue;
    }
    std::vector<DeviceId> comp;
    std::deque<DeviceId>  queue{start};
    seen.insert(start);
    while (!queue.empty())
    {
      auto u = queue.front();
      queue.pop_front();
      comp.push_back(u);
      for (const auto &lid : incident(u))
      {
        const auto &v = links_.at(lid).other(u);
        if (seen.insert(v).second)
        {
          queue.push_back(v);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool Topology::connected(const DeviceId &a, const DeviceId &b) const
{
  for (const auto &comp : components())
  {
    if (std::binary_search(comp.begin(), comp.end(), a))
    {
      return std::binary_search(comp.begin(), comp.end(), b);
    }
  }
  return false;
}

}  // namespace netshare::network
