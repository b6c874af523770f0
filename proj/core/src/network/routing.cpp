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

#include "netshare/network/routing.hpp"

#include "netshare/common/error.hpp"

#include <deque>
#include <limits>
#include <map>
#include <queue>

namespace netshare::network {
namespace {

std::int64_t weight(const Link &l, RouteMetric metric)
{
  return metric == RouteMetric::Latency ? l.latency.count() : l.cost;
}

// Distance from every device to `dst`, never entering `avoid`.
std::map<DeviceId, std::int64_t> distances_to(const Topology &t, const DeviceId &dst,
                                              RouteMetric metric, const std::set<DeviceId> &avoid)
{
  std::map<DeviceId, std::int64_t> dist;
  using Item = std::pair<std::int64_t, DeviceId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  dist[dst] = 0;
  pq.emplace(0, dst);
  while (!pq.empty())
  {
    auto [d, u] = pq.top();
    pq.pop();
    if (d != dist[u])
    {
      continue;
    }
    for (const auto &lid : t.incident(u))
    {
      const auto &l = t.link(lid);
      const auto &v = l.other(u);
      if (avoid.contains(v))
      {
        continue;
      }
      const auto nd = d + weight(l, metric);
      auto       it = dist.find(v);
      if (it == dist.end() || nd < it->second)
      {
        dist[v] = nd;
        pq.emplace(nd, v);
      }
    }
  }
  return dist;
}

}  // namespace

// Standard Dijkstra gives the optimum; the tie-break is then resolved greedily
// over the tight-edge subgraph, where every route to dst is optimal. A
// reachability check keeps the greedy choice extendable to a simple path even
// across zero-weight links.
std::optional<Path> shortest_path(const Topology &t, const DeviceId &src, const DeviceId &dst,
                                  RouteMetric metric, const std::set<DeviceId> &avoid)
{
  t.device(src);
  t.device(dst);
  if (avoid.contains(src) || avoid.contains(dst))
  {
    return std::nullopt;
  }
  const auto dist = distances_to(t, dst, metric, avoid);
  if (!dist.contains(src))
  {
    return std::nullopt;
  }

  auto tight = [&](const DeviceId &u, const Link &l) {
    const auto &v  = l.other(u);
    auto        it = dist.find(v);
    return !avoid.contains(v) && it != dist.end() && dist.at(u) == weight(l, metric) + it->second;
  };

  std::set<DeviceId> visited{src};
  auto reaches_dst = [&](const DeviceId &from) {
    if (from == dst)
    {
      return true;
    }
    std::set<DeviceId>   seen{from};
    std::deque<DeviceId> queue{from};
    while (!queue.empty())
    {
      auto u = queue.front();
      queue.pop_front();
      for (const auto &lid : t.incident(u))
      {
        const auto &l = t.link(lid);
        const auto &v = l.other(u);
        if (!tight(u, l) || visited.contains(v) || !seen.insert(v).second)
        {
          continue;
        }
        if (v == dst)
        {
          return true;
        }
        queue.push_back(v);
      }
    }
    return false;
  };

  Path path;
  path.devices.push_back(src);
  DeviceId u = src;
  while (u != dst)
  {
    const Link *best = nullptr;
    for (const auto &lid : t.incident(u))
    {
      const auto &l = t.link(lid);
      const auto &v = l.other(u);
      if (!tight(u, l) || visited.contains(v))
      {
        continue;
      }
      if (best != nullptr && !(v < best->other(u)))
      {
        continue;  // incident() is sorted by link id, so the first link to v wins
      }
      visited.insert(v);
      const bool ok = reaches_dst(v);
      visited.erase(v);
      if (ok)
      {
        best = &l;
      }
    }
    if (best == nullptr)
    {
      return std::nullopt;  // unreachable: dist[src] was finite
    }
    const auto &v = best->other(u);
    visited.insert(v);
    path.devices.push_back(v);
    path.links.push_back(best->id);
    path.latency += best->latency;
    path.cost += best->cost;
    u = v;
  }
  return path;
}

std::optional<Path> diverted_path(const Topology &t, const Path &honest, std::size_t at)
{
  if (at + 1 >= honest.devices.size())
  {
    return std::nullopt;
  }
  std::set<DeviceId> avoid(honest.devices.begin(), honest.devices.begin() + static_cast<std::ptrdiff_t>(at));
  auto tail = shortest_path(t, honest.devices[at], honest.devices.back(), RouteMetric::Cost, avoid);
  if (!tail)
  {
    return std::nullopt;
  }
  Path p;
  p.devices.assign(honest.devices.begin(), honest.devices.begin() + static_cast<std::ptrdiff_t>(at));
  p.links.assign(honest.links.begin(), honest.links.begin() + static_cast<std::ptrdiff_t>(at));
  p.devices.insert(p.devices.end(), tail->devices.begin(), tail->devices.end());
  p.links.insert(p.links.end(), tail->links.begin(), tail->links.end());
  for (const auto &lid : p.links)
  {
    p.latency += t.link(lid).latency;
    p.cost += t.link(lid).cost;
  }
  p.diverted_at = honest.devices[at];
  return p;
}

Path honest_route(const Topology &t, const DeviceId &src, const DeviceId &dst)
{
  auto p = shortest_path(t, src, dst, RouteMetric::Latency);
  if (!p)
  {
    throw Error(ErrorCode::NoPath, src.str() + " -> " + dst.str());
  }
  return *p;
}

Path route(const Topology &t, const DeviceId &src, const DeviceId &dst)
{
  auto honest = honest_route(t, src, dst);
  for (std::size_t i = 0; i + 1 < honest.devices.size(); ++i)
  {
    if (t.device(honest.devices[i]).behavior.kind != BehaviorKind::FraudRouter)
    {
      continue;
    }
    auto diverted = diverted_path(t, honest, i);
    if (diverted && diverted->devices != honest.devices)
    {
      return *diverted;
    }
    break;  // the first router's choice decides the remainder
  }
  return honest;
}

Path describe_path(const Topology &t, const contracts::AgreedPath &path)
{
  Path p;
  p.devices = path.devices;
  p.links   = path.links;
  if (p.devices.size() != p.links.size() + 1)
  {
    throw Error(ErrorCode::InvalidParams, "path needs one more device than links");
  }
  for (std::size_t i = 0; i < p.links.size(); ++i)
  {
    const auto &l = t.link(p.links[i]);
    const bool  joins = (l.a == p.devices[i] && l.b == p.devices[i + 1]) ||
                       (l.b == p.devices[i] && l.a == p.devices[i + 1]);
    if (!joins)
    {
      throw Error(ErrorCode::InvalidParams, l.id.str() + " does not join consecutive path devices");
    }
    p.latency += l.latency;
    p.cost += l.cost;
  }
  return p;
}

}  // namespace netshare::network
