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

#include "netshare/contracts/engine.hpp"
#include "netshare/ledger/ledger.hpp"
#include "netshare/orchestration/manager.hpp"

#include "builders.hpp"
#include "oracles.hpp"
#include "topologies.hpp"

#include <map>
#include <memory>

namespace netshare::testing {

/// Manager, ledger and engine bootstrapped the way a run does it, with roomy
/// ledger limits so admission is decided by capacity alone.
struct OrchestrationRig
{
  explicit OrchestrationRig(network::TopologySpec spec, std::vector<std::string> tenants = {"T1", "T2"})
    : topology(network::Topology::build(std::move(spec)))
    , manager(topology)
  {
    const auto &owner = manager.register_participant(orchestration::ParticipantKind::Owner, "Owner");
    for (const auto &t : tenants)
    {
      manager.register_participant(orchestration::ParticipantKind::Tenant, t);
    }
    manager.register_participant(orchestration::ParticipantKind::Regulator, "Reg");
    for (auto &[id, d] : topology.devices())
    {
      topology.device(id).owner = owner.pdl_id;
      manager.assign_pdl_id(id);
    }
    ledger::LedgerConfig c;
    c.tps_cap     = 100000;
    c.mempool_cap = 1000000;
    c.authorities = {{owner.pdl_id, "Owner"}};
    ledger        = std::make_unique<ledger::Ledger>(c);
    engine        = std::make_unique<contracts::ContractEngine>(*ledger, contracts::EngineConfig{SimDuration{0}});
    manager.connect(*ledger, *engine, SimTime{0});
  }

  void seal_until(SimTime now)
  {
    while (ledger->next_seal_due() <= now)
    {
      const auto r = ledger->seal_block(ledger->next_seal_due());
      engine->on_block(std::get<ledger::Block>(r));
    }
  }

  orchestration::ResourceRequest request(const std::string &id, const std::string &tenant,
                                         const std::string &src, const std::string &dst,
                                         std::int64_t bandwidth, std::int64_t lease_s, SimTime at) const
  {
    orchestration::ResourceRequest r;
    r.request_id = RequestId{id};
    if (const auto *p = manager.access().find_label(tenant))
    {
      r.tenant     = p->pdl_id;
      r.credential = p->credential;
    }
    else
    {
      r.tenant = PdlId{"unregistered:" + tenant};
    }
    r.src_device     = topology.device(DeviceId{src}).pdl_id;
    r.dst_device     = topology.device(DeviceId{dst}).pdl_id;
    r.bandwidth      = bandwidth;
    r.lease_duration = secs(lease_s);
    r.latency_target = Millis{15};
    r.submitted_at   = at;
    r.price          = 10;
    r.penalty_rate   = 1;
    return r;
  }

  network::Topology                          topology;
  orchestration::OrchestrationManager        manager;
  std::unique_ptr<ledger::Ledger>            ledger;
  std::unique_ptr<contracts::ContractEngine> engine;
};

struct ScheduledRequest
{
  std::string  id;
  std::string  src;
  std::string  dst;
  std::int64_t bandwidth{0};
  std::int64_t lease_s{0};
  std::int64_t at_s{0};
};

/// Admission outcome per request: start second of the granted lease, or -1
/// for denied, or -2 for still waiting at the end.
using Admissions = std::map<std::string, std::int64_t>;

enum class Discipline
{
  StrictFifo,
  FirstFit,
};

/// Reference admission model over whole seconds. Paths and loads are
/// recomputed from scratch with the brute-force oracles.
inline Admissions model_admissions(const network::Topology &t, const std::vector<ScheduledRequest> &reqs,
                                   std::int64_t horizon_s, Discipline discipline)
{
  struct Live
  {
    std::vector<LinkId> links;
    std::int64_t        bw, start, end;
  };
  std::vector<Live>             live;
  std::vector<ScheduledRequest> queue;
  Admissions                    out;

  auto path_of = [&](const ScheduledRequest &r) { return oracle::best_path(t, DeviceId{r.src}, DeviceId{r.dst}, false); };
  auto load_ok = [&](const ScheduledRequest &r, std::int64_t now) {
    const auto path = path_of(r);
    for (const auto &l : path->links)
    {
      for (std::int64_t s = now; s < now + r.lease_s; ++s)
      {
        std::int64_t load = r.bandwidth;
        for (const auto &a : live)
        {
          if (a.start <= s && s < a.end && std::find(a.links.begin(), a.links.end(), l) != a.links.end())
          {
            load += a.bw;
          }
        }
        if (load > t.link(l).capacity)
        {
          return false;
        }
      }
    }
    return true;
  };
  auto admit = [&](const ScheduledRequest &r, std::int64_t now) {
    live.push_back({path_of(r)->links, r.bandwidth, now, now + r.lease_s});
    out[r.id] = now;
  };

  for (std::int64_t now = 0; now <= horizon_s; ++now)
  {
    for (const auto &r : reqs)
    {
      if (r.at_s != now)
      {
        continue;
      }
      const auto path = path_of(r);
      std::int64_t bottleneck = std::numeric_limits<std::int64_t>::max();
      for (const auto &l : path->links)
      {
        bottleneck = std::min(bottleneck, t.link(l).capacity);
      }
      if (r.bandwidth > bottleneck)
      {
        out[r.id] = -1;
        continue;
      }
      if (queue.empty() && load_ok(r, now))
      {
        admit(r, now);
      }
      else
      {
        queue.push_back(r);
      }
    }
    // Tick: the queue is served after this second's arrivals.
    for (std::size_t i = 0; i < queue.size();)
    {
      if (load_ok(queue[i], now))
      {
        admit(queue[i], now);
        queue.erase(queue.begin() + static_cast<long>(i));
        continue;
      }
      if (discipline == Discipline::StrictFifo)
      {
        break;
      }
      ++i;
    }
  }
  for (const auto &r : queue)
  {
    out[r.id] = -2;
  }
  return out;
}

struct DriveResult
{
  Admissions                             admissions;
  std::vector<orchestration::Allocation> allocations;  // every lease ever granted
};

/// Runs the real manager over the same schedule: each second, arrivals in
/// order, then tick().
inline DriveResult drive(OrchestrationRig &rig, const std::vector<ScheduledRequest> &reqs, std::int64_t horizon_s)
{
  DriveResult out;
  auto record = [&](const RequestId &id, SimTime now) {
    out.admissions[id.str()] = std::chrono::duration_cast<Seconds>(now).count();
    out.allocations.push_back(*rig.manager.log().find(id));
  };
  for (std::int64_t s = 0; s <= horizon_s; ++s)
  {
    const SimTime now = secs(s);
    rig.seal_until(now);
    for (const auto &r : reqs)
    {
      if (r.at_s != s)
      {
        continue;
      }
      const auto req = rig.request(r.id, "T1", r.src, r.dst, r.bandwidth, r.lease_s, now);
      const auto res = rig.manager.handle_request(req, now);
      if (std::holds_alternative<orchestration::Confirmed>(res))
      {
        record(req.request_id, now);
      }
      else if (std::holds_alternative<orchestration::Denied>(res))
      {
        out.admissions[r.id] = -1;
      }
    }
    for (const auto &ev : rig.manager.tick(now))
    {
      if (ev.kind == orchestration::OrchestrationEvent::Kind::Confirmed)
      {
        record(ev.request_id, now);
      }
      else if (ev.kind == orchestration::OrchestrationEvent::Kind::Denied)
      {
        out.admissions[ev.request_id.str()] = -1;
      }
    }
  }
  for (const auto &r : rig.manager.waitlist())
  {
    out.admissions[r.request_id.str()] = -2;
  }
  return out;
}

inline std::vector<ScheduledRequest> random_schedule(DeterministicRng &rng, const network::Topology &t,
                                                     int count, std::int64_t span_s)
{
  std::vector<DeviceId> devs;
  for (const auto &[id, _] : t.devices())
  {
    devs.push_back(id);
  }
  std::vector<ScheduledRequest> out;
  for (int i = 0; i < count; ++i)
  {
    ScheduledRequest r;
    char             buf[16];
    std::snprintf(buf, sizeof(buf), "r%03d", i);
    r.id = buf;
    const auto a = rng.below(devs.size());
    auto       b = rng.below(devs.size() - 1);
    if (b >= a)
    {
      ++b;
    }
    r.src       = devs[a].str();
    r.dst       = devs[b].str();
    r.bandwidth = rng.between(1, 40);
    r.lease_s   = rng.between(1, 20);
    r.at_s      = rng.between(0, span_s);
    out.push_back(r);
  }
  std::stable_sort(out.begin(), out.end(), [](const auto &x, const auto &y) { return x.at_s < y.at_s; });
  return out;
}

}  // namespace netshare::testing
