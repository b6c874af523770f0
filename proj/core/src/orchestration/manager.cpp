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

#include "netshare/orchestration/manager.hpp"

#include "netshare/common/error.hpp"
#include "netshare/common/hex.hpp"
#include "netshare/crypto/sha3.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>

namespace netshare::orchestration {
namespace {

std::string issue_credential(const PdlId &id, const std::string &label)
{
  const auto d = crypto::sha3_256("credential|" + id.str() + "|" + label);
  return to_hex(std::span(d).first(16));
}

}  // namespace

void ResourceRequest::validate() const
{
  if (request_id.empty())
  {
    throw Error(ErrorCode::InvalidParams, "request_id is empty");
  }
  if (bandwidth <= 0 || lease_duration <= SimDuration{0})
  {
    throw Error(ErrorCode::InvalidParams, request_id.str() + ": bandwidth and lease_duration must be > 0");
  }
  if (latency_target <= Millis{0} || penalty_rate < 0 || price < 0)
  {
    throw Error(ErrorCode::InvalidParams, request_id.str() + ": latency_target > 0, price and penalty_rate >= 0");
  }
  if (src_device == dst_device)
  {
    throw Error(ErrorCode::InvalidParams, request_id.str() + ": src and dst devices coincide");
  }
}

std::string_view to_string(DenyReason reason) noexcept
{
  switch (reason)
  {
  case DenyReason::NoAgreement: return "NoAgreement";
  case DenyReason::NoPath: return "NoPath";
  case DenyReason::ExceedsPathCapacity: return "ExceedsPathCapacity";
  }
  return "?";
}

std::string_view to_string(OrchestrationEvent::Kind kind) noexcept
{
  using K = OrchestrationEvent::Kind;
  switch (kind)
  {
  case K::Confirmed: return "Confirmed";
  case K::Waitlisted: return "Waitlisted";
  case K::Denied: return "Denied";
  case K::Expired: return "Expired";
  case K::ExpiryDeferred: return "ExpiryDeferred";
  }
  return "?";
}

OrchestrationManager::OrchestrationManager(network::Topology &topology)
  : topology_(topology)
{
  self_ = next_id();
}

PdlId OrchestrationManager::next_id()
{
  char buf[16];
  std::snprintf(buf, sizeof buf, "pdl-%04u", next_serial_++);
  return PdlId{buf};
}

const Participant &OrchestrationManager::register_participant(ParticipantKind kind,
                                                              const std::string &label)
{
  if (access_.find_label(label) != nullptr)
  {
    throw Error(ErrorCode::DuplicateLabel, label);
  }
  Participant p;
  p.pdl_id     = next_id();
  p.label      = label;
  p.kind       = kind;
  p.credential = issue_credential(p.pdl_id, label);
  const auto &added = access_.add(std::move(p));
  if (ledger_ != nullptr && may_submit(kind))
  {
    ledger_->register_participant(added.pdl_id);
  }
  return added;
}

PdlId OrchestrationManager::assign_pdl_id(const DeviceId &device)
{
  auto &dev = topology_.device(device);
  if (auto it = device_ids_.find(device); it != device_ids_.end())
  {
    return it->second;
  }
  dev.pdl_id = next_id();
  device_ids_.emplace(device, dev.pdl_id);
  if (ledger_ != nullptr)
  {
    ledger_->register_participant(dev.pdl_id);
  }
  return dev.pdl_id;
}

void OrchestrationManager::connect(ledger::Ledger &ledger, contracts::ContractEngine &engine,
                                   SimTime now)
{
  ledger_ = &ledger;
  engine_ = &engine;
  ledger.register_participant(self_);
  for (const auto &[id, p] : access_.participants())
  {
    if (may_submit(p.kind) && !access_.revoked(id))
    {
      ledger.register_participant(id);
    }
  }
  for (const auto &[_, id] : device_ids_)
  {
    ledger.register_participant(id);
  }
  registry_ = engine.deploy_registry(self_, now);
}

std::optional<network::Path> OrchestrationManager::plan(const ResourceRequest &request,
                                                        std::optional<Denied> &denial) const
{
  const auto *src = topology_.find_by_pdl(request.src_device);
  const auto *dst = topology_.find_by_pdl(request.dst_device);
  if (src == nullptr || dst == nullptr)
  {
    throw Error(ErrorCode::UnknownDevice,
                (src == nullptr ? request.src_device : request.dst_device).str());
  }
  auto path = network::shortest_path(topology_, src->id, dst->id, network::RouteMetric::Latency);
  if (!path)
  {
    denial = Denied{DenyReason::NoPath};
    return std::nullopt;
  }
  std::int64_t bottleneck = std::numeric_limits<std::int64_t>::max();
  for (const auto &lid : path->links)
  {
    bottleneck = std::min(bottleneck, topology_.link(lid).capacity);
  }
  if (request.bandwidth > bottleneck)
  {
    denial = Denied{DenyReason::ExceedsPathCapacity};
    return std::nullopt;
  }
  return path;
}

ContractAddress OrchestrationManager::deploy_for(const ResourceRequest &request, SimTime now)
{
  if (auto it = prepared_.find(request.request_id); it != prepared_.end())
  {
    return it->second;
  }
  contracts::SlaTerms terms{request.lease_duration, request.price, request.latency_target,
                            request.penalty_rate};
  auto addr = engine_->deploy_contract(self_, contracts::ContractKind::Sla, terms, now);
  prepared_.emplace(request.request_id, addr);
  return addr;
}

std::optional<Denied> OrchestrationManager::prepare(const ResourceRequest &request, SimTime now)
{
  if (engine_ == nullptr)
  {
    throw Error(ErrorCode::InvalidConfig, "orchestration manager is not connected to a ledger");
  }
  request.validate();
  if (!access_.admits(request.tenant, request.credential))
  {
    return Denied{DenyReason::NoAgreement};
  }
  try
  {
    deploy_for(request, now);
  }
  catch (const ledger::LedgerRejected &)
  {
    // Deployed again when the request is handled.
  }
  return std::nullopt;
}

std::optional<Allocation> OrchestrationManager::try_admit(const ResourceRequest &request,
                                                          const network::Path &path, SimTime now)
{
  const SimTime end = now + request.lease_duration;
  if (query_capacity(path.links, now, end) < request.bandwidth)
  {
    return std::nullopt;
  }
  try
  {
    const auto  sla      = deploy_for(request, now);
    const auto *contract = engine_->head().find_sla(sla);
    if (contract == nullptr || now < contract->usable_from)
    {
      return std::nullopt;
    }
    contracts::SlaBinding binding;
    binding.owner       = topology_.device(path.devices.front()).owner;
    binding.tenant      = request.tenant;
    binding.lease_start = now;
    binding.registry    = registry_;
    binding.path        = path.agreed();
    engine_->init_sla(sla, self_, binding, now);

    Allocation a{request.request_id, request.tenant, path.agreed(), sla, now, end, request.bandwidth};
    log_.commit(a);
    prepared_.erase(request.request_id);
    return a;
  }
  catch (const ledger::LedgerRejected &)
  {
    return std::nullopt;
  }
}

RequestOutcome OrchestrationManager::handle_request(const ResourceRequest &request, SimTime now)
{
  if (engine_ == nullptr)
  {
    throw Error(ErrorCode::InvalidConfig, "orchestration manager is not connected to a ledger");
  }
  request.validate();
  if (!access_.admits(request.tenant, request.credential))
  {
    return Denied{DenyReason::NoAgreement};
  }
  std::optional<Denied> denial;
  auto                  path = plan(request, denial);
  if (!path)
  {
    return *denial;
  }
  if (waitlist_.empty())
  {
    if (auto a = try_admit(request, *path, now))
    {
      return Confirmed{*a};
    }
  }
  waitlist_.push_back(request);
  return Waitlisted{waitlist_.size() - 1};
}

std::vector<OrchestrationEvent> OrchestrationManager::tick(SimTime now)
{
  using Kind = OrchestrationEvent::Kind;
  std::vector<OrchestrationEvent> events;
  if (engine_ == nullptr)
  {
    return events;
  }

  std::vector<const Allocation *> ended;
  for (const auto &[_, a] : log_.allocations())
  {
    if (a.end <= now)
    {
      ended.push_back(&a);
    }
  }
  std::sort(ended.begin(), ended.end(), [](const Allocation *x, const Allocation *y) {
    return std::tie(x->end, x->request_id) < std::tie(y->end, y->request_id);
  });
  for (const auto *a : ended)
  {
    const auto id  = a->request_id;
    const auto sla = a->sla;
    try
    {
      engine_->expire_sla(sla, self_, now);
    }
    catch (const ledger::LedgerRejected &)
    {
      events.push_back({now, Kind::ExpiryDeferred, id, std::nullopt, sla});
      continue;
    }
    log_.release(id);
    events.push_back({now, Kind::Expired, id, std::nullopt, sla});
  }

  while (!waitlist_.empty())
  {
    const auto head = waitlist_.front();
    if (!access_.admits(head.tenant, head.credential))
    {
      waitlist_.pop_front();
      prepared_.erase(head.request_id);
      events.push_back({now, Kind::Denied, head.request_id, DenyReason::NoAgreement, {}});
      continue;
    }
    std::optional<Denied> denial;
    auto                  path = plan(head, denial);
    if (!path)
    {
      waitlist_.pop_front();
      prepared_.erase(head.request_id);
      events.push_back({now, Kind::Denied, head.request_id, denial->reason, {}});
      continue;
    }
    auto a = try_admit(head, *path, now);
    if (!a)
    {
      break;
    }
    waitlist_.pop_front();
    events.push_back({now, Kind::Confirmed, head.request_id, std::nullopt, a->sla});
  }
  return events;
}

std::int64_t OrchestrationManager::query_capacity(const std::vector<LinkId> &links, SimTime from,
                                                  SimTime to) const
{
  std::int64_t available = std::numeric_limits<std::int64_t>::max();
  for (const auto &lid : links)
  {
    const auto &l = topology_.link(lid);
    available     = std::min(available, l.capacity - log_.peak_link_load(lid, from, to));
  }
  return available;
}

}  // namespace netshare::orchestration
