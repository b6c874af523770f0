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
#include "netshare/network/routing.hpp"
#include "netshare/network/topology.hpp"
#include "netshare/orchestration/access.hpp"
#include "netshare/orchestration/network_log.hpp"

#include <deque>
#include <variant>

namespace netshare::orchestration {

struct ResourceRequest
{
  RequestId    request_id;
  PdlId        tenant;
  std::string  credential;
  PdlId        src_device;
  PdlId        dst_device;
  std::int64_t bandwidth{0};
  SimDuration  lease_duration{0};
  Millis       latency_target{0};
  SimTime      submitted_at{0};
  std::int64_t price{0};
  std::int64_t penalty_rate{0};

  /// Throws Error(InvalidParams).
  void validate() const;
};

enum class DenyReason
{
  NoAgreement,
  NoPath,
  ExceedsPathCapacity,  // the bandwidth can never fit, even on an idle path
};

std::string_view to_string(DenyReason reason) noexcept;

struct Confirmed
{
  Allocation allocation;
};
struct Waitlisted
{
  std::size_t position{0};  // 0 is the head of the queue
};
struct Denied
{
  DenyReason reason{DenyReason::NoAgreement};
};

using RequestOutcome = std::variant<Confirmed, Waitlisted, Denied>;

struct OrchestrationEvent
{
  enum class Kind
  {
    Confirmed,
    Waitlisted,
    Denied,
    Expired,
    ExpiryDeferred,  // the expiry transaction was refused; retried next tick
  };

  SimTime                   at{0};
  Kind                      kind{Kind::Confirmed};
  RequestId                 request_id;
  std::optional<DenyReason> reason;
  ContractAddress           sla;
};

std::string_view to_string(OrchestrationEvent::Kind kind) noexcept;

/// Orchestration Manager: registers participants, assigns PDL-IDs, and turns
/// tenant requests into SLA-backed allocations.
///
/// Bootstrapping happens before the ledger exists (its genesis block carries
/// the identities the manager hands out); connect() then attaches the ledger.
class OrchestrationManager
{
public:
  explicit OrchestrationManager(network::Topology &topology);

  /// The manager's own ledger identity; it deploys and drives every SLA.
  const PdlId &pdl_id() const noexcept { return self_; }

  /// Throws Error(DuplicateLabel).
  const Participant &register_participant(ParticipantKind kind, const std::string &label);

  /// Idempotent. Throws Error(UnknownDevice).
  PdlId assign_pdl_id(const DeviceId &device);

  /// Registers every submitting identity with the ledger and deploys the
  /// shared flow registry.
  void connect(ledger::Ledger &ledger, contracts::ContractEngine &engine, SimTime now);

  const ContractAddress &registry() const noexcept { return registry_; }

  /// Access check, then deploys the request's SLA contract so that it is
  /// usable by the time the request is handled. Returns the denial, if any.
  std::optional<Denied> prepare(const ResourceRequest &request, SimTime now);

  RequestOutcome handle_request(const ResourceRequest &request, SimTime now);

  /// Expires ended allocations, then admits waitlisted requests in strict
  /// FIFO order until the head does not fit.
  std::vector<OrchestrationEvent> tick(SimTime now);

  /// min over `links` of (capacity - peak committed load in [from, to)).
  /// Throws Error(UnknownLink).
  std::int64_t query_capacity(const std::vector<LinkId> &links, SimTime from, SimTime to) const;

  /// Withdraws a participant's agreement (used by governance).
  void revoke(const PdlId &pdl_id) { access_.revoke(pdl_id); }

  const AccessControl               &access() const noexcept { return access_; }
  const NetworkLog                  &log() const noexcept { return log_; }
  const std::deque<ResourceRequest> &waitlist() const noexcept { return waitlist_; }
  const network::Topology           &topology() const noexcept { return topology_; }

private:
  PdlId next_id();
  std::optional<Allocation> try_admit(const ResourceRequest &request, const network::Path &path,
                                      SimTime now);
  ContractAddress deploy_for(const ResourceRequest &request, SimTime now);
  std::optional<network::Path> plan(const ResourceRequest &request, std::optional<Denied> &denial) const;

  network::Topology         &topology_;
  ledger::Ledger            *ledger_{nullptr};
  contracts::ContractEngine *engine_{nullptr};
  PdlId                      self_;
  std::uint32_t              next_serial_{0};
  AccessControl              access_;
  std::map<DeviceId, PdlId>  device_ids_;
  NetworkLog                 log_;
  std::deque<ResourceRequest>            waitlist_;
  std::map<RequestId, ContractAddress>   prepared_;
  ContractAddress                        registry_;
};

}  // namespace netshare::orchestration
