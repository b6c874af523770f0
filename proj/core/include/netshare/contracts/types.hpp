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

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace netshare::contracts {

enum class ContractKind : std::uint8_t
{
  Sla          = 1,
  FlowRegistry = 2,
};

enum class SlaStatus : std::uint8_t
{
  Pending,
  Active,
  Expired,
  Terminated,
};

enum class RecordRole : std::uint8_t
{
  Source      = 1,
  Destination = 2,
  Hop         = 3,
};

std::string_view to_string(ContractKind kind) noexcept;
std::string_view to_string(SlaStatus status) noexcept;
std::string_view to_string(RecordRole role) noexcept;
std::optional<RecordRole> parse_role(std::string_view text) noexcept;

/// True for the transitions Pending->Active and Active->{Expired,Terminated}.
bool is_legal_transition(SlaStatus from, SlaStatus to) noexcept;

/// Fixed at deployment; the template an SLA instance is initialised from.
struct SlaTerms
{
  SimDuration  lease_duration{0};
  std::int64_t price{0};
  Millis       latency_target{0};
  std::int64_t penalty_rate{0};

  bool operator==(const SlaTerms &) const = default;
};

/// The path the orchestrator reserved for the lease, as device and link ids.
struct AgreedPath
{
  std::vector<DeviceId> devices;
  std::vector<LinkId>   links;

  bool operator==(const AgreedPath &) const = default;
};

/// Parameters fixed when an SLA contract is initialised.
struct SlaBinding
{
  PdlId           owner;
  PdlId           tenant;
  SimTime         lease_start{0};
  ContractAddress registry;
  AgreedPath      path;
};

struct SlaContract
{
  ContractAddress     address;
  PdlId               manager;  // deployer; the only party allowed to drive it
  SimTime             usable_from{0};
  SlaTerms            terms;
  SlaStatus           status{SlaStatus::Pending};
  PdlId               owner;
  PdlId               tenant;
  SimTime             lease_start{0};
  ContractAddress     registry;
  AgreedPath          path;
  std::vector<FlowId> flows;

  SimTime lease_end() const noexcept { return lease_start + terms.lease_duration; }

  bool operator==(const SlaContract &) const = default;
};

struct FlowRecordEntry
{
  Digest        digest{};
  PdlId         submitter;
  RecordRole    role{RecordRole::Source};
  std::uint64_t commit_height{0};

  bool operator==(const FlowRecordEntry &) const = default;
};

struct FlowRegistry
{
  ContractAddress              address;
  PdlId                        deployer;
  SimTime                      usable_from{0};
  std::vector<FlowRecordEntry> entries;

  bool contains(const Digest &digest, const PdlId &submitter, RecordRole role) const;
  const FlowRecordEntry *find(const Digest &digest, RecordRole role) const;

  // Mirror of `entries` used for duplicate checks.
  std::set<std::tuple<Digest, PdlId, RecordRole>> keys;

  bool operator==(const FlowRegistry &) const = default;
};

/// Network description published in the genesis block so audits can be
/// reproduced from the chain alone.
struct NetworkManifest
{
  struct Device
  {
    DeviceId label;
    PdlId    pdl_id;
    PdlId    owner;
    PdlId    vendor;

    bool operator==(const Device &) const = default;
  };
  struct Link
  {
    LinkId       id;
    DeviceId     a;
    DeviceId     b;
    std::int64_t capacity{0};
    Millis       latency{0};
    std::int64_t cost{0};

    bool operator==(const Link &) const = default;
  };

  std::vector<Device> devices;
  std::vector<Link>   links;

  bool operator==(const NetworkManifest &) const = default;
};

enum class FailureReason : std::uint8_t
{
  Malformed,
  UnknownOpcode,
  UnknownContract,
  WrongKind,
  InvalidParams,
  NotYetUsable,
  AlreadyActive,
  NotActive,
  CallerNotManager,
  DuplicateRecord,
  DuplicateFlow,
  OutsideLease,
  LeaseNotEnded,
  GenesisOnly,
};

std::string_view to_string(FailureReason reason) noexcept;

/// A committed transaction that executed as a no-op.
struct ExecutionFailure
{
  std::uint64_t height{0};
  std::uint32_t index{0};
  PdlId         submitter;
  FailureReason reason{FailureReason::Malformed};

  bool operator==(const ExecutionFailure &) const = default;
};

struct ContractState
{
  std::map<ContractAddress, SlaContract>  slas;
  std::map<ContractAddress, FlowRegistry> registries;
  std::optional<NetworkManifest>          manifest;
  std::vector<ExecutionFailure>           failures;
  std::uint64_t                           executed{0};

  const SlaContract  *find_sla(const ContractAddress &a) const;
  const FlowRegistry *find_registry(const ContractAddress &a) const;

  /// SHA3-256 over a canonical serialisation of the whole state.
  Digest digest() const;

  bool operator==(const ContractState &) const = default;
};

}  // namespace netshare::contracts
