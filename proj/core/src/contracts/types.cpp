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

#include "netshare/contracts/types.hpp"

#include "netshare/common/codec.hpp"
#include "netshare/crypto/sha3.hpp"

namespace netshare::contracts {

std::string_view to_string(ContractKind kind) noexcept
{
  switch (kind)
  {
  case ContractKind::Sla: return "Sla";
  case ContractKind::FlowRegistry: return "FlowRegistry";
  }
  return "Unknown";
}

std::string_view to_string(SlaStatus status) noexcept
{
  switch (status)
  {
  case SlaStatus::Pending: return "Pending";
  case SlaStatus::Active: return "Active";
  case SlaStatus::Expired: return "Expired";
  case SlaStatus::Terminated: return "Terminated";
  }
  return "Unknown";
}

std::string_view to_string(RecordRole role) noexcept
{
  switch (role)
  {
  case RecordRole::Source: return "SourceRecord";
  case RecordRole::Destination: return "DestinationRecord";
  case RecordRole::Hop: return "HopRecord";
  }
  return "Unknown";
}

std::optional<RecordRole> parse_role(std::string_view text) noexcept
{
  if (text == "SourceRecord")
  {
    return RecordRole::Source;
  }
  if (text == "DestinationRecord")
  {
    return RecordRole::Destination;
  }
  if (text == "HopRecord")
  {
    return RecordRole::Hop;
  }
  return std::nullopt;
}

bool is_legal_transition(SlaStatus from, SlaStatus to) noexcept
{
  switch (from)
  {
  case SlaStatus::Pending: return to == SlaStatus::Active;
  case SlaStatus::Active: return to == SlaStatus::Expired || to == SlaStatus::Terminated;
  case SlaStatus::Expired:
  case SlaStatus::Terminated: return false;
  }
  return false;
}

std::string_view to_string(FailureReason reason) noexcept
{
  switch (reason)
  {
  case FailureReason::Malformed: return "Malformed";
  case FailureReason::UnknownOpcode: return "UnknownOpcode";
  case FailureReason::UnknownContract: return "UnknownContract";
  case FailureReason::WrongKind: return "WrongKind";
  case FailureReason::InvalidParams: return "InvalidParams";
  case FailureReason::NotYetUsable: return "NotYetUsable";
  case FailureReason::AlreadyActive: return "AlreadyActive";
  case FailureReason::NotActive: return "NotActive";
  case FailureReason::CallerNotManager: return "CallerNotManager";
  case FailureReason::DuplicateRecord: return "DuplicateRecord";
  case FailureReason::DuplicateFlow: return "DuplicateFlow";
  case FailureReason::OutsideLease: return "OutsideLease";
  case FailureReason::LeaseNotEnded: return "LeaseNotEnded";
  case FailureReason::GenesisOnly: return "GenesisOnly";
  }
  return "Unknown";
}

bool FlowRegistry::contains(const Digest &digest, const PdlId &submitter, RecordRole role) const
{
  return keys.contains({digest, submitter, role});
}

const FlowRecordEntry *FlowRegistry::find(const Digest &digest, RecordRole role) const
{
  for (const auto &e : entries)
  {
    if (e.digest == digest && e.role == role)
    {
      return &e;
    }
  }
  return nullptr;
}

const SlaContract *ContractState::find_sla(const ContractAddress &a) const
{
  auto it = slas.find(a);
  return it == slas.end() ? nullptr : &it->second;
}

const FlowRegistry *ContractState::find_registry(const ContractAddress &a) const
{
  auto it = registries.find(a);
  return it == registries.end() ? nullptr : &it->second;
}

Digest ContractState::digest() const
{
  ByteWriter w;
  w.u64(executed);
  w.u32(static_cast<std::uint32_t>(slas.size()));
  for (const auto &[addr, s] : slas)
  {
    w.digest(addr.bytes)
        .str(s.manager.str())
        .i64(s.usable_from.count())
        .i64(s.terms.lease_duration.count())
        .i64(s.terms.price)
        .i64(s.terms.latency_target.count())
        .i64(s.terms.penalty_rate)
        .u8(static_cast<std::uint8_t>(s.status))
        .str(s.owner.str())
        .str(s.tenant.str())
        .i64(s.lease_start.count())
        .digest(s.registry.bytes);
    w.u32(static_cast<std::uint32_t>(s.path.devices.size()));
    for (const auto &d : s.path.devices)
    {
      w.str(d.str());
    }
    w.u32(static_cast<std::uint32_t>(s.path.links.size()));
    for (const auto &l : s.path.links)
    {
      w.str(l.str());
    }
    w.u32(static_cast<std::uint32_t>(s.flows.size()));
    for (const auto &f : s.flows)
    {
      w.str(f.str());
    }
  }
  w.u32(static_cast<std::uint32_t>(registries.size()));
  for (const auto &[addr, r] : registries)
  {
    w.digest(addr.bytes).str(r.deployer.str()).i64(r.usable_from.count());
    w.u32(static_cast<std::uint32_t>(r.entries.size()));
    for (const auto &e : r.entries)
    {
      w.digest(e.digest).str(e.submitter.str()).u8(static_cast<std::uint8_t>(e.role)).u64(e.commit_height);
    }
  }
  w.u8(manifest ? 1 : 0);
  if (manifest)
  {
    w.u32(static_cast<std::uint32_t>(manifest->devices.size()));
    for (const auto &d : manifest->devices)
    {
      w.str(d.label.str()).str(d.pdl_id.str()).str(d.owner.str()).str(d.vendor.str());
    }
    w.u32(static_cast<std::uint32_t>(manifest->links.size()));
    for (const auto &l : manifest->links)
    {
      w.str(l.id.str()).str(l.a.str()).str(l.b.str()).i64(l.capacity).i64(l.latency.count()).i64(l.cost);
    }
  }
  w.u32(static_cast<std::uint32_t>(failures.size()));
  for (const auto &f : failures)
  {
    w.u64(f.height).u32(f.index).str(f.submitter.str()).u8(static_cast<std::uint8_t>(f.reason));
  }
  return crypto::sha3_256(w.bytes());
}

}  // namespace netshare::contracts
