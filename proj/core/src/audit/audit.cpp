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

#include "netshare/audit/audit.hpp"

#include "netshare/common/error.hpp"
#include "netshare/contracts/executor.hpp"
#include "netshare/crypto/sha3.hpp"
#include "netshare/network/routing.hpp"

#include <json.hpp>

#include <algorithm>
#include <ostream>

namespace netshare::audit {
namespace {

using contracts::DisclosedRecord;
using contracts::FlowPreimage;
using contracts::RecordRole;

// Parsed preimage if the disclosure is consistent with itself.
std::optional<FlowPreimage> self_consistent(const DisclosedRecord &r)
{
  if (crypto::sha3_256(r.canonical) != r.claimed_digest)
  {
    return std::nullopt;
  }
  return FlowPreimage::parse(r.canonical);
}

bool committed_by(const contracts::FlowRegistry &registry, const DisclosedRecord &r, const PdlId &party)
{
  return registry.contains(r.claimed_digest, party, r.role);
}

PdlId owner_of(const network::Topology &topology, const DeviceId &device)
{
  return topology.device(device).owner;
}

PdlId slowest_link_owner(const network::Topology &topology, const contracts::AgreedPath &path)
{
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < path.links.size(); ++i)
  {
    if (!best)
    {
      best = i;
      continue;
    }
    const auto lat  = topology.link(path.links[i]).latency;
    const auto blat = topology.link(path.links[*best]).latency;
    if (lat > blat || (lat == blat && path.devices[i] < path.devices[*best]))
    {
      best = i;
    }
  }
  return best ? owner_of(topology, path.devices[*best])
              : owner_of(topology, path.devices.front());
}

std::optional<PdlId> blame_from_hops(const network::Topology &topology,
                                     const contracts::AgreedPath &agreed, const VerifiedFlow &v)
{
  std::vector<DeviceId>     observed{agreed.devices.front()};
  std::vector<std::int64_t> stamps{v.source.timestamp_ms};
  for (const auto &hop : v.hops)
  {
    const auto *dev = topology.find_by_pdl(hop.node_id);
    if (dev == nullptr)
    {
      continue;
    }
    observed.push_back(dev->id);
    stamps.push_back(hop.timestamp_ms);
  }
  observed.push_back(agreed.devices.back());
  stamps.push_back(v.destination.timestamp_ms);

  if (observed != agreed.devices)
  {
    std::size_t i = 0;
    while (i < observed.size() && i < agreed.devices.size() && observed[i] == agreed.devices[i])
    {
      ++i;
    }
    // i >= 1: both sequences start at the agreed source.
    return owner_of(topology, observed[i - 1]);
  }
  for (std::size_t i = 0; i < agreed.links.size(); ++i)
  {
    if (stamps[i + 1] - stamps[i] > topology.link(agreed.links[i]).latency.count())
    {
      return topology.device(agreed.devices[i]).pdl_id;
    }
  }
  return std::nullopt;
}

std::optional<PdlId> blame_from_latency(const network::Topology &topology,
                                        const contracts::AgreedPath &agreed, Millis measured)
{
  const auto honest = network::describe_path(topology, agreed);
  for (std::size_t i = 0; i + 1 < agreed.devices.size(); ++i)
  {
    auto diverted = network::diverted_path(topology, honest, i);
    if (diverted && diverted->devices != agreed.devices && diverted->latency == measured)
    {
      return owner_of(topology, agreed.devices[i]);
    }
  }
  return std::nullopt;
}

}  // namespace

std::string_view to_string(Verdict verdict) noexcept
{
  switch (verdict)
  {
  case Verdict::Compliant: return "Compliant";
  case Verdict::Violation: return "Violation";
  case Verdict::Unverifiable: return "Unverifiable";
  }
  return "?";
}

std::string_view to_string(UnverifiableReason reason) noexcept
{
  switch (reason)
  {
  case UnverifiableReason::MissingSourceRecord: return "MissingSourceRecord";
  case UnverifiableReason::MissingDestinationRecord: return "MissingDestinationRecord";
  case UnverifiableReason::DigestMismatch: return "DigestMismatch";
  }
  return "?";
}

std::map<FlowId, FlowEvidence> index_disclosure(const contracts::Disclosure &disclosure)
{
  std::map<FlowId, FlowEvidence> out;
  for (const auto &r : disclosure.records)
  {
    auto &e = out[r.flow_id];
    switch (r.role)
    {
    case RecordRole::Source:
      if (!e.source)
      {
        e.source = r;
      }
      break;
    case RecordRole::Destination:
      if (!e.destination)
      {
        e.destination = r;
      }
      break;
    case RecordRole::Hop: e.hops.push_back(r); break;
    }
  }
  return out;
}

FlowVerification verify_flow(const FlowEvidence &evidence, const contracts::FlowRegistry &registry,
                             const ExpectedParties &expected)
{
  if (!evidence.source)
  {
    return UnverifiedFlow{UnverifiableReason::MissingSourceRecord, RecordRole::Source};
  }
  if (!evidence.destination)
  {
    return UnverifiedFlow{UnverifiableReason::MissingDestinationRecord, RecordRole::Destination};
  }
  const auto src = self_consistent(*evidence.source);
  if (!src)
  {
    return UnverifiedFlow{UnverifiableReason::DigestMismatch, RecordRole::Source};
  }
  const auto dst = self_consistent(*evidence.destination);
  if (!dst || dst->src_ip != src->src_ip || dst->dst_ip != src->dst_ip)
  {
    return UnverifiedFlow{UnverifiableReason::DigestMismatch, RecordRole::Destination};
  }
  if (src->node_id != expected.source || !committed_by(registry, *evidence.source, expected.source))
  {
    return UnverifiedFlow{UnverifiableReason::MissingSourceRecord, RecordRole::Source};
  }
  if (dst->node_id != expected.destination ||
      !committed_by(registry, *evidence.destination, expected.destination))
  {
    return UnverifiedFlow{UnverifiableReason::MissingDestinationRecord, RecordRole::Destination};
  }

  VerifiedFlow v{*src, *dst, {}, Millis{dst->timestamp_ms - src->timestamp_ms}};
  for (const auto &hop : evidence.hops)
  {
    auto p = self_consistent(hop);
    if (p && p->src_ip == src->src_ip && p->dst_ip == src->dst_ip &&
        committed_by(registry, hop, p->node_id))
    {
      v.hops.push_back(*p);
    }
  }
  return v;
}

PdlId assign_blame(const AuditFinding &finding, const network::Topology &topology,
                   const contracts::SlaContract &sla, const FlowVerification &verification)
{
  const auto &agreed = sla.path;
  if (const auto *u = std::get_if<UnverifiedFlow>(&verification))
  {
    const auto &device = u->role == RecordRole::Destination ? agreed.devices.back()
                                                            : agreed.devices.front();
    return topology.device(device).pdl_id;
  }
  const auto &v = std::get<VerifiedFlow>(verification);
  if (!v.hops.empty())
  {
    if (auto p = blame_from_hops(topology, agreed, v))
    {
      return *p;
    }
  }
  else if (finding.measured_latency)
  {
    if (auto p = blame_from_latency(topology, agreed, *finding.measured_latency))
    {
      return *p;
    }
  }
  return slowest_link_owner(topology, agreed);
}

std::vector<AuditFinding> detect_violations(const contracts::SlaContract &sla,
                                            const contracts::ContractState &state,
                                            const network::Topology &topology,
                                            const std::map<FlowId, FlowEvidence> &evidence)
{
  std::vector<AuditFinding> out;
  if (sla.status != contracts::SlaStatus::Active && sla.status != contracts::SlaStatus::Expired)
  {
    return out;
  }
  const auto *registry = state.find_registry(sla.registry);
  if (registry == nullptr)
  {
    return out;
  }
  const ExpectedParties expected{topology.device(sla.path.devices.front()).pdl_id,
                                 topology.device(sla.path.devices.back()).pdl_id};
  static const FlowEvidence kNone;
  for (const auto &flow : sla.flows)
  {
    auto        it = evidence.find(flow);
    const auto  verification = verify_flow(it == evidence.end() ? kNone : it->second, *registry, expected);
    AuditFinding f;
    f.flow_id        = flow;
    f.sla            = sla.address;
    f.latency_target = sla.terms.latency_target;
    if (const auto *u = std::get_if<UnverifiedFlow>(&verification))
    {
      f.verdict = Verdict::Unverifiable;
      f.reason  = u->reason;
    }
    else
    {
      f.measured_latency = std::get<VerifiedFlow>(verification).latency;
      f.verdict = *f.measured_latency > f.latency_target ? Verdict::Violation : Verdict::Compliant;
    }
    if (f.verdict != Verdict::Compliant)
    {
      f.blamed = assign_blame(f, topology, sla, verification);
    }
    if (f.verdict == Verdict::Violation)
    {
      f.penalty = sla.terms.penalty_rate;
    }
    out.push_back(std::move(f));
  }
  return out;
}

AuditReport audit_chain(std::span<const ledger::Block> chain, const contracts::Disclosure &disclosure)
{
  const auto state = contracts::replay(chain);
  if (!state.manifest)
  {
    throw Error(ErrorCode::InvalidConfig, "genesis block carries no network manifest");
  }
  const auto topology = network::Topology::from_manifest(*state.manifest);
  const auto evidence = index_disclosure(disclosure);

  AuditReport report;
  for (const auto &[_, sla] : state.slas)
  {
    for (auto &f : detect_violations(sla, state, topology, evidence))
    {
      switch (f.verdict)
      {
      case Verdict::Compliant: ++report.compliant; break;
      case Verdict::Violation: ++report.violations; break;
      case Verdict::Unverifiable:
        ++report.unverifiable;
        report.blacklist_eligible.insert(*f.blamed);
        break;
      }
      report.penalties += f.penalty;
      report.findings.push_back(std::move(f));
    }
  }
  return report;
}

std::string finding_to_json(const AuditFinding &f)
{
  nlohmann::ordered_json j;
  j["flow_id"]  = f.flow_id.str();
  j["sla"]      = f.sla.hex();
  j["verdict"]  = to_string(f.verdict);
  j["reason"]   = f.reason ? nlohmann::ordered_json(to_string(*f.reason)) : nlohmann::ordered_json();
  j["measured_latency_ms"] =
      f.measured_latency ? nlohmann::ordered_json(f.measured_latency->count()) : nlohmann::ordered_json();
  j["latency_target_ms"] = f.latency_target.count();
  j["blamed"]  = f.blamed ? nlohmann::ordered_json(f.blamed->str()) : nlohmann::ordered_json();
  j["penalty"] = f.penalty;
  return j.dump();
}

void write_report(std::ostream &out, const AuditReport &report)
{
  for (const auto &f : report.findings)
  {
    out << finding_to_json(f) << '\n';
  }
}

}  // namespace netshare::audit
