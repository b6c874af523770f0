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

#include "netshare/contracts/disclosure.hpp"
#include "netshare/contracts/types.hpp"
#include "netshare/ledger/types.hpp"
#include "netshare/network/topology.hpp"

#include <iosfwd>
#include <map>
#include <set>
#include <span>
#include <variant>

namespace netshare::audit {

enum class Verdict
{
  Compliant,
  Violation,
  Unverifiable,
};

enum class UnverifiableReason
{
  MissingSourceRecord,
  MissingDestinationRecord,
  DigestMismatch,
};

std::string_view to_string(Verdict verdict) noexcept;
std::string_view to_string(UnverifiableReason reason) noexcept;

/// Everything disclosed for one flow. Hop records keep disclosure order,
/// which is path order.
struct FlowEvidence
{
  std::optional<contracts::DisclosedRecord> source;
  std::optional<contracts::DisclosedRecord> destination;
  std::vector<contracts::DisclosedRecord>   hops;
};

/// Groups a disclosure by flow. The first record per (flow, endpoint role)
/// wins.
std::map<FlowId, FlowEvidence> index_disclosure(const contracts::Disclosure &disclosure);

/// Devices the SLA obliges to record the endpoints.
struct ExpectedParties
{
  PdlId source;
  PdlId destination;
};

struct VerifiedFlow
{
  contracts::FlowPreimage              source;
  contracts::FlowPreimage              destination;
  std::vector<contracts::FlowPreimage> hops;  // only those committed and self-consistent
  Millis                               latency{0};
};

struct UnverifiedFlow
{
  UnverifiableReason    reason{UnverifiableReason::MissingSourceRecord};
  contracts::RecordRole role{contracts::RecordRole::Source};  // the record at fault
};

using FlowVerification = std::variant<VerifiedFlow, UnverifiedFlow>;

/// Recomputes digests and checks them against the registry.
///
/// Order: a missing disclosure gives Missing<Role>Record; a disclosure whose
/// canonical text does not hash to the claimed digest, does not parse, or
/// whose src/dst addresses disagree with the other endpoint gives
/// DigestMismatch; a digest not committed by the expected party with the
/// matching role gives Missing<Role>Record.
FlowVerification verify_flow(const FlowEvidence &evidence, const contracts::FlowRegistry &registry,
                             const ExpectedParties &expected);

struct AuditFinding
{
  FlowId                            flow_id;
  ContractAddress                   sla;
  std::optional<Millis>             measured_latency;
  Millis                            latency_target{0};
  Verdict                           verdict{Verdict::Compliant};
  std::optional<UnverifiableReason> reason;
  std::optional<PdlId>              blamed;
  std::int64_t                      penalty{0};

  bool operator==(const AuditFinding &) const = default;
};

/// Party responsible for a Violation or Unverifiable finding.
///
/// Missing or inconsistent records: the device that owed the record. A
/// violation on a diverted route: the owner of the diverting device, read
/// from hop records when present, otherwise inferred by matching the
/// measured latency against each device's cheapest diversion. With hop
/// records on the agreed route: the upstream device of the first segment
/// slower than its link. Otherwise the owner of the upstream device of the
/// slowest agreed link, ties to the lowest device id.
PdlId assign_blame(const AuditFinding &finding, const network::Topology &topology,
                   const contracts::SlaContract &sla, const FlowVerification &verification);

/// One finding per flow opened under `sla`. Empty unless the SLA is Active
/// or Expired.
std::vector<AuditFinding> detect_violations(const contracts::SlaContract &sla,
                                            const contracts::ContractState &state,
                                            const network::Topology &topology,
                                            const std::map<FlowId, FlowEvidence> &evidence);

struct AuditReport
{
  std::vector<AuditFinding> findings;
  std::uint64_t             compliant{0};
  std::uint64_t             violations{0};
  std::uint64_t             unverifiable{0};
  std::int64_t              penalties{0};
  /// Parties blamed for unverifiable flows.
  std::set<PdlId>           blacklist_eligible;

  bool operator==(const AuditReport &) const = default;
};

/// Audits every SLA on `chain` (replayed from genesis) against `disclosure`.
/// Depends on nothing but its arguments, so in-run and offline audits agree.
/// Throws Error(InvalidConfig) if the genesis block carries no network
/// manifest.
AuditReport audit_chain(std::span<const ledger::Block> chain,
                        const contracts::Disclosure   &disclosure);

/// JSON line per finding, in report order.
std::string finding_to_json(const AuditFinding &finding);
void        write_report(std::ostream &out, const AuditReport &report);

}  // namespace netshare::audit
