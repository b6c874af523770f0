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

#include "netshare/audit/governance.hpp"
#include "netshare/contracts/disclosure.hpp"
#include "netshare/contracts/engine.hpp"
#include "netshare/ledger/ledger.hpp"
#include "netshare/network/processor.hpp"
#include "netshare/network/scenario.hpp"
#include "netshare/orchestration/manager.hpp"

#include <memory>
#include <queue>

namespace netshare::network {

/// Event tags in tie-break order for events at the same instant.
enum class EventTag
{
  RequestArrival,
  RequestReady,
  FlowStart,
  HopArrival,
  RecordSubmit,
  SealDue,
  Tick,
  Governance,
  IpChange,
};

std::string_view to_string(EventTag tag) noexcept;

/// One line of the event trace: a JSON object with at least "t_us" and
/// "event".
struct TraceRecord
{
  SimTime     at{0};
  std::string json;

  bool operator==(const TraceRecord &) const = default;
};

struct FlowRun
{
  Flow        flow;
  DeviceId    source;
  DeviceId    destination;
  bool        completed{false};
};

/// Per-run record of commit latencies of flow-record transactions.
struct CommitSample
{
  SimTime submitted{0};
  SimTime committed{0};
};

/// Deterministic discrete-event run of one scenario.
class Simulation
{
public:
  /// Throws Error(SpecValidationError) if the scenario cannot be bootstrapped.
  Simulation(const Scenario &scenario, std::uint64_t seed);
  ~Simulation();
  Simulation(const Simulation &)            = delete;
  Simulation &operator=(const Simulation &) = delete;

  /// Processes every queued event with time <= until, in (time, tag,
  /// sequence) order. Returns the trace produced by this call.
  std::vector<TraceRecord> advance(SimTime until);

  /// Runs to the scenario duration, then keeps sealing until in-flight work
  /// has committed.
  void run_to_completion();

  /// Throws Error(UnknownDevice).
  TraceRecord change_ip(const DeviceId &device, Ipv4 ip, SimTime now);

  SimTime now() const noexcept { return now_; }
  bool    idle() const noexcept;

  const Scenario                            &scenario() const noexcept { return scenario_; }
  const ledger::Ledger                      &ledger() const noexcept { return *ledger_; }
  ledger::Ledger                            &ledger() noexcept { return *ledger_; }
  const contracts::ContractEngine           &engine() const noexcept { return *engine_; }
  const orchestration::OrchestrationManager &orchestrator() const noexcept { return *orchestrator_; }
  const Topology                            &topology() const noexcept { return topology_; }
  const audit::Blacklist                    &blacklist() const noexcept { return *blacklist_; }
  const contracts::Disclosure               &disclosure() const noexcept { return disclosure_; }
  const std::vector<TraceRecord>            &trace() const noexcept { return trace_; }
  const std::vector<FlowRun>                &flows() const noexcept { return flows_; }
  const std::vector<CommitSample>           &commit_samples() const noexcept { return commits_; }

  /// Blacklists every party the audit found blacklist-eligible.
  void apply_auto_blacklist(const audit::AuditReport &report);

  struct Outcomes
  {
    std::uint64_t confirmed{0};
    std::uint64_t waitlisted{0};
    std::map<std::string, std::uint64_t> denied;
    std::uint64_t expired{0};
    std::uint64_t flows_started{0};
    std::uint64_t flows_skipped{0};
    std::uint64_t records_dropped{0};
    std::uint64_t records_rejected{0};
  };
  const Outcomes &outcomes() const noexcept { return outcomes_; }

private:
  struct Event
  {
    SimTime       at{0};
    EventTag      tag{EventTag::Tick};
    std::uint64_t seq{0};
    std::size_t   index{0};  // request, flow, ip change, or blacklist entry
    std::size_t   hop{0};    // position on the flow's path
    contracts::RecordRole                  role{contracts::RecordRole::Source};
    std::optional<contracts::FlowPreimage> preimage;
  };

  void schedule(Event event);
  void dispatch(const Event &event);
  void emit(std::string json);
  void on_request_arrival(const Event &event);
  void on_request_ready(const Event &event);
  void on_flow_start(const Event &event);
  void on_hop_arrival(const Event &event);
  void on_record_submit(const Event &event);
  void on_seal_due(const Event &event);
  void on_tick(const Event &event);
  void on_governance(const Event &event);
  void blacklist(const PdlId &node, const std::string &reason, SimTime now);
  void log_orchestration(const orchestration::OrchestrationEvent &event);
  orchestration::ResourceRequest to_request(const RequestSpec &spec) const;
  bool has_pending_work() const;

  Scenario                                             scenario_;
  std::uint64_t                                        seed_;
  Topology                                             topology_;
  ProcessorConfig                                      processor_;
  std::unique_ptr<orchestration::OrchestrationManager> orchestrator_;
  std::unique_ptr<ledger::Ledger>                      ledger_;
  std::unique_ptr<contracts::ContractEngine>           engine_;
  std::unique_ptr<audit::Blacklist>                    blacklist_;
  std::vector<FlowSpec>                                flow_schedule_;
  std::vector<FlowRun>                                 flows_;
  std::map<FlowId, std::size_t>                        flow_index_;
  contracts::Disclosure                                disclosure_;
  std::vector<TraceRecord>                             trace_;
  std::vector<CommitSample>                            commits_;
  Outcomes                                             outcomes_;
  std::vector<Event>                                   queue_;  // min-heap on (at, tag, seq)
  std::uint64_t                                        next_seq_{0};
  SimTime                                              now_{0};
  std::uint64_t                                        drain_blocks_{0};
};

}  // namespace netshare::network
