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
#include "netshare/contracts/preimage.hpp"
#include "netshare/network/routing.hpp"
#include "netshare/network/topology.hpp"

#include <optional>

namespace netshare::network {

/// Packet-processor overhead model. The delays are applied between capture
/// and the ledger submission.
struct ProcessorConfig
{
  SimDuration  capture_delay{650};  // microseconds
  SimDuration  hash_delay{310};
  /// Added to simulated milliseconds to form the recorded timestamp.
  std::int64_t clock_epoch_ms{0};

  SimDuration processing_delay() const noexcept { return capture_delay + hash_delay; }
};

struct Flow
{
  FlowId          id;
  RequestId       request;
  ContractAddress sla;
  Ipv4            src_ip;
  Ipv4            dst_ip;
  SimTime         start{0};
  Path            path;
  /// Arrival time at each device of path.devices; front() == start.
  std::vector<SimTime> arrivals;

  SimTime end() const { return arrivals.empty() ? start : arrivals.back(); }
};

/// Arrival times at each device along `path`, including SlowForward holding
/// delays at forwarding devices.
std::vector<SimTime> arrival_times(const Topology &topology, const Path &path, SimTime start);

/// Builds the preimage the device's processor would hash at true time `now`.
/// nullopt means the record is dropped. Inside a TEE, DelayedTimestamp and
/// DropReceipt have no effect.
std::optional<contracts::FlowPreimage> capture_endpoint(const Device &device, const Flow &flow,
                                                        SimTime now, const ProcessorConfig &config);

struct EndpointOutcome
{
  std::optional<contracts::FlowPreimage> preimage;  // nullopt: Dropped
  std::optional<ledger::Transaction>     tx;
};

/// Capture at `now`, then submit through the registry after the processing
/// delay. Ledger refusals propagate as ledger::LedgerRejected.
EndpointOutcome process_flow_endpoint(contracts::ContractEngine &engine,
                                      const ContractAddress &registry, const Device &device,
                                      const Flow &flow, contracts::RecordRole role, SimTime now,
                                      const ProcessorConfig &config);

}  // namespace netshare::network
