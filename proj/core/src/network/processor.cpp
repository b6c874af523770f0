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

#include "netshare/network/processor.hpp"

namespace netshare::network {

std::vector<SimTime> arrival_times(const Topology &t, const Path &path, SimTime start)
{
  std::vector<SimTime> out;
  out.reserve(path.devices.size());
  SimTime now = start;
  out.push_back(now);
  for (std::size_t i = 0; i < path.links.size(); ++i)
  {
    const auto &b = t.device(path.devices[i]).behavior;
    if (b.kind == BehaviorKind::SlowForward)
    {
      now += b.amount;
    }
    now += t.link(path.links[i]).latency;
    out.push_back(now);
  }
  return out;
}

std::optional<contracts::FlowPreimage> capture_endpoint(const Device &device, const Flow &flow,
                                                        SimTime now, const ProcessorConfig &config)
{
  const bool shielded = device.tee_enabled;
  if (device.behavior.kind == BehaviorKind::DropReceipt && !shielded)
  {
    return std::nullopt;
  }
  std::int64_t ts = config.clock_epoch_ms + std::chrono::floor<Millis>(now).count();
  if (device.behavior.kind == BehaviorKind::DelayedTimestamp && !shielded)
  {
    ts += device.behavior.amount.count();
  }
  return contracts::FlowPreimage{device.pdl_id, flow.src_ip, flow.dst_ip, ts};
}

EndpointOutcome process_flow_endpoint(contracts::ContractEngine &engine,
                                      const ContractAddress &registry, const Device &device,
                                      const Flow &flow, contracts::RecordRole role, SimTime now,
                                      const ProcessorConfig &config)
{
  EndpointOutcome out;
  out.preimage = capture_endpoint(device, flow, now, config);
  if (out.preimage)
  {
    out.tx = engine.record_flow(registry, *out.preimage, role, device.pdl_id,
                                now + config.processing_delay());
  }
  return out;
}

}  // namespace netshare::network
