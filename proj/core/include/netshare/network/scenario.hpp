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

#include "netshare/network/topology.hpp"
#include "netshare/orchestration/access.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace netshare::network {

struct ParticipantSpec
{
  std::string                     label;
  orchestration::ParticipantKind kind{orchestration::ParticipantKind::Tenant};
};

struct DeviceSpec
{
  DeviceId    id;
  Ipv4        ip;
  std::string owner;   // participant label
  std::string vendor;  // participant label, may be empty
  Behavior    behavior;
  bool        tee{false};
};

struct RequestSpec
{
  RequestId    id;
  std::string  tenant;  // participant label
  DeviceId     src;
  DeviceId     dst;
  std::int64_t bandwidth{0};
  SimDuration  lease{0};
  Millis       latency_target{0};
  std::int64_t price{0};
  std::int64_t penalty_rate{0};
  SimTime      at{0};
};

struct FlowSpec
{
  FlowId    id;
  RequestId request;
  SimTime   at{0};
};

/// `count` flows with start times drawn uniformly from [from, to) in whole
/// milliseconds, using the run seed.
struct FlowGeneratorSpec
{
  RequestId     request;
  std::uint32_t count{0};
  SimTime       from{0};
  SimTime       to{0};
};

struct IpChangeSpec
{
  DeviceId device;
  Ipv4     ip;
  SimTime  at{0};
};

struct BlacklistSpec
{
  std::string node;  // device id or participant label
  std::string reason;
  SimTime     at{0};
};

struct LedgerSpec
{
  SimDuration              block_interval{Seconds{15}};
  std::uint32_t            tps_cap{20};
  std::uint32_t            mempool_cap{200};
  std::uint32_t            batch_size{0};
  std::uint32_t            max_payload{1024};
  std::vector<std::string> authorities;  // participant labels; empty: every owner
};

struct OverheadSpec
{
  SimDuration capture_delay{650};
  SimDuration hash_delay{310};
  SimDuration deploy_delay{Seconds{14}};
  SimDuration tick_interval{Seconds{1}};
};

struct GovernanceSpec
{
  bool                       quorum{false};
  bool                       auto_blacklist{false};
  std::vector<BlacklistSpec> blacklist;
};

struct Scenario
{
  std::string                    name;
  std::uint64_t                  seed{0};
  SimTime                        duration{0};
  std::int64_t                   clock_epoch_ms{0};
  LedgerSpec                     ledger;
  OverheadSpec                   overheads;
  bool                           full_path_recording{false};
  std::vector<ParticipantSpec>   participants;
  std::vector<DeviceSpec>        devices;
  std::vector<Link>              links;
  std::vector<RequestSpec>       requests;
  std::vector<FlowSpec>          flows;
  std::vector<FlowGeneratorSpec> flow_generators;
  std::vector<IpChangeSpec>      ip_changes;
  GovernanceSpec                 governance;
};

/// Parses the JSON scenario format. Syntax errors throw
/// Error(SpecParseError) with line and column; type, range and reference
/// errors throw Error(SpecValidationError) naming the field path.
Scenario parse_scenario(std::string_view text);
Scenario load_scenario(const std::string &path);

}  // namespace netshare::network
