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
#include "netshare/contracts/types.hpp"

#include <map>

namespace netshare::orchestration {

struct Allocation
{
  RequestId             request_id;
  PdlId                 tenant;
  contracts::AgreedPath path;
  ContractAddress       sla;
  SimTime               start{0};
  SimTime               end{0};  // exclusive
  std::int64_t          bandwidth{0};

  bool operator==(const Allocation &) const = default;
};

/// Committed load per link and per device over half-open windows.
class NetworkLog
{
public:
  void commit(const Allocation &allocation);
  void release(const RequestId &request_id);

  const Allocation *find(const RequestId &request_id) const;
  const std::map<RequestId, Allocation> &allocations() const noexcept { return allocations_; }

  std::int64_t link_load_at(const LinkId &link, SimTime t) const;
  std::int64_t device_load_at(const DeviceId &device, SimTime t) const;

  /// Maximum load on `link` at any instant of [from, to).
  std::int64_t peak_link_load(const LinkId &link, SimTime from, SimTime to) const;

private:
  std::map<RequestId, Allocation> allocations_;
};

}  // namespace netshare::orchestration
