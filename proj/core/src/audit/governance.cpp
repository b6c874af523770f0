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

#include "netshare/audit/governance.hpp"

#include "netshare/common/error.hpp"

#include <algorithm>

namespace netshare::audit {

Blacklist::Blacklist(ledger::Ledger &ledger, bool quorum)
  : ledger_(ledger)
  , quorum_(quorum)
{}

const BlacklistEntry &Blacklist::blacklist_node(const PdlId &node, std::string reason, SimTime now)
{
  if (!quorum_)
  {
    throw Error(ErrorCode::NoQuorum, "governance quorum not reached for " + node.str());
  }
  if (contains(node))
  {
    throw Error(ErrorCode::AlreadyBlacklisted, node.str());
  }
  ledger_.deregister_participant(node);
  entries_.push_back({node, std::move(reason), now});
  if (hook_)
  {
    hook_(entries_.back());
  }
  return entries_.back();
}

bool Blacklist::contains(const PdlId &node) const
{
  return std::any_of(entries_.begin(), entries_.end(),
                     [&](const BlacklistEntry &e) { return e.node == node; });
}

}  // namespace netshare::audit
