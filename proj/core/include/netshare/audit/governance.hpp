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

#include "netshare/audit/audit.hpp"
#include "netshare/ledger/ledger.hpp"

#include <functional>

namespace netshare::audit {

struct BlacklistEntry
{
  PdlId       node;
  std::string reason;
  SimTime     at{0};

  bool operator==(const BlacklistEntry &) const = default;
};

/// Governance blacklist. Entering the list revokes the node's ledger
/// admission; what it already committed stays on chain.
class Blacklist
{
public:
  Blacklist(ledger::Ledger &ledger, bool quorum);

  /// Throws Error(NoQuorum) without a governance quorum and
  /// Error(AlreadyBlacklisted) for a repeat.
  const BlacklistEntry &blacklist_node(const PdlId &node, std::string reason, SimTime now);

  bool contains(const PdlId &node) const;
  const std::vector<BlacklistEntry> &entries() const noexcept { return entries_; }

  /// Called after each successful blacklisting.
  void on_blacklist(std::function<void(const BlacklistEntry &)> hook) { hook_ = std::move(hook); }

private:
  ledger::Ledger                             &ledger_;
  bool                                        quorum_;
  std::vector<BlacklistEntry>                 entries_;
  std::function<void(const BlacklistEntry &)> hook_;
};

/// Read-only window for the regulator: the chain and the findings, nothing
/// that mutates either.
class RegulatorView
{
public:
  RegulatorView(const ledger::Ledger &ledger, const AuditReport &report)
    : ledger_(ledger)
    , report_(report)
  {}

  std::span<const ledger::Block>   chain() const { return ledger_.chain(); }
  const std::vector<AuditFinding> &findings() const noexcept { return report_.findings; }
  ledger::VerifyResult             verify() const { return ledger::verify_chain(ledger_.chain()); }

private:
  const ledger::Ledger &ledger_;
  const AuditReport    &report_;
};

}  // namespace netshare::audit
