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

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>

namespace netshare::orchestration {

enum class ParticipantKind
{
  Owner,
  Tenant,
  OwnerTenant,
  Vendor,
  Regulator,
};

std::string_view               to_string(ParticipantKind kind) noexcept;
std::optional<ParticipantKind> parse_participant_kind(std::string_view text) noexcept;

/// Tenants and owner-tenants may lease resources.
bool may_request(ParticipantKind kind) noexcept;
/// Everyone except the regulator may write to the ledger.
bool may_submit(ParticipantKind kind) noexcept;

struct Participant
{
  PdlId           pdl_id;
  std::string     label;
  ParticipantKind kind{ParticipantKind::Tenant};
  std::string     credential;  // opaque token issued at registration

  bool operator==(const Participant &) const = default;
};

/// The access-control database: who is registered, with which credential,
/// and who has been revoked.
class AccessControl
{
public:
  /// Throws Error(DuplicateLabel) or Error(InvalidParams) for an empty label.
  const Participant &add(Participant participant);

  const Participant *find(const PdlId &pdl_id) const;
  const Participant *find_label(std::string_view label) const;

  /// Registered, not revoked, allowed to request, and presenting the
  /// credential issued at registration.
  bool admits(const PdlId &tenant, std::string_view credential) const;

  void revoke(const PdlId &pdl_id) { revoked_.insert(pdl_id); }
  bool revoked(const PdlId &pdl_id) const { return revoked_.contains(pdl_id); }

  const std::map<PdlId, Participant> &participants() const noexcept { return participants_; }

private:
  std::map<PdlId, Participant>        participants_;
  std::map<std::string, PdlId, std::less<>> by_label_;
  std::set<PdlId>                     revoked_;
};

}  // namespace netshare::orchestration
