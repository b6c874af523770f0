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

#include "netshare/orchestration/access.hpp"

#include "netshare/common/error.hpp"

#include <array>

namespace netshare::orchestration {
namespace {

constexpr std::array<std::pair<ParticipantKind, std::string_view>, 5> kKindNames = {{
    {ParticipantKind::Owner, "Owner"},
    {ParticipantKind::Tenant, "Tenant"},
    {ParticipantKind::OwnerTenant, "OwnerTenant"},
    {ParticipantKind::Vendor, "Vendor"},
    {ParticipantKind::Regulator, "Regulator"},
}};

}  // namespace

std::string_view to_string(ParticipantKind kind) noexcept
{
  for (const auto &[k, name] : kKindNames)
  {
    if (k == kind)
    {
      return name;
    }
  }
  return "?";
}

std::optional<ParticipantKind> parse_participant_kind(std::string_view text) noexcept
{
  for (const auto &[k, name] : kKindNames)
  {
    if (name == text)
    {
      return k;
    }
  }
  return std::nullopt;
}

bool may_request(ParticipantKind kind) noexcept
{
  return kind == ParticipantKind::Tenant || kind == ParticipantKind::OwnerTenant;
}

bool may_submit(ParticipantKind kind) noexcept
{
  return kind != ParticipantKind::Regulator;
}

const Participant &AccessControl::add(Participant participant)
{
  if (participant.label.empty())
  {
    throw Error(ErrorCode::InvalidParams, "participant label is empty");
  }
  if (by_label_.contains(participant.label))
  {
    throw Error(ErrorCode::DuplicateLabel, participant.label);
  }
  if (participants_.contains(participant.pdl_id))
  {
    throw Error(ErrorCode::InvalidParams, "pdl_id already issued: " + participant.pdl_id.str());
  }
  by_label_.emplace(participant.label, participant.pdl_id);
  auto id = participant.pdl_id;
  return participants_.emplace(id, std::move(participant)).first->second;
}

const Participant *AccessControl::find(const PdlId &pdl_id) const
{
  auto it = participants_.find(pdl_id);
  return it == participants_.end() ? nullptr : &it->second;
}

const Participant *AccessControl::find_label(std::string_view label) const
{
  auto it = by_label_.find(label);
  return it == by_label_.end() ? nullptr : find(it->second);
}

bool AccessControl::admits(const PdlId &tenant, std::string_view credential) const
{
  const auto *p = find(tenant);
  return p != nullptr && !revoked(tenant) && may_request(p->kind) && p->credential == credential;
}

}  // namespace netshare::orchestration
