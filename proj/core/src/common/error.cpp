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

#include "netshare/common/error.hpp"

namespace netshare {

std::string_view to_string(ErrorCode code) noexcept
{
  switch (code)
  {
  case ErrorCode::InvalidConfig: return "InvalidConfig";
  case ErrorCode::MalformedTransaction: return "MalformedTransaction";
  case ErrorCode::TimeReversal: return "TimeReversal";
  case ErrorCode::RangeBeyondTip: return "RangeBeyondTip";
  case ErrorCode::DecodeError: return "DecodeError";
  case ErrorCode::InvalidParams: return "InvalidParams";
  case ErrorCode::Unauthorized: return "Unauthorized";
  case ErrorCode::AlreadyActive: return "AlreadyActive";
  case ErrorCode::NotYetUsable: return "NotYetUsable";
  case ErrorCode::NotActive: return "NotActive";
  case ErrorCode::DuplicateRecord: return "DuplicateRecord";
  case ErrorCode::UnknownContract: return "UnknownContract";
  case ErrorCode::LedgerRejected: return "LedgerRejected";
  case ErrorCode::DuplicateLabel: return "DuplicateLabel";
  case ErrorCode::UnknownParticipant: return "UnknownParticipant";
  case ErrorCode::UnknownDevice: return "UnknownDevice";
  case ErrorCode::UnknownLink: return "UnknownLink";
  case ErrorCode::DanglingLink: return "DanglingLink";
  case ErrorCode::DuplicateDeviceId: return "DuplicateDeviceId";
  case ErrorCode::NoPath: return "NoPath";
  case ErrorCode::AlreadyBlacklisted: return "AlreadyBlacklisted";
  case ErrorCode::NoQuorum: return "NoQuorum";
  case ErrorCode::SpecParseError: return "SpecParseError";
  case ErrorCode::SpecValidationError: return "SpecValidationError";
  case ErrorCode::DumpParseError: return "DumpParseError";
  case ErrorCode::DisclosureParseError: return "DisclosureParseError";
  }
  return "Unknown";
}

}  // namespace netshare
