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

#include "netshare/contracts/preimage.hpp"
#include "netshare/contracts/types.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace netshare::contracts {

/// One preimage a recording party hands to an auditor, with the digest it
/// claims was committed for it.
struct DisclosedRecord
{
  FlowId      flow_id;
  RecordRole  role{RecordRole::Source};
  Digest      claimed_digest{};
  std::string canonical;  // the encoding as disclosed; not necessarily valid

  bool operator==(const DisclosedRecord &) const = default;
};

struct Disclosure
{
  std::vector<DisclosedRecord> records;

  bool operator==(const Disclosure &) const = default;
};

DisclosedRecord disclose(const FlowId &flow, RecordRole role, const FlowPreimage &preimage);

/// Text form, one record per line:
///   flow_id TAB role TAB digest_hex TAB canonical
/// Blank lines are ignored. Throws Error(DisclosureParseError) naming the line.
Disclosure read_disclosure(std::istream &in);
Disclosure read_disclosure_file(const std::string &path);
void       write_disclosure(std::ostream &out, const Disclosure &disclosure);

}  // namespace netshare::contracts
