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

#include "netshare/contracts/disclosure.hpp"

#include "netshare/common/error.hpp"
#include "netshare/common/hex.hpp"

#include <fstream>
#include <istream>
#include <ostream>

namespace netshare::contracts {

DisclosedRecord disclose(const FlowId &flow, RecordRole role, const FlowPreimage &preimage)
{
  return {flow, role, preimage.digest(), preimage.encode()};
}

Disclosure read_disclosure(std::istream &in)
{
  Disclosure  out;
  std::string line;
  std::size_t line_no = 0;
  auto        fail    = [&](const std::string &what) {
    throw Error(ErrorCode::DisclosureParseError, "line " + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(in, line))
  {
    ++line_no;
    if (line.empty())
    {
      continue;
    }
    std::vector<std::string> fields;
    std::size_t              pos = 0;
    for (int i = 0; i < 3; ++i)
    {
      const auto tab = line.find('\t', pos);
      if (tab == std::string::npos)
      {
        fail("expected 4 tab-separated fields");
      }
      fields.push_back(line.substr(pos, tab - pos));
      pos = tab + 1;
    }
    fields.push_back(line.substr(pos));  // canonical keeps any further tabs

    DisclosedRecord r;
    if (fields[0].empty())
    {
      fail("empty flow id");
    }
    r.flow_id = FlowId{fields[0]};
    auto role = parse_role(fields[1]);
    if (!role)
    {
      fail("unknown role '" + fields[1] + "'");
    }
    r.role   = *role;
    auto dig = digest_from_hex(fields[2]);
    if (!dig)
    {
      fail("digest is not 64 lowercase hex characters");
    }
    r.claimed_digest = *dig;
    r.canonical      = std::move(fields[3]);
    out.records.push_back(std::move(r));
  }
  return out;
}

Disclosure read_disclosure_file(const std::string &path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
  {
    throw Error(ErrorCode::DisclosureParseError, "cannot open " + path);
  }
  return read_disclosure(in);
}

void write_disclosure(std::ostream &out, const Disclosure &disclosure)
{
  for (const auto &r : disclosure.records)
  {
    out << r.flow_id.str() << '\t' << to_string(r.role) << '\t' << to_hex(r.claimed_digest) << '\t'
        << r.canonical << '\n';
  }
}

}  // namespace netshare::contracts
