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

#include "netshare/contracts/preimage.hpp"

#include "netshare/crypto/sha3.hpp"

#include <charconv>

namespace netshare::contracts {

std::string FlowPreimage::encode() const
{
  std::string out = node_id.str();
  out.push_back('|');
  out += src_ip.str();
  out.push_back('|');
  out += dst_ip.str();
  out.push_back('|');
  out += std::to_string(timestamp_ms);
  return out;
}

Digest FlowPreimage::digest() const
{
  return crypto::sha3_256(encode());
}

std::optional<FlowPreimage> FlowPreimage::parse(std::string_view text)
{
  std::string_view parts[4];
  std::size_t      start = 0;
  for (int i = 0; i < 3; ++i)
  {
    const auto bar = text.find('|', start);
    if (bar == std::string_view::npos)
    {
      return std::nullopt;
    }
    parts[i] = text.substr(start, bar - start);
    start    = bar + 1;
  }
  parts[3] = text.substr(start);

  if (parts[0].empty() || parts[0].find_first_of(" \t\r\n|") != std::string_view::npos)
  {
    return std::nullopt;
  }
  auto src = Ipv4::parse(parts[1]);
  auto dst = Ipv4::parse(parts[2]);
  if (!src || !dst || parts[3].empty())
  {
    return std::nullopt;
  }
  std::int64_t ts = 0;
  const auto [ptr, ec] = std::from_chars(parts[3].data(), parts[3].data() + parts[3].size(), ts);
  if (ec != std::errc{} || ptr != parts[3].data() + parts[3].size())
  {
    return std::nullopt;
  }
  FlowPreimage p{PdlId{std::string(parts[0])}, *src, *dst, ts};
  // Reject non-canonical spellings such as "+5" or "007".
  if (p.encode() != text)
  {
    return std::nullopt;
  }
  return p;
}

}  // namespace netshare::contracts
