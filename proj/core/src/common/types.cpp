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

#include "netshare/common/types.hpp"

#include "netshare/common/hex.hpp"

#include <charconv>

namespace netshare {

std::string ContractAddress::hex() const
{
  return to_hex(bytes);
}

std::optional<ContractAddress> ContractAddress::from_hex(std::string_view text)
{
  auto d = digest_from_hex(text);
  if (!d)
  {
    return std::nullopt;
  }
  return ContractAddress{*d};
}

std::optional<Ipv4> Ipv4::parse(std::string_view text)
{
  std::uint32_t value = 0;
  std::size_t   pos   = 0;
  for (int octet = 0; octet < 4; ++octet)
  {
    if (octet > 0)
    {
      if (pos >= text.size() || text[pos] != '.')
      {
        return std::nullopt;
      }
      ++pos;
    }
    const std::size_t start = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9')
    {
      ++pos;
    }
    const std::size_t len = pos - start;
    if (len == 0 || len > 3 || (len > 1 && text[start] == '0'))
    {
      return std::nullopt;
    }
    unsigned part = 0;
    std::from_chars(text.data() + start, text.data() + pos, part);
    if (part > 255)
    {
      return std::nullopt;
    }
    value = (value << 8) | part;
  }
  if (pos != text.size())
  {
    return std::nullopt;
  }
  return Ipv4{value};
}

std::string Ipv4::str() const
{
  std::string out;
  for (int shift = 24; shift >= 0; shift -= 8)
  {
    if (!out.empty())
    {
      out.push_back('.');
    }
    out += std::to_string((value_ >> shift) & 0xffu);
  }
  return out;
}

}  // namespace netshare
