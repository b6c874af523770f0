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

#include "netshare/common/hex.hpp"

namespace netshare {
namespace {

constexpr char kDigits[] = "0123456789abcdef";

int nibble(char c) noexcept
{
  if (c >= '0' && c <= '9')
  {
    return c - '0';
  }
  if (c >= 'a' && c <= 'f')
  {
    return c - 'a' + 10;
  }
  return -1;
}

}  // namespace

std::string to_hex(std::span<const std::uint8_t> bytes)
{
  std::string out;
  out.reserve(bytes.size() * 2);
  for (auto b : bytes)
  {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0x0f]);
  }
  return out;
}

// Only lowercase digits are accepted so that every value has exactly one
// textual form in dumps.
std::optional<Bytes> from_hex(std::string_view text)
{
  if (text.size() % 2 != 0)
  {
    return std::nullopt;
  }
  Bytes out;
  out.reserve(text.size() / 2);
  for (std::size_t i = 0; i < text.size(); i += 2)
  {
    const int hi = nibble(text[i]);
    const int lo = nibble(text[i + 1]);
    if (hi < 0 || lo < 0)
    {
      return std::nullopt;
    }
    out.push_back(static_cast<std::uint8_t>((hi << 4) | lo));
  }
  return out;
}

std::optional<Digest> digest_from_hex(std::string_view text)
{
  if (text.size() != 64)
  {
    return std::nullopt;
  }
  auto bytes = from_hex(text);
  if (!bytes)
  {
    return std::nullopt;
  }
  Digest d{};
  std::copy(bytes->begin(), bytes->end(), d.begin());
  return d;
}

}  // namespace netshare
