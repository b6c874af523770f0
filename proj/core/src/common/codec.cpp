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

#include "netshare/common/codec.hpp"

#include <limits>

namespace netshare {

ByteWriter &ByteWriter::u8(std::uint8_t v)
{
  out_.push_back(v);
  return *this;
}

ByteWriter &ByteWriter::u16(std::uint16_t v)
{
  out_.push_back(static_cast<std::uint8_t>(v >> 8));
  out_.push_back(static_cast<std::uint8_t>(v));
  return *this;
}

ByteWriter &ByteWriter::u32(std::uint32_t v)
{
  for (int shift = 24; shift >= 0; shift -= 8)
  {
    out_.push_back(static_cast<std::uint8_t>(v >> shift));
  }
  return *this;
}

ByteWriter &ByteWriter::u64(std::uint64_t v)
{
  for (int shift = 56; shift >= 0; shift -= 8)
  {
    out_.push_back(static_cast<std::uint8_t>(v >> shift));
  }
  return *this;
}

ByteWriter &ByteWriter::digest(const Digest &d)
{
  out_.insert(out_.end(), d.begin(), d.end());
  return *this;
}

ByteWriter &ByteWriter::str(std::string_view s)
{
  if (s.size() > std::numeric_limits<std::uint16_t>::max())
  {
    throw Error(ErrorCode::InvalidParams, "string field longer than 65535 bytes");
  }
  u16(static_cast<std::uint16_t>(s.size()));
  out_.insert(out_.end(), s.begin(), s.end());
  return *this;
}

ByteWriter &ByteWriter::blob(std::span<const std::uint8_t> b)
{
  u32(static_cast<std::uint32_t>(b.size()));
  return raw(b);
}

ByteWriter &ByteWriter::raw(std::span<const std::uint8_t> b)
{
  out_.insert(out_.end(), b.begin(), b.end());
  return *this;
}

std::span<const std::uint8_t> ByteReader::take(std::size_t n)
{
  if (remaining() < n)
  {
    throw Error(ErrorCode::DecodeError, "truncated input");
  }
  auto out = in_.subspan(pos_, n);
  pos_ += n;
  return out;
}

std::uint8_t ByteReader::u8()
{
  return take(1)[0];
}

std::uint16_t ByteReader::u16()
{
  auto b = take(2);
  return static_cast<std::uint16_t>((b[0] << 8) | b[1]);
}

std::uint32_t ByteReader::u32()
{
  std::uint32_t v = 0;
  for (auto b : take(4))
  {
    v = (v << 8) | b;
  }
  return v;
}

std::uint64_t ByteReader::u64()
{
  std::uint64_t v = 0;
  for (auto b : take(8))
  {
    v = (v << 8) | b;
  }
  return v;
}

Digest ByteReader::digest()
{
  Digest d{};
  auto   b = take(d.size());
  std::copy(b.begin(), b.end(), d.begin());
  return d;
}

std::string ByteReader::str()
{
  const auto n = u16();
  auto       b = take(n);
  return std::string(b.begin(), b.end());
}

Bytes ByteReader::blob()
{
  const auto n = u32();
  auto       b = take(n);
  return Bytes(b.begin(), b.end());
}

void ByteReader::expect_done() const
{
  if (!done())
  {
    throw Error(ErrorCode::DecodeError, "trailing bytes");
  }
}

}  // namespace netshare
