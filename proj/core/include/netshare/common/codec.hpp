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

#include "netshare/common/error.hpp"
#include "netshare/common/types.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace netshare {

/// Big-endian, length-prefixed binary writer used for transaction payloads,
/// header preimages and state digests.
class ByteWriter
{
public:
  ByteWriter &u8(std::uint8_t v);
  ByteWriter &u16(std::uint16_t v);
  ByteWriter &u32(std::uint32_t v);
  ByteWriter &u64(std::uint64_t v);
  ByteWriter &i64(std::int64_t v) { return u64(static_cast<std::uint64_t>(v)); }
  ByteWriter &digest(const Digest &d);
  ByteWriter &str(std::string_view s);  // u16 length prefix
  ByteWriter &blob(std::span<const std::uint8_t> b);  // u32 length prefix
  ByteWriter &raw(std::span<const std::uint8_t> b);

  const Bytes &bytes() const & noexcept { return out_; }
  Bytes        take() && noexcept { return std::move(out_); }

private:
  Bytes out_;
};

/// Reader counterpart; every accessor throws Error(DecodeError) on truncation.
class ByteReader
{
public:
  explicit ByteReader(std::span<const std::uint8_t> in)
    : in_(in)
  {}

  std::uint8_t  u8();
  std::uint16_t u16();
  std::uint32_t u32();
  std::uint64_t u64();
  std::int64_t  i64() { return static_cast<std::int64_t>(u64()); }
  Digest        digest();
  std::string   str();
  Bytes         blob();

  bool        done() const noexcept { return pos_ == in_.size(); }
  std::size_t remaining() const noexcept { return in_.size() - pos_; }
  void        expect_done() const;

private:
  std::span<const std::uint8_t> take(std::size_t n);

  std::span<const std::uint8_t> in_;
  std::size_t                   pos_{0};
};

}  // namespace netshare
