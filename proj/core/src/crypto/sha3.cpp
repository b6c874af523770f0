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

#include "netshare/crypto/sha3.hpp"

#include <bit>
#include <stdexcept>

namespace netshare::crypto {
namespace {

constexpr std::array<std::uint64_t, 24> kRoundConstants = {
    0x0000000000000001ULL, 0x0000000000008082ULL, 0x800000000000808aULL,
    0x8000000080008000ULL, 0x000000000000808bULL, 0x0000000080000001ULL,
    0x8000000080008081ULL, 0x8000000000008009ULL, 0x000000000000008aULL,
    0x0000000000000088ULL, 0x0000000080008009ULL, 0x000000008000000aULL,
    0x000000008000808bULL, 0x800000000000008bULL, 0x8000000000008089ULL,
    0x8000000000008003ULL, 0x8000000000008002ULL, 0x8000000000000080ULL,
    0x000000000000800aULL, 0x800000008000000aULL, 0x8000000080008081ULL,
    0x8000000000008080ULL, 0x0000000080000001ULL, 0x8000000080008008ULL,
};

// Rotation offsets r[x][y], indexed as x + 5*y.
constexpr std::array<int, 25> kRotations = {
    0,  1,  62, 28, 27,  //
    36, 44, 6,  55, 20,  //
    3,  10, 43, 25, 39,  //
    41, 45, 15, 21, 8,   //
    18, 2,  61, 56, 14,
};

constexpr std::size_t lane(std::size_t x, std::size_t y) noexcept
{
  return x + 5 * y;
}

}  // namespace

void keccak_f1600(std::array<std::uint64_t, 25> &a) noexcept
{
  for (auto rc : kRoundConstants)
  {
    // theta
    std::array<std::uint64_t, 5> c{};
    for (std::size_t x = 0; x < 5; ++x)
    {
      c[x] = a[lane(x, 0)] ^ a[lane(x, 1)] ^ a[lane(x, 2)] ^ a[lane(x, 3)] ^ a[lane(x, 4)];
    }
    for (std::size_t x = 0; x < 5; ++x)
    {
      const std::uint64_t d = c[(x + 4) % 5] ^ std::rotl(c[(x + 1) % 5], 1);
      for (std::size_t y = 0; y < 5; ++y)
      {
        a[lane(x, y)] ^= d;
      }
    }

    // rho and pi: B[y, 2x+3y] = rot(A[x, y], r[x, y])
    std::array<std::uint64_t, 25> b{};
    for (std::size_t x = 0; x < 5; ++x)
    {
      for (std::size_t y = 0; y < 5; ++y)
      {
        b[lane(y, (2 * x + 3 * y) % 5)] = std::rotl(a[lane(x, y)], kRotations[lane(x, y)]);
      }
    }

    // chi
    for (std::size_t x = 0; x < 5; ++x)
    {
      for (std::size_t y = 0; y < 5; ++y)
      {
        a[lane(x, y)] = b[lane(x, y)] ^ (~b[lane((x + 1) % 5, y)] & b[lane((x + 2) % 5, y)]);
      }
    }

    // iota
    a[0] ^= rc;
  }
}

void Sha3_256::absorb_block()
{
  for (std::size_t i = 0; i < kRateBytes / 8; ++i)
  {
    std::uint64_t word = 0;
    for (std::size_t j = 0; j < 8; ++j)
    {
      word |= static_cast<std::uint64_t>(buffer_[8 * i + j]) << (8 * j);
    }
    state_[i] ^= word;
  }
  keccak_f1600(state_);
  buffered_ = 0;
}

Sha3_256 &Sha3_256::update(std::span<const std::uint8_t> data)
{
  if (finished_)
  {
    throw std::logic_error("Sha3_256::update after finish");
  }
  for (auto byte : data)
  {
    buffer_[buffered_++] = byte;
    if (buffered_ == kRateBytes)
    {
      absorb_block();
    }
  }
  return *this;
}

Sha3_256 &Sha3_256::update(std::string_view data)
{
  return update(std::span(reinterpret_cast<const std::uint8_t *>(data.data()), data.size()));
}

Digest Sha3_256::finish()
{
  if (finished_)
  {
    throw std::logic_error("Sha3_256::finish called twice");
  }
  finished_ = true;

  // pad10*1 with the SHA-3 domain bits 01.
  std::fill(buffer_.begin() + static_cast<std::ptrdiff_t>(buffered_), buffer_.end(), 0);
  buffer_[buffered_] ^= 0x06;
  buffer_[kRateBytes - 1] ^= 0x80;
  absorb_block();

  Digest out{};
  for (std::size_t i = 0; i < kDigestBytes; ++i)
  {
    out[i] = static_cast<std::uint8_t>(state_[i / 8] >> (8 * (i % 8)));
  }
  return out;
}

Digest sha3_256(std::span<const std::uint8_t> data)
{
  return Sha3_256{}.update(data).finish();
}

Digest sha3_256(std::string_view data)
{
  return Sha3_256{}.update(data).finish();
}

}  // namespace netshare::crypto
