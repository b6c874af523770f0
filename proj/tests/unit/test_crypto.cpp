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
#include "netshare/crypto/sha3.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

namespace netshare::crypto {
namespace {

std::string hash_hex(std::string_view s)
{
  return to_hex(sha3_256(s));
}

// FIPS 202 / NIST CAVP example values.
TEST(Sha3, EmptyMessage)
{
  EXPECT_EQ(hash_hex(""), "a7ffc6f8bf1ed76651c14756a061d662f580ff4de43b49fa82d80a4b80f8434a");
}

TEST(Sha3, Abc)
{
  EXPECT_EQ(hash_hex("abc"), "3a985da74fe225b2045c172d6bd390bd855f086e3e9d525b46bfe24511431532");
}

TEST(Sha3, TwoBlockMessage448Bits)
{
  EXPECT_EQ(hash_hex("abcdbcdecdefdefgefghfghighijhijkijkljklmklmnlmnomnopnopq"),
            "41c0dba2a9d6240849100376a8235e2c82e1b9998a999e21db32dd97496d3376");
}

TEST(Sha3, MillionA)
{
  Sha3_256          h;
  const std::string chunk(1000, 'a');
  for (int i = 0; i < 1000; ++i)
  {
    h.update(chunk);
  }
  EXPECT_EQ(to_hex(h.finish()), "5c8875ae474a3634ba4fd55ec85bffd661f32aca75c6d699d0cdcb6c115891c1");
}

TEST(Sha3, RateBoundaryLengthsMatchOpenSsl)
{
  for (std::size_t n : {0u, 1u, 134u, 135u, 136u, 137u, 271u, 272u, 273u, 1000u})
  {
    std::string msg(n, '\0');
    for (std::size_t i = 0; i < n; ++i)
    {
      msg[i] = static_cast<char>(i * 31 + 7);
    }
    EXPECT_EQ(sha3_256(msg), oracle::openssl_sha3_256(msg)) << "length " << n;
  }
}

TEST(Sha3, IncrementalSplitsAgreeWithOneShot)
{
  std::mt19937 gen(3);
  for (int round = 0; round < 50; ++round)
  {
    std::string msg(gen() % 700, '\0');
    for (auto &c : msg)
    {
      c = static_cast<char>(gen());
    }
    Sha3_256    h;
    std::size_t pos = 0;
    while (pos < msg.size())
    {
      const std::size_t step = std::min<std::size_t>(msg.size() - pos, gen() % 200);
      h.update(std::string_view(msg).substr(pos, step));
      pos += step;
    }
    const auto want = oracle::openssl_sha3_256(msg);
    EXPECT_EQ(h.finish(), want);
    EXPECT_EQ(sha3_256(msg), want);
  }
}

TEST(Sha3, ByteAndStringOverloadsAgree)
{
  const std::string s = "192.168.1.1|192.168.3.1";
  const Bytes       b(s.begin(), s.end());
  EXPECT_EQ(sha3_256(b), sha3_256(s));
}

TEST(Keccak, ZeroStatePermutationFirstLane)
{
  // Keccak-f[1600] applied once to the all-zero state (Keccak team test vector).
  std::array<std::uint64_t, 25> state{};
  keccak_f1600(state);
  EXPECT_EQ(state[0], 0xF1258F7940E1DDE7ull);
  EXPECT_EQ(state[1], 0x84D5CCF933C0478Aull);
}

}  // namespace
}  // namespace netshare::crypto
