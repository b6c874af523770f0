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

#include "netshare/ledger/genesis.hpp"

#include "netshare/common/codec.hpp"

namespace netshare::ledger {

Bytes encode_genesis_config(const LedgerConfig &config)
{
  ByteWriter w;
  w.u8(kGenesisConfigOpcode)
      .i64(config.block_interval.count())
      .u32(config.tps_cap)
      .u32(config.mempool_cap)
      .u32(config.batch_size)
      .u32(config.max_payload)
      .u16(static_cast<std::uint16_t>(config.authorities.size()));
  for (const auto &a : config.authorities)
  {
    w.str(a.pdl_id.str()).str(a.label);
  }
  return std::move(w).take();
}

LedgerConfig decode_genesis_config(std::span<const std::uint8_t> payload)
{
  ByteReader r(payload);
  if (r.u8() != kGenesisConfigOpcode)
  {
    throw Error(ErrorCode::DecodeError, "not a genesis configuration entry");
  }
  LedgerConfig config;
  config.block_interval = SimDuration{r.i64()};
  config.tps_cap        = r.u32();
  config.mempool_cap    = r.u32();
  config.batch_size     = r.u32();
  config.max_payload    = r.u32();
  const auto n          = r.u16();
  for (std::uint16_t i = 0; i < n; ++i)
  {
    Authority a;
    a.pdl_id = PdlId{r.str()};
    a.label  = r.str();
    config.authorities.push_back(std::move(a));
  }
  r.expect_done();
  return config;
}

std::optional<LedgerConfig> config_from_genesis(const Block &genesis)
{
  if (genesis.transactions.empty())
  {
    return std::nullopt;
  }
  const auto &first = genesis.transactions.front();
  if (first.submitter != kGenesisSubmitter)
  {
    return std::nullopt;
  }
  try
  {
    auto config = decode_genesis_config(first.payload);
    config.validate();
    return config;
  }
  catch (const Error &)
  {
    return std::nullopt;
  }
}

}  // namespace netshare::ledger
