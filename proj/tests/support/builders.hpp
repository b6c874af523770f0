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

#include "netshare/contracts/engine.hpp"
#include "netshare/contracts/preimage.hpp"
#include "netshare/ledger/ledger.hpp"
#include "netshare/network/scenario.hpp"

#include <memory>
#include <string>

namespace netshare::testing {

inline PdlId pdl(unsigned n)
{
  char buf[16];
  std::snprintf(buf, sizeof(buf), "pdl-%04u", n);
  return PdlId{buf};
}

inline ledger::LedgerConfig ledger_config(std::size_t authorities = 3, std::uint32_t tps_cap = 20,
                                          std::uint32_t mempool_cap = 200)
{
  ledger::LedgerConfig c;
  c.tps_cap     = tps_cap;
  c.mempool_cap = mempool_cap;
  for (std::size_t i = 0; i < authorities; ++i)
  {
    c.authorities.push_back({pdl(static_cast<unsigned>(i + 1)), "Auth" + std::to_string(i + 1)});
  }
  return c;
}

inline ledger::Transaction tx_from(const ledger::Ledger &l, const PdlId &who, SimTime at,
                                   std::uint8_t tag = 0x10)
{
  return ledger::Transaction{who, ContractAddress{}, l.next_nonce(who), at, Bytes{tag, 1, 2, 3}};
}

inline SimTime secs(std::int64_t s)
{
  return std::chrono::duration_cast<SimTime>(Seconds{s});
}

inline SimTime ms(std::int64_t m)
{
  return std::chrono::duration_cast<SimTime>(Millis{m});
}

/// Ledger and contract engine wired together, sealing on demand.
struct Chain
{
  explicit Chain(ledger::LedgerConfig config = ledger_config(), SimDuration deploy_delay = {})
    : ledger(std::move(config))
    , engine(ledger, contracts::EngineConfig{deploy_delay})
  {
    for (unsigned i = 0; i <= 12; ++i)
    {
      ledger.register_participant(pdl(i));
    }
  }

  /// Seals one block at the next due instant (or `now` when later).
  const ledger::Block &seal(SimTime now = SimTime{-1})
  {
    const SimTime at = std::max(now, ledger.next_seal_due());
    auto          r  = ledger.seal_block(at);
    const auto   &b  = std::get<ledger::Block>(r);
    engine.on_block(b);
    return ledger.tip();
  }

  ledger::Ledger           ledger;
  contracts::ContractEngine engine;
};

inline contracts::FlowPreimage preimage(unsigned node, std::int64_t ts_ms)
{
  return contracts::FlowPreimage{pdl(node), *Ipv4::parse("192.168.1.1"), *Ipv4::parse("192.168.3.1"),
                                 1609459200000 + ts_ms};
}

inline contracts::SlaTerms terms(std::int64_t lease_s = 60, std::int64_t target_ms = 15,
                                 std::int64_t penalty = 5)
{
  return contracts::SlaTerms{secs(lease_s), 100, Millis{target_ms}, penalty};
}

inline std::string scenario_path(const std::string &name)
{
  return std::string(NETSHARE_SCENARIO_DIR) + "/" + name;
}

}  // namespace netshare::testing
