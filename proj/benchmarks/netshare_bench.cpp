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

#include "netshare/cli/runner.hpp"
#include "netshare/contracts/preimage.hpp"
#include "netshare/crypto/sha3.hpp"
#include "netshare/ledger/ledger.hpp"
#include "netshare/network/routing.hpp"
#include "netshare/network/scenario.hpp"

#include <benchmark/benchmark.h>

#include <cstdio>

namespace {

using namespace netshare;

PdlId pdl(unsigned n)
{
  char buf[16];
  std::snprintf(buf, sizeof(buf), "pdl-%04u", n);
  return PdlId{buf};
}

void BM_Sha3(benchmark::State &state)
{
  const std::string input(static_cast<std::size_t>(state.range(0)), 'x');
  for (auto _ : state)
  {
    benchmark::DoNotOptimize(crypto::sha3_256(input));
  }
  state.SetBytesProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Sha3)->Arg(0)->Arg(52)->Arg(136)->Arg(4096);

void BM_PreimageDigest(benchmark::State &state)
{
  const contracts::FlowPreimage p{pdl(7), *Ipv4::parse("192.168.1.1"), *Ipv4::parse("192.168.3.1"),
                                  1609459220000};
  for (auto _ : state)
  {
    benchmark::DoNotOptimize(p.digest());
  }
}
BENCHMARK(BM_PreimageDigest);

ledger::LedgerConfig config(std::uint32_t tps)
{
  ledger::LedgerConfig c;
  c.tps_cap     = tps;
  c.mempool_cap = tps * 15;
  c.authorities = {{pdl(1), "A"}, {pdl(2), "B"}, {pdl(3), "C"}};
  return c;
}

// One full block: tps_cap * 15 admissions, then a seal.
void BM_LedgerFillAndSeal(benchmark::State &state)
{
  const auto tps = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state)
  {
    ledger::Ledger l(config(tps));
    l.register_participant(pdl(9));
    for (std::uint32_t i = 0; i < tps * 15; ++i)
    {
      const SimTime at{static_cast<std::int64_t>(i / tps) * 1'000'000 + static_cast<std::int64_t>(i % tps)};
      l.submit_transaction(ledger::Transaction{pdl(9), ContractAddress{}, l.next_nonce(pdl(9)), at,
                                               Bytes(40, 0x03)},
                           at);
    }
    benchmark::DoNotOptimize(l.seal_block(l.next_seal_due()));
  }
  state.SetItemsProcessed(state.iterations() * tps * 15);
}
BENCHMARK(BM_LedgerFillAndSeal)->Arg(20)->Arg(200);

void BM_VerifyChain(benchmark::State &state)
{
  const auto     c = config(20);
  ledger::Ledger l(c);
  l.register_participant(pdl(9));
  for (std::int64_t b = 0; b < state.range(0); ++b)
  {
    const SimTime due = l.next_seal_due();
    for (int i = 0; i < 20; ++i)
    {
      const SimTime at = due - SimDuration{Seconds{1}} + SimDuration{i};
      l.submit_transaction(ledger::Transaction{pdl(9), ContractAddress{}, l.next_nonce(pdl(9)), at,
                                               Bytes(40, 0x03)},
                           at);
    }
    l.seal_block(due);
  }
  for (auto _ : state)
  {
    benchmark::DoNotOptimize(ledger::verify_chain(l.chain(), c));
  }
}
BENCHMARK(BM_VerifyChain)->Arg(20)->Arg(200);

// n x n grid, latency and cost varying by position.
network::Topology grid(int n)
{
  network::TopologySpec s;
  auto                  id = [](int r, int c) { return DeviceId{"D" + std::to_string(r) + "_" + std::to_string(c)}; };
  for (int r = 0; r < n; ++r)
  {
    for (int c = 0; c < n; ++c)
    {
      network::Device d;
      d.id = id(r, c);
      s.devices.push_back(d);
      if (c + 1 < n)
      {
        s.links.push_back({LinkId{"H" + d.id.str()}, d.id, id(r, c + 1), 100, Millis{1 + (r + c) % 4}, 1 + c % 3});
      }
      if (r + 1 < n)
      {
        s.links.push_back({LinkId{"V" + d.id.str()}, d.id, id(r + 1, c), 100, Millis{1 + (r * c) % 5}, 1 + r % 2});
      }
    }
  }
  return network::Topology::build(std::move(s));
}

void BM_ShortestPath(benchmark::State &state)
{
  const int  n   = static_cast<int>(state.range(0));
  const auto t   = grid(n);
  const auto src = DeviceId{"D0_0"};
  const auto dst = DeviceId{"D" + std::to_string(n - 1) + "_" + std::to_string(n - 1)};
  for (auto _ : state)
  {
    benchmark::DoNotOptimize(network::shortest_path(t, src, dst, network::RouteMetric::Latency));
  }
}
BENCHMARK(BM_ShortestPath)->Arg(3)->Arg(4)->Arg(5);

void BM_DemoRun(benchmark::State &state)
{
  const auto scenario = network::load_scenario(NETSHARE_SCENARIO_DIR "/demo_triangle.json");
  for (auto _ : state)
  {
    benchmark::DoNotOptimize(cli::run_scenario(scenario, scenario.seed));
  }
}
BENCHMARK(BM_DemoRun)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
