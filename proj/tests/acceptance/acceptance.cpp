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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include "netshare/audit/audit.hpp"
#include "netshare/cli/runner.hpp"
#include "netshare/common/hex.hpp"
#include "netshare/common/random.hpp"
#include "netshare/contracts/payload.hpp"
#include "netshare/contracts/preimage.hpp"
#include "netshare/crypto/sha3.hpp"
#include "netshare/ledger/ledger.hpp"
#include "netshare/network/simulation.hpp"

#include "builders.hpp"
#include "oracles.hpp"
#include "orchestration_rig.hpp"
#include "topologies.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>

namespace {

using namespace netshare;
using namespace netshare::testing;

struct Outcome
{
  bool        pass{false};
  std::string detail;
};

double elapsed_s(std::chrono::steady_clock::time_point since)
{
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - since).count();
}

std::string fmt(const char *format, auto... args)
{
  char buf[512];
  std::snprintf(buf, sizeof(buf), format, args...);
  return buf;
}

double to_s(SimDuration d)
{
  return std::chrono::duration<double>(d).count();
}

const std::vector<std::string> kBundled = {"demo_triangle.json", "faulty_triangle.json", "fraud_triangle.json",
                                           "full_path_line.json", "tee_triangle.json"};

// 1 ---------------------------------------------------------------------------

Outcome commit_latency_bound()
{
  const auto start = std::chrono::steady_clock::now();
  const auto scenario = network::load_scenario(scenario_path("demo_triangle.json"));
  network::Simulation sim(scenario, scenario.seed);
  sim.run_to_completion();
  const double runtime = elapsed_s(start);

  const auto &samples = sim.commit_samples();
  if (samples.empty())
  {
    return {false, "no flow-record commits"};
  }
  const double interval = to_s(scenario.ledger.block_interval);
  double       sum = 0, worst = 0;
  for (const auto &s : samples)
  {
    const double d = to_s(s.committed - s.submitted);
    sum += d;
    worst = std::max(worst, d);
  }
  const double mean      = sum / static_cast<double>(samples.size());
  const auto  &rejected  = sim.ledger().counters().rejected;
  const auto   saturated = rejected.count(ledger::RejectReason::RateCapped) +
                         rejected.count(ledger::RejectReason::MempoolFull);
  const bool pass = worst <= interval && std::abs(mean - interval / 2) <= 1.0 && saturated == 0 && runtime < 5.0;
  return {pass, fmt("%zu records, mean %.3f s, max %.3f s, saturation rejections %zu, runtime %.2f s",
                    samples.size(), mean, worst, saturated, runtime)};
}

// 2 ---------------------------------------------------------------------------

Outcome preimage_envelope()
{
  auto scenario = network::load_scenario(scenario_path("demo_triangle.json"));
  DeterministicRng  rng(20260101);
  std::set<std::string> used;
  for (auto &d : scenario.devices)
  {
    std::string ip;
    do
    {
      ip = fmt("192.168.%d.%d", static_cast<int>(rng.between(0, 255)), static_cast<int>(rng.between(1, 254)));
    } while (!used.insert(ip).second);
    d.ip = *Ipv4::parse(ip);
  }
  scenario.flow_generators.at(0).count = 1000;

  const auto start = std::chrono::steady_clock::now();
  network::Simulation sim(scenario, scenario.seed);
  sim.run_to_completion();
  const double runtime = elapsed_s(start);

  std::set<FlowId> flows;
  std::size_t      in_range = 0, min_len = SIZE_MAX, max_len = 0;
  const auto      &records  = sim.disclosure().records;
  for (const auto &r : records)
  {
    flows.insert(r.flow_id);
    const auto n = r.canonical.size();
    min_len      = std::min(min_len, n);
    max_len      = std::max(max_len, n);
    if (n >= contracts::kPreimageMinBytes && n <= contracts::kPreimageMaxBytes &&
        contracts::FlowPreimage::parse(r.canonical))
    {
      ++in_range;
    }
  }
  const bool pass = flows.size() >= 1000 && in_range == records.size() && runtime < 1.0;
  return {pass, fmt("%zu flows, %zu/%zu encodings in [%zu, %zu] bytes (observed %zu..%zu), runtime %.2f s",
                    flows.size(), in_range, records.size(), contracts::kPreimageMinBytes,
                    contracts::kPreimageMaxBytes, min_len, max_len, runtime)};
}

// 3 ---------------------------------------------------------------------------

Outcome digest_correctness()
{
  DeterministicRng rng(3);
  int              matched = 0;
  for (int i = 0; i < 20; ++i)
  {
    contracts::FlowPreimage p{
        pdl(static_cast<unsigned>(rng.between(1, 9999))),
        *Ipv4::parse(fmt("192.168.%d.%d", static_cast<int>(rng.between(0, 255)), static_cast<int>(rng.between(0, 255)))),
        *Ipv4::parse(fmt("192.168.%d.%d", static_cast<int>(rng.between(0, 255)), static_cast<int>(rng.between(0, 255)))),
        1609459200000 + rng.between(0, 86'400'000)};
    if (oracle::hex(oracle::openssl_sha3_256(p.encode())) == to_hex(p.digest()))
    {
      ++matched;
    }
  }

  struct Vector
  {
    std::string input;
    const char *digest;
  };
  const std::vector<Vector> nist = {
      {"", "a7ffc6f8bf1ed76651c14756a061d662f580ff4de43b49fa82d80a4b80f8434a"},
      {"abc", "3a985da74fe225b2045c172d6bd390bd855f086e3e9d525b46bfe24511431532"},
      {"abcdbcdecdefdefgefghfghighijhijkijkljklmklmnlmnomnopnopq",
       "41c0dba2a9d6240849100376a8235e2c82e1b9998a999e21db32dd97496d3376"},
      {"abcdefghbcdefghicdefghijdefghijkefghijklfghijklmghijklmnhijklmnoijklmnopjklmnopqklmnopqrlmnopqrsmnopqrstnopqrstu",
       "916f6061fe879741ca6469b43971dfdb28b1a32dc36cb3254e812be27aad1d18"},
      {std::string(1'000'000, 'a'), "5c8875ae474a3634ba4fd55ec85bffd661f32aca75c6d699d0cdcb6c115891c1"},
  };
  int nist_ok = 0;
  for (const auto &v : nist)
  {
    if (to_hex(crypto::sha3_256(v.input)) == v.digest)
    {
      ++nist_ok;
    }
  }
  return {matched == 20 && nist_ok == static_cast<int>(nist.size()),
          fmt("%d/20 preimages match OpenSSL, %d/%zu NIST vectors", matched, nist_ok, nist.size())};
}

// 4 ---------------------------------------------------------------------------

template <typename T>
std::uint8_t *bytes_of(T &value)
{
  return reinterpret_cast<std::uint8_t *>(&value);
}

/// Every mutable byte of a block, as a function that flips it by `mask`.
std::vector<std::function<void(ledger::Block &, std::uint8_t)>> byte_sites(const ledger::Block &b)
{
  using Site = std::function<void(ledger::Block &, std::uint8_t)>;
  std::vector<Site> out;
  auto add_raw = [&](auto field, std::size_t size) {
    for (std::size_t i = 0; i < size; ++i)
    {
      out.push_back([field, i](ledger::Block &blk, std::uint8_t m) { field(blk)[i] ^= m; });
    }
  };
  auto add_id = [&](auto field, std::size_t size) {
    for (std::size_t i = 0; i < size; ++i)
    {
      out.push_back([field, i](ledger::Block &blk, std::uint8_t m) {
        PdlId      &id = field(blk);
        std::string s  = id.str();
        s[i]           = static_cast<char>(s[i] ^ m);
        id             = PdlId{s};
      });
    }
  };

  add_raw([](ledger::Block &x) { return bytes_of(x.header.height); }, 8);
  add_raw([](ledger::Block &x) { return x.header.parent_digest.data(); }, 32);
  add_id([](ledger::Block &x) -> PdlId & { return x.header.sealer; }, b.header.sealer.str().size());
  add_raw([](ledger::Block &x) { return bytes_of(x.header.seal_ts); }, 8);
  add_raw([](ledger::Block &x) { return x.header.tx_digest.data(); }, 32);
  add_raw([](ledger::Block &x) { return x.digest.data(); }, 32);
  for (std::size_t t = 0; t < b.transactions.size(); ++t)
  {
    const auto &tx = b.transactions[t];
    add_id([t](ledger::Block &x) -> PdlId & { return x.transactions[t].submitter; }, tx.submitter.str().size());
    add_raw([t](ledger::Block &x) { return x.transactions[t].contract.bytes.data(); }, 32);
    add_raw([t](ledger::Block &x) { return bytes_of(x.transactions[t].nonce); }, 8);
    add_raw([t](ledger::Block &x) { return bytes_of(x.transactions[t].submit_ts); }, 8);
    add_raw([t](ledger::Block &x) { return x.transactions[t].payload.data(); }, tx.payload.size());
  }
  return out;
}

Outcome corruption_detection()
{
  const auto      config = ledger_config(3);
  ledger::Ledger  l(config);
  DeterministicRng rng(4);
  for (unsigned i = 1; i <= 12; ++i)
  {
    l.register_participant(pdl(i));
  }
  ContractAddress registry;
  registry.bytes[0] = 0x42;
  while (l.chain().size() < 21)
  {
    const SimTime due = l.next_seal_due();
    for (int j = 0; j < 3; ++j)
    {
      const PdlId who = pdl(static_cast<unsigned>(rng.between(4, 12)));
      Digest      d{};
      d[0]                 = static_cast<std::uint8_t>(l.chain().size());
      d[1]                 = static_cast<std::uint8_t>(j);
      const auto payload   = contracts::encode_operation(contracts::RecordFlowOp{d, contracts::RecordRole::Source});
      const auto submitted = l.submit_transaction(
          ledger::Transaction{who, registry, l.next_nonce(who), due - ms(1000 * (3 - j)), payload},
          due - ms(1000 * (3 - j)));
      if (!submitted.admitted())
      {
        return {false, "setup submission rejected"};
      }
    }
    l.seal_block(due);
  }
  const std::vector<ledger::Block> chain = l.chain();
  if (ledger::verify_chain(chain, config))
  {
    return {false, "pristine chain does not verify"};
  }

  const auto start    = std::chrono::steady_clock::now();
  int        detected = 0;
  std::string first_miss;
  for (int trial = 0; trial < 100; ++trial)
  {
    const auto height = static_cast<std::size_t>(rng.below(chain.size()));
    const auto sites  = byte_sites(chain[height]);
    const auto site   = rng.below(sites.size());
    const auto mask   = static_cast<std::uint8_t>(rng.between(1, 255));
    auto       copy   = chain;
    sites[site](copy[height], mask);
    const auto v = ledger::verify_chain(copy, config);
    if (v && v->height == height)
    {
      ++detected;
    }
    else if (first_miss.empty())
    {
      first_miss = fmt(", first miss: block %zu site %llu", height, static_cast<unsigned long long>(site));
    }
  }
  const double runtime = elapsed_s(start);
  return {detected == 100 && runtime < 1.0,
          fmt("%d/100 detected at the corrupted height over %zu blocks, runtime %.3f s%s", detected,
              chain.size(), runtime, first_miss.c_str())};
}

// 5 ---------------------------------------------------------------------------

Outcome poa_rotation()
{
  std::string detail;
  bool        pass = true;
  for (std::size_t k : {1u, 3u, 5u})
  {
    const auto     config = ledger_config(k);
    ledger::Ledger l(config);
    l.register_participant(pdl(50));
    for (int b = 0; b < 50; ++b)
    {
      const SimTime due = l.next_seal_due();
      l.submit_transaction(tx_from(l, pdl(50), due - ms(500)), due - ms(500));
      l.seal_block(due);
    }
    int rotation_ok = 0, gap_ok = 0;
    const auto &chain = l.chain();
    for (std::size_t h = 1; h < chain.size(); ++h)
    {
      rotation_ok += chain[h].header.sealer == config.authorities[h % k].pdl_id;
      gap_ok += chain[h].header.seal_ts - chain[h - 1].header.seal_ts == config.block_interval;
    }
    const bool ok = rotation_ok == 50 && gap_ok == 50 && !ledger::verify_chain(chain, config);
    pass          = pass && ok;
    detail += fmt("k=%zu rotation %d/50 gap %d/50; ", k, rotation_ok, gap_ok);
  }

  // The same property on a full run, including post-duration drain blocks.
  const auto scenario = network::load_scenario(scenario_path("demo_triangle.json"));
  network::Simulation sim(scenario, scenario.seed);
  sim.run_to_completion();
  const auto &chain = sim.ledger().chain();
  const auto &auth  = sim.ledger().config().authorities;
  std::size_t ok    = 0;
  for (std::size_t h = 1; h < chain.size(); ++h)
  {
    ok += chain[h].header.sealer == auth[h % auth.size()].pdl_id &&
          chain[h].header.seal_ts - chain[h - 1].header.seal_ts == scenario.ledger.block_interval;
  }
  pass = pass && ok == chain.size() - 1;
  detail += fmt("demo %zu/%zu blocks", ok, chain.size() - 1);
  return {pass, detail};
}

// 6 ---------------------------------------------------------------------------

Outcome capacity_safety()
{
  const auto       start = std::chrono::steady_clock::now();
  DeterministicRng rng(6);
  int              overloaded_instants = 0, fifo_mismatches = 0;
  std::size_t      admitted = 0, waited = 0;
  for (int round = 0; round < 200; ++round)
  {
    const auto      spec = random_spec(rng, 4 + static_cast<int>(rng.below(4)), 3);
    OrchestrationRig rig(spec);
    const auto       reqs   = random_schedule(rng, rig.topology, 25, 40);
    const auto       result = drive(rig, reqs, 120);

    std::set<SimTime> instants;
    for (const auto &a : result.allocations)
    {
      instants.insert(a.start);
      instants.insert(a.end);
    }
    for (const auto &[id, link] : rig.topology.links())
    {
      for (const auto t : instants)
      {
        overloaded_instants += oracle::load_at(result.allocations, id, t) > link.capacity;
      }
    }
    const auto model = model_admissions(rig.topology, reqs, 120, Discipline::StrictFifo);
    fifo_mismatches += model != result.admissions;
    for (const auto &r : reqs)
    {
      const auto it = result.admissions.find(r.id);
      if (it != result.admissions.end() && it->second >= 0)
      {
        ++admitted;
        waited += it->second > r.at_s;
      }
    }
  }
  const double runtime = elapsed_s(start);
  return {overloaded_instants == 0 && fifo_mismatches == 0 && runtime < 30.0,
          fmt("200 schedules, %zu admitted (%zu after waiting), %d overloaded instants, %d FIFO mismatches, "
              "runtime %.2f s",
              admitted, waited, overloaded_instants, fifo_mismatches, runtime)};
}

// 7 ---------------------------------------------------------------------------

Outcome fraud_detection()
{
  auto scenario = network::load_scenario(scenario_path("fraud_triangle.json"));
  const network::DeviceSpec *fraud = nullptr;
  for (const auto &d : scenario.devices)
  {
    if (d.behavior.kind == network::BehaviorKind::FraudRouter)
    {
      fraud = &d;
    }
  }
  if (!fraud)
  {
    return {false, "no FraudRouter in fraud_triangle"};
  }
  const std::string fraud_device = fraud->id.str();
  const std::string fraud_owner  = fraud->owner;

  network::Simulation sim(scenario, scenario.seed);
  sim.run_to_completion();
  const auto report   = audit::audit_chain(sim.ledger().chain(), sim.disclosure());
  const auto owner_id = sim.orchestrator().access().find_label(fraud_owner)->pdl_id;
  std::int64_t rate   = 0;
  for (const auto &r : scenario.requests)
  {
    if (r.id.str() == "req-1")
    {
      rate = r.penalty_rate;
    }
  }
  std::size_t completed = 0;
  for (const auto &f : sim.flows())
  {
    completed += f.completed;
  }
  std::size_t exact = 0;
  for (const auto &f : report.findings)
  {
    exact += f.verdict == audit::Verdict::Violation && f.measured_latency == Millis{20} &&
             f.blamed == owner_id && f.penalty == rate;
  }
  const bool fraud_ok = report.findings.size() == completed && exact == completed &&
                        report.violations == completed &&
                        report.penalties == static_cast<std::int64_t>(report.violations) * rate;

  for (auto &d : scenario.devices)
  {
    if (d.id.str() == fraud_device)
    {
      d.behavior = network::Behavior{};
    }
  }
  network::Simulation honest(scenario, scenario.seed);
  honest.run_to_completion();
  const auto clean = audit::audit_chain(honest.ledger().chain(), honest.disclosure());
  const bool clean_ok = clean.violations == 0 && clean.unverifiable == 0 && clean.penalties == 0;

  return {fraud_ok && clean_ok,
          fmt("enabled: %zu flows, %zu exact violations (20 ms, blamed %s, penalty %lld), total %lld; "
              "disabled: %llu violations, %llu unverifiable, %llu compliant",
              completed, exact, owner_id.str().c_str(), static_cast<long long>(rate),
              static_cast<long long>(report.penalties), static_cast<unsigned long long>(clean.violations),
              static_cast<unsigned long long>(clean.unverifiable), static_cast<unsigned long long>(clean.compliant))};
}

// 8 ---------------------------------------------------------------------------

std::vector<std::string> record_lines(const std::string &trace)
{
  std::vector<std::string> out;
  std::istringstream       in(trace);
  std::string              line;
  while (std::getline(in, line))
  {
    if (line.find("\"event\":\"Record") != std::string::npos)
    {
      out.push_back(line);
    }
  }
  return out;
}

Outcome tee_equivalence()
{
  const auto tee_s    = network::load_scenario(scenario_path("tee_triangle.json"));
  const auto honest_s = network::load_scenario(scenario_path("demo_triangle.json"));
  std::size_t misbehaving = 0;
  for (const auto &d : tee_s.devices)
  {
    misbehaving += d.behavior.kind != network::BehaviorKind::Honest;
    if (!d.tee)
    {
      return {false, "tee_triangle has a device without TEE"};
    }
  }
  const auto tee    = cli::run_scenario(tee_s, tee_s.seed);
  const auto honest = cli::run_scenario(honest_s, honest_s.seed);
  const auto a      = record_lines(tee.trace);
  const auto b      = record_lines(honest.trace);
  const bool pass   = misbehaving > 0 && tee.report == honest.report && tee.audit_report == honest.audit_report &&
                    a == b && !a.empty() && tee.disclosure == honest.disclosure;
  return {pass, fmt("%zu misbehaving TEE devices, %zu record-level trace lines equal: %s, audit equal: %s, "
                    "full trace equal: %s",
                    misbehaving, a.size(), a == b ? "yes" : "no",
                    tee.audit_report == honest.audit_report ? "yes" : "no",
                    tee.trace == honest.trace ? "yes" : "no")};
}

// 9 ---------------------------------------------------------------------------

Outcome rate_limiting()
{
  std::string detail;
  bool        pass = true;
  for (std::uint32_t cap : {5u, 20u, 50u})
  {
    const std::uint32_t burst = 10 * cap;
    auto                config = ledger_config(3, cap, burst);
    ledger::Ledger      l(config);
    for (std::uint32_t i = 0; i < burst; ++i)
    {
      l.register_participant(pdl(100 + i));
    }

    std::vector<std::uint32_t> pending;
    for (std::uint32_t i = 0; i < burst; ++i)
    {
      pending.push_back(i);
    }
    std::vector<std::uint64_t> admitted_per_s, rejected_per_s;
    for (std::int64_t s = 0; !pending.empty() && s < 100; ++s)
    {
      std::vector<std::uint32_t> still;
      std::uint64_t              admitted = 0, rejected = 0;
      for (std::size_t j = 0; j < pending.size(); ++j)
      {
        const SimTime at  = secs(s) + SimDuration{static_cast<std::int64_t>(j) * 1000};
        const auto    who = pdl(100 + pending[j]);
        const auto    r   = l.submit_transaction(tx_from(l, who, at), at);
        if (r.admitted())
        {
          ++admitted;
        }
        else if (r.rejection == ledger::RejectReason::RateCapped)
        {
          ++rejected;
          still.push_back(pending[j]);
        }
        else
        {
          return {false, fmt("unexpected rejection %s", std::string(ledger::to_string(*r.rejection)).c_str())};
        }
      }
      admitted_per_s.push_back(admitted);
      rejected_per_s.push_back(rejected);
      pending = std::move(still);
    }

    // Counting oracle: every second admits min(cap, outstanding).
    std::vector<std::uint64_t> want_admitted, want_rejected;
    for (std::uint64_t outstanding = burst; outstanding > 0;)
    {
      const std::uint64_t take = std::min<std::uint64_t>(cap, outstanding);
      want_admitted.push_back(take);
      want_rejected.push_back(outstanding - take);
      outstanding -= take;
    }
    std::uint64_t total_rejected = 0;
    for (auto r : rejected_per_s)
    {
      total_rejected += r;
    }
    const auto counted = l.counters().rejected.count(ledger::RejectReason::RateCapped)
                             ? l.counters().rejected.at(ledger::RejectReason::RateCapped)
                             : 0;
    const bool ok = admitted_per_s == want_admitted && rejected_per_s == want_rejected && counted == total_rejected;
    pass          = pass && ok;
    detail += fmt("cap %u: %zu s at %llu/s, %llu rejections; ", cap, admitted_per_s.size(),
                  static_cast<unsigned long long>(admitted_per_s.empty() ? 0 : admitted_per_s.front()),
                  static_cast<unsigned long long>(total_rejected));
  }
  detail.resize(detail.size() - 2);
  return {pass, detail};
}

// 10 --------------------------------------------------------------------------

Outcome determinism()
{
  int identical = 0, diverging = 0;
  for (const auto &name : kBundled)
  {
    const auto scenario = network::load_scenario(scenario_path(name));
    const auto a        = cli::run_scenario(scenario, scenario.seed);
    const auto b        = cli::run_scenario(scenario, scenario.seed);
    const auto c        = cli::run_scenario(scenario, scenario.seed + 1);
    identical += a.summary_json == b.summary_json && a.ledger_dump == b.ledger_dump &&
                 a.audit_report == b.audit_report && a.trace == b.trace && a.disclosure == b.disclosure;
    diverging += a.trace != c.trace;
  }
  const int n = static_cast<int>(kBundled.size());
  return {identical == n && diverging == n,
          fmt("%d/%d scenarios bit-identical under the same seed, %d/%d traces differ under another seed",
              identical, n, diverging, n)};
}

}  // namespace

int main()
{
  struct Criterion
  {
    const char *name;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {"commit-latency bound", commit_latency_bound},
      {"preimage size envelope", preimage_envelope},
      {"digest correctness", digest_correctness},
      {"tamper detection", corruption_detection},
      {"PoA rotation and cadence", poa_rotation},
      {"capacity safety and FIFO", capacity_safety},
      {"fraud detection", fraud_detection},
      {"TEE equivalence", tee_equivalence},
      {"rate limiting", rate_limiting},
      {"determinism", determinism},
  };
  int failures = 0;
  int index    = 0;
  for (const auto &c : criteria)
  {
    ++index;
    Outcome o;
    try
    {
      o = c.run();
    }
    catch (const std::exception &e)
    {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::printf("[%s] %2d %s: %s\n", o.pass ? "PASS" : "FAIL", index, c.name, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%d criteria passed\n", index - failures, index);
  return failures == 0 ? 0 : 1;
}
