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

#include "netshare/common/error.hpp"
#include "netshare/common/hex.hpp"
#include "netshare/ledger/dump.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

namespace netshare::cli {
namespace {

using ordered_json = nlohmann::ordered_json;

double seconds(SimDuration d)
{
  return static_cast<double>(d.count()) / 1e6;
}

void write_file(const std::filesystem::path &path, const std::string &bytes)
{
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << bytes;
  if (!out)
  {
    throw std::runtime_error("cannot write " + path.string());
  }
}

}  // namespace

CommitLatency commit_latency(std::span<const network::CommitSample> samples)
{
  CommitLatency out;
  out.records = samples.size();
  if (samples.empty())
  {
    return out;
  }
  std::vector<SimDuration> lat;
  lat.reserve(samples.size());
  SimDuration total{0};
  for (const auto &s : samples)
  {
    lat.push_back(s.committed - s.submitted);
    total += lat.back();
  }
  std::sort(lat.begin(), lat.end());
  const auto rank = static_cast<std::size_t>(std::ceil(0.95 * static_cast<double>(lat.size())));
  out.mean_s = seconds(total) / static_cast<double>(lat.size());
  out.p95_s  = seconds(lat[std::max<std::size_t>(rank, 1) - 1]);
  out.max_s  = seconds(lat.back());
  return out;
}

std::string summary_to_json(const RunSummary &s)
{
  ordered_json j;
  j["scenario"]         = s.scenario;
  j["seed"]             = s.seed;
  j["simulated_end_us"] = s.end.count();
  j["blocks_sealed"]    = s.blocks_sealed;
  j["tip"]              = {{"height", s.tip_height}, {"digest", to_hex(s.tip_digest)}};

  ordered_json rejected = ordered_json::object();
  for (const auto &[reason, n] : s.rejected)
  {
    rejected[reason] = n;
  }
  j["transactions"] = {{"admitted", s.admitted},
                       {"committed", s.committed},
                       {"pending", s.pending},
                       {"rejected", rejected}};

  ordered_json denied = ordered_json::object();
  for (const auto &[reason, n] : s.outcomes.denied)
  {
    denied[reason] = n;
  }
  j["allocations"] = {{"confirmed", s.outcomes.confirmed},
                      {"waitlisted", s.outcomes.waitlisted},
                      {"denied", denied},
                      {"expired", s.outcomes.expired}};
  j["flows"]       = {{"scheduled", s.flows_scheduled},
                      {"started", s.outcomes.flows_started},
                      {"completed", s.flows_completed},
                      {"skipped", s.outcomes.flows_skipped},
                      {"records_dropped", s.outcomes.records_dropped},
                      {"records_rejected", s.outcomes.records_rejected}};
  j["audit"]       = {{"findings", s.findings},
                      {"compliant", s.compliant},
                      {"violations", s.violations},
                      {"unverifiable", s.unverifiable},
                      {"penalties_total", s.penalties}};
  auto bl = ordered_json::array();
  for (const auto &e : s.blacklisted)
  {
    bl.push_back({{"node", e.node.str()}, {"reason", e.reason}, {"t_us", e.at.count()}});
  }
  j["blacklisted"]           = bl;
  j["commit_latency_s"]      = {{"records", s.commit.records},
                                {"mean", s.commit.mean_s},
                                {"p95", s.commit.p95_s},
                                {"max", s.commit.max_s}};
  j["contract_state_digest"] = to_hex(s.contract_state_digest);
  j["execution_failures"]    = s.execution_failures;
  return j.dump(2) + "\n";
}

RunArtifacts run_scenario(const network::Scenario &scenario, std::uint64_t seed)
{
  network::Simulation sim(scenario, seed);
  sim.run_to_completion();

  RunArtifacts out;
  out.report = audit::audit_chain(sim.ledger().chain(), sim.disclosure());
  sim.apply_auto_blacklist(out.report);

  const auto &ledger = sim.ledger();
  auto       &s      = out.summary;
  s.scenario         = scenario.name;
  s.seed             = seed;
  s.end              = sim.now();
  s.blocks_sealed    = ledger.chain().size() - 1;
  s.tip_height       = ledger.tip().header.height;
  s.tip_digest       = ledger.tip().digest;
  s.admitted         = ledger.counters().admitted;
  s.committed        = ledger.counters().committed;
  s.pending          = ledger.mempool().size();
  for (auto r : {ledger::RejectReason::Unauthorized, ledger::RejectReason::BadNonce,
                 ledger::RejectReason::RateCapped, ledger::RejectReason::MempoolFull})
  {
    auto it = ledger.counters().rejected.find(r);
    s.rejected[std::string(ledger::to_string(r))] = it == ledger.counters().rejected.end() ? 0 : it->second;
  }
  s.outcomes = sim.outcomes();
  for (auto r : {orchestration::DenyReason::NoAgreement, orchestration::DenyReason::NoPath,
                 orchestration::DenyReason::ExceedsPathCapacity})
  {
    s.outcomes.denied.try_emplace(std::string(orchestration::to_string(r)), 0);
  }
  s.flows_scheduled = scenario.flows.size();
  for (const auto &g : scenario.flow_generators)
  {
    s.flows_scheduled += g.count;
  }
  s.flows_completed = static_cast<std::uint64_t>(
      std::count_if(sim.flows().begin(), sim.flows().end(), [](const auto &f) { return f.completed; }));
  s.findings              = out.report.findings.size();
  s.compliant             = out.report.compliant;
  s.violations            = out.report.violations;
  s.unverifiable          = out.report.unverifiable;
  s.penalties             = out.report.penalties;
  s.blacklisted           = sim.blacklist().entries();
  s.commit                = commit_latency(sim.commit_samples());
  s.contract_state_digest = sim.engine().committed().digest();
  s.execution_failures    = sim.engine().committed().failures.size();

  out.summary_json = summary_to_json(s);

  std::ostringstream ledger_out;
  ledger::write_dump(ledger_out, ledger.chain());
  out.ledger_dump = ledger_out.str();

  std::ostringstream audit_out;
  audit::write_report(audit_out, out.report);
  out.audit_report = audit_out.str();

  std::string trace;
  for (const auto &t : sim.trace())
  {
    trace += t.json;
    trace += '\n';
  }
  out.trace = std::move(trace);

  std::ostringstream disclosure_out;
  contracts::write_disclosure(disclosure_out, sim.disclosure());
  out.disclosure = disclosure_out.str();
  return out;
}

int run_command(const std::string &scenario_path, std::optional<std::uint64_t> seed,
                const std::string &out_dir, std::ostream &out, std::ostream &err)
{
  RunArtifacts artifacts;
  try
  {
    const auto scenario = network::load_scenario(scenario_path);
    artifacts           = run_scenario(scenario, seed.value_or(scenario.seed));
  }
  catch (const Error &e)
  {
    err << scenario_path << ": " << e.what() << '\n';
    return e.code() == ErrorCode::SpecParseError || e.code() == ErrorCode::SpecValidationError
               ? kExitSpecError
               : kExitIoError;
  }

  try
  {
    const std::filesystem::path dir(out_dir);
    std::filesystem::create_directories(dir);
    write_file(dir / kSummaryFile, artifacts.summary_json);
    write_file(dir / kLedgerFile, artifacts.ledger_dump);
    write_file(dir / kAuditFile, artifacts.audit_report);
    write_file(dir / kTraceFile, artifacts.trace);
    write_file(dir / kDisclosureFile, artifacts.disclosure);
  }
  catch (const std::exception &e)
  {
    err << e.what() << '\n';
    return kExitIoError;
  }
  const auto &s = artifacts.summary;
  out << s.scenario << ": " << s.blocks_sealed << " blocks, " << s.outcomes.flows_started
      << " flows, " << s.violations << " violations, " << s.unverifiable
      << " unverifiable; artifacts in " << out_dir << '\n';
  return kExitOk;
}

int verify_command(const std::string &ledger_path, std::ostream &out, std::ostream &err)
{
  std::vector<ledger::Block> chain;
  try
  {
    chain = ledger::read_dump_file(ledger_path);
  }
  catch (const Error &e)
  {
    err << ledger_path << ": " << e.what() << '\n';
    return kExitVerifyFailure;
  }
  if (auto v = ledger::verify_chain(chain))
  {
    out << "Invalid: block " << v->height << ": " << ledger::to_string(v->check) << '\n';
    return kExitVerifyFailure;
  }
  out << "Valid: " << chain.size() << " blocks, tip " << to_hex(chain.back().digest) << '\n';
  return kExitOk;
}

int audit_command(const std::string &ledger_path, const std::string &disclosure_path,
                  const std::optional<std::string> &out_path, std::ostream &out, std::ostream &err)
{
  std::vector<ledger::Block> chain;
  contracts::Disclosure      disclosure;
  try
  {
    chain      = ledger::read_dump_file(ledger_path);
    disclosure = contracts::read_disclosure_file(disclosure_path);
  }
  catch (const Error &e)
  {
    err << e.what() << '\n';
    return kExitAuditInputError;
  }
  if (auto v = ledger::verify_chain(chain))
  {
    err << "ledger does not verify: block " << v->height << ": " << ledger::to_string(v->check) << '\n';
    return kExitVerifyFailure;
  }
  audit::AuditReport report;
  try
  {
    report = audit::audit_chain(chain, disclosure);
  }
  catch (const Error &e)
  {
    err << e.what() << '\n';
    return kExitAuditInputError;
  }
  std::ostringstream text;
  audit::write_report(text, report);
  if (out_path)
  {
    try
    {
      write_file(*out_path, text.str());
    }
    catch (const std::exception &e)
    {
      err << e.what() << '\n';
      return kExitIoError;
    }
  }
  else
  {
    out << text.str();
  }
  return kExitOk;
}

}  // namespace netshare::cli
