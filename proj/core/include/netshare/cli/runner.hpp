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

#include "netshare/audit/audit.hpp"
#include "netshare/network/scenario.hpp"
#include "netshare/network/simulation.hpp"

#include <iosfwd>
#include <optional>
#include <span>
#include <string>

namespace netshare::cli {

inline constexpr int kExitOk               = 0;
inline constexpr int kExitIoError          = 1;
inline constexpr int kExitSpecError        = 2;
inline constexpr int kExitVerifyFailure    = 3;
inline constexpr int kExitAuditInputError  = 4;

struct CommitLatency
{
  std::uint64_t records{0};
  double        mean_s{0};
  double        p95_s{0};  // nearest rank
  double        max_s{0};
};

CommitLatency commit_latency(std::span<const network::CommitSample> samples);

struct RunSummary
{
  std::string   scenario;
  std::uint64_t seed{0};
  SimTime       end{0};
  std::uint64_t blocks_sealed{0};
  std::uint64_t tip_height{0};
  Digest        tip_digest{};

  std::uint64_t                         admitted{0};
  std::uint64_t                         committed{0};
  std::uint64_t                         pending{0};
  std::map<std::string, std::uint64_t>  rejected;

  network::Simulation::Outcomes outcomes;
  std::uint64_t                 flows_scheduled{0};
  std::uint64_t                 flows_completed{0};

  std::uint64_t findings{0};
  std::uint64_t compliant{0};
  std::uint64_t violations{0};
  std::uint64_t unverifiable{0};
  std::int64_t  penalties{0};

  std::vector<audit::BlacklistEntry> blacklisted;
  CommitLatency                      commit;
  Digest                             contract_state_digest{};
  std::uint64_t                      execution_failures{0};
};

std::string summary_to_json(const RunSummary &summary);

/// Every artifact of one run as bytes, ready to be written.
struct RunArtifacts
{
  RunSummary         summary;
  audit::AuditReport report;
  std::string        summary_json;
  std::string        ledger_dump;
  std::string        audit_report;
  std::string        trace;
  std::string        disclosure;
};

inline constexpr const char *kSummaryFile    = "summary.json";
inline constexpr const char *kLedgerFile     = "ledger.jsonl";
inline constexpr const char *kAuditFile      = "audit.jsonl";
inline constexpr const char *kTraceFile      = "trace.jsonl";
inline constexpr const char *kDisclosureFile = "disclosure.txt";

/// Runs the scenario to completion and audits the resulting chain with the
/// same function the offline audit uses.
RunArtifacts run_scenario(const network::Scenario &scenario, std::uint64_t seed);

/// Command implementations; each returns a process exit code.
int run_command(const std::string &scenario_path, std::optional<std::uint64_t> seed,
                const std::string &out_dir, std::ostream &out, std::ostream &err);
int verify_command(const std::string &ledger_path, std::ostream &out, std::ostream &err);
int audit_command(const std::string &ledger_path, const std::string &disclosure_path,
                  const std::optional<std::string> &out_path, std::ostream &out, std::ostream &err);

}  // namespace netshare::cli
