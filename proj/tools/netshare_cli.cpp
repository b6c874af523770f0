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

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char **argv)
{
  CLI::App app{"Shared-infrastructure ledger simulator: run scenarios, verify ledgers, audit flows."};
  app.require_subcommand(1);

  std::string                  scenario;
  std::uint64_t                seed = 0;
  std::string                  out_dir;
  auto                        *run = app.add_subcommand("run", "Simulate a scenario and write its artifacts");
  run->add_option("--scenario", scenario, "Scenario file (JSON)")->required();
  auto *seed_opt = run->add_option("--seed", seed, "Seed; defaults to the scenario's seed, else 0");
  run->add_option("--out", out_dir, "Directory for the artifacts")->required();

  std::string ledger_path;
  auto       *verify = app.add_subcommand("verify", "Re-verify a ledger dump");
  verify->add_option("--ledger", ledger_path, "ledger.jsonl")->required();

  std::string                disclosure_path;
  std::string                audit_out;
  auto                      *audit = app.add_subcommand("audit", "Re-audit a ledger dump against disclosed preimages");
  audit->add_option("--ledger", ledger_path, "ledger.jsonl")->required();
  audit->add_option("--disclosure", disclosure_path, "disclosure.txt")->required();
  auto *audit_out_opt = audit->add_option("--out", audit_out, "Write the report here instead of stdout");

  try
  {
    app.parse(argc, argv);
  }
  catch (const CLI::ParseError &e)
  {
    return app.exit(e) == 0 ? 0 : netshare::cli::kExitSpecError;
  }

  if (*run)
  {
    std::optional<std::uint64_t> s;
    if (*seed_opt)
    {
      s = seed;
    }
    return netshare::cli::run_command(scenario, s, out_dir, std::cout, std::cerr);
  }
  if (*verify)
  {
    return netshare::cli::verify_command(ledger_path, std::cout, std::cerr);
  }
  std::optional<std::string> out;
  if (*audit_out_opt)
  {
    out = audit_out;
  }
  return netshare::cli::audit_command(ledger_path, disclosure_path, out, std::cout, std::cerr);
}
