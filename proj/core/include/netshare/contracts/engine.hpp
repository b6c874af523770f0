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

#include "netshare/contracts/payload.hpp"
#include "netshare/contracts/preimage.hpp"
#include "netshare/contracts/types.hpp"
#include "netshare/ledger/ledger.hpp"

namespace netshare::contracts {

struct EngineConfig
{
  /// Compile plus deployment time before a new contract accepts calls.
  SimDuration deploy_delay{Seconds{14}};
};

/// Host-side access to the contracts: validates a call against the current
/// head view (committed state plus pending transactions), submits it to the
/// ledger, and re-executes committed blocks as they are sealed.
///
/// Calls that fail validation throw Error with the matching code and submit
/// nothing. Calls the ledger refuses throw ledger::LedgerRejected.
class ContractEngine
{
public:
  ContractEngine(ledger::Ledger &ledger, EngineConfig config = {});

  const EngineConfig &config() const noexcept { return config_; }

  ContractAddress deploy_contract(const PdlId &deployer, ContractKind kind, const SlaTerms &terms,
                                  SimTime now);
  ContractAddress deploy_registry(const PdlId &deployer, SimTime now)
  {
    return deploy_contract(deployer, ContractKind::FlowRegistry, {}, now);
  }

  /// Pending -> Active. Only the deploying manager may initialise.
  const SlaContract &init_sla(const ContractAddress &sla, const PdlId &caller,
                              const SlaBinding &binding, SimTime now);

  /// Hashes `preimage` and records (digest, role). The preimage never leaves
  /// the caller.
  ledger::Transaction record_flow(const ContractAddress &registry, const FlowPreimage &preimage,
                                  RecordRole role, const PdlId &submitter, SimTime now);

  void open_flow(const ContractAddress &sla, const PdlId &caller, const FlowId &flow, SimTime now);
  void expire_sla(const ContractAddress &sla, const PdlId &caller, SimTime now);
  void terminate_sla(const ContractAddress &sla, const PdlId &caller, SimTime now);

  /// Executes a newly sealed block against committed state and refreshes the
  /// head view from the remaining mempool.
  void on_block(const ledger::Block &block);

  const ContractState &committed() const noexcept { return committed_; }
  const ContractState &head() const noexcept { return head_; }

private:
  ledger::Transaction submit(const PdlId &submitter, const ContractAddress &contract,
                             const Operation &op, SimTime now);

  ledger::Ledger &ledger_;
  EngineConfig    config_;
  ContractState   committed_;
  ContractState   head_;
};

/// violations * penalty_rate. Throws Error(NotActive) for a Pending or
/// Terminated SLA.
std::int64_t compute_penalty(const SlaContract &sla, std::uint64_t violations);

ErrorCode error_code_for(FailureReason reason) noexcept;

}  // namespace netshare::contracts
