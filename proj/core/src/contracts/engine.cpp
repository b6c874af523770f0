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

#include "netshare/contracts/engine.hpp"

#include "netshare/contracts/executor.hpp"

namespace netshare::contracts {

ErrorCode error_code_for(FailureReason reason) noexcept
{
  switch (reason)
  {
  case FailureReason::UnknownContract:
  case FailureReason::WrongKind: return ErrorCode::UnknownContract;
  case FailureReason::NotYetUsable: return ErrorCode::NotYetUsable;
  case FailureReason::AlreadyActive: return ErrorCode::AlreadyActive;
  case FailureReason::NotActive:
  case FailureReason::LeaseNotEnded:
  case FailureReason::OutsideLease: return ErrorCode::NotActive;
  case FailureReason::CallerNotManager: return ErrorCode::Unauthorized;
  case FailureReason::DuplicateRecord:
  case FailureReason::DuplicateFlow: return ErrorCode::DuplicateRecord;
  default: return ErrorCode::InvalidParams;
  }
}

ContractEngine::ContractEngine(ledger::Ledger &ledger, EngineConfig config)
  : ledger_(ledger)
  , config_(config)
{
  committed_ = replay(ledger_.chain());
  head_      = committed_;
  for (const auto &pending : ledger_.mempool())
  {
    apply(head_, pending.tx, BlockContext{kPendingHeight, 0});
  }
}

ledger::Transaction ContractEngine::submit(const PdlId &submitter, const ContractAddress &contract,
                                           const Operation &op, SimTime now)
{
  ledger::Transaction tx{submitter, contract, ledger_.next_nonce(submitter), now,
                         encode_operation(op)};
  const BlockContext pending{kPendingHeight, 0};
  if (auto failure = check(head_, tx, pending))
  {
    throw Error(error_code_for(*failure), std::string(to_string(*failure)));
  }
  const auto result = ledger_.submit_transaction(tx, now);
  if (!result.admitted())
  {
    if (*result.rejection == ledger::RejectReason::Unauthorized)
    {
      throw Error(ErrorCode::Unauthorized, submitter.str() + " may not submit to the ledger");
    }
    throw ledger::LedgerRejected(*result.rejection);
  }
  apply(head_, tx, pending);
  return tx;
}

ContractAddress ContractEngine::deploy_contract(const PdlId &deployer, ContractKind kind,
                                                const SlaTerms &terms, SimTime now)
{
  const auto nonce = ledger_.next_nonce(deployer);
  submit(deployer, ContractAddress{}, DeployOp{kind, terms, now + config_.deploy_delay}, now);
  return derive_address(deployer, nonce, kind);
}

const SlaContract &ContractEngine::init_sla(const ContractAddress &sla, const PdlId &caller,
                                            const SlaBinding &binding, SimTime now)
{
  submit(caller, sla, InitSlaOp{binding}, now);
  return *head_.find_sla(sla);
}

ledger::Transaction ContractEngine::record_flow(const ContractAddress &registry,
                                                const FlowPreimage &preimage, RecordRole role,
                                                const PdlId &submitter, SimTime now)
{
  return submit(submitter, registry, RecordFlowOp{preimage.digest(), role}, now);
}

void ContractEngine::open_flow(const ContractAddress &sla, const PdlId &caller, const FlowId &flow,
                               SimTime now)
{
  submit(caller, sla, OpenFlowOp{flow}, now);
}

void ContractEngine::expire_sla(const ContractAddress &sla, const PdlId &caller, SimTime now)
{
  submit(caller, sla, ExpireSlaOp{}, now);
}

void ContractEngine::terminate_sla(const ContractAddress &sla, const PdlId &caller, SimTime now)
{
  submit(caller, sla, TerminateSlaOp{}, now);
}

void ContractEngine::on_block(const ledger::Block &block)
{
  apply_block(committed_, block);
  head_ = committed_;
  for (const auto &pending : ledger_.mempool())
  {
    apply(head_, pending.tx, BlockContext{kPendingHeight, 0});
  }
}

std::int64_t compute_penalty(const SlaContract &sla, std::uint64_t violations)
{
  if (sla.status != SlaStatus::Active && sla.status != SlaStatus::Expired)
  {
    throw Error(ErrorCode::NotActive, "penalties apply to Active or Expired agreements only");
  }
  return static_cast<std::int64_t>(violations) * sla.terms.penalty_rate;
}

}  // namespace netshare::contracts
