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

#include "netshare/contracts/executor.hpp"

#include "netshare/common/error.hpp"
#include "netshare/contracts/payload.hpp"
#include "netshare/ledger/genesis.hpp"

#include <algorithm>

namespace netshare::contracts {
namespace {

using ledger::Transaction;
using Failure = std::optional<FailureReason>;

struct Runner
{
  ContractState      &state;
  const Transaction  &tx;
  const BlockContext &ctx;
  bool                commit;

  // Looks up an SLA, distinguishing "no such contract" from "wrong kind".
  std::variant<SlaContract *, FailureReason> sla() const
  {
    auto it = state.slas.find(tx.contract);
    if (it != state.slas.end())
    {
      return &it->second;
    }
    return state.registries.contains(tx.contract) ? FailureReason::WrongKind
                                                  : FailureReason::UnknownContract;
  }

  Failure operator()(const DeployOp &op) const
  {
    if (!tx.contract.is_zero() || op.usable_from < tx.submit_ts)
    {
      return FailureReason::InvalidParams;
    }
    const ContractAddress addr = derive_address(tx.submitter, tx.nonce, op.kind);
    if (state.slas.contains(addr) || state.registries.contains(addr))
    {
      return FailureReason::InvalidParams;
    }
    if (op.kind == ContractKind::Sla)
    {
      const auto &t = op.terms;
      if (t.lease_duration <= SimDuration::zero() || t.latency_target <= Millis::zero() ||
          t.penalty_rate < 0 || t.price < 0)
      {
        return FailureReason::InvalidParams;
      }
      if (commit)
      {
        SlaContract s;
        s.address     = addr;
        s.manager     = tx.submitter;
        s.usable_from = op.usable_from;
        s.terms       = t;
        state.slas.emplace(addr, std::move(s));
      }
    }
    else if (commit)
    {
      FlowRegistry r;
      r.address     = addr;
      r.deployer    = tx.submitter;
      r.usable_from = op.usable_from;
      state.registries.emplace(addr, std::move(r));
    }
    return std::nullopt;
  }

  Failure operator()(const InitSlaOp &op) const
  {
    auto found = sla();
    if (auto *f = std::get_if<FailureReason>(&found))
    {
      return *f;
    }
    SlaContract *s = std::get<SlaContract *>(found);
    if (tx.submitter != s->manager)
    {
      return FailureReason::CallerNotManager;
    }
    if (s->status != SlaStatus::Pending)
    {
      return FailureReason::AlreadyActive;
    }
    if (tx.submit_ts < s->usable_from)
    {
      return FailureReason::NotYetUsable;
    }
    const auto &b = op.binding;
    if (b.owner.empty() || b.tenant.empty() || !state.registries.contains(b.registry) ||
        b.path.devices.size() < 2 || b.path.links.size() + 1 != b.path.devices.size())
    {
      return FailureReason::InvalidParams;
    }
    if (commit)
    {
      s->owner       = b.owner;
      s->tenant      = b.tenant;
      s->lease_start = b.lease_start;
      s->registry    = b.registry;
      s->path        = b.path;
      s->status      = SlaStatus::Active;
    }
    return std::nullopt;
  }

  Failure operator()(const RecordFlowOp &op) const
  {
    auto it = state.registries.find(tx.contract);
    if (it == state.registries.end())
    {
      return state.slas.contains(tx.contract) ? FailureReason::WrongKind
                                              : FailureReason::UnknownContract;
    }
    FlowRegistry &r = it->second;
    if (tx.submit_ts < r.usable_from)
    {
      return FailureReason::NotYetUsable;
    }
    if (r.contains(op.digest, tx.submitter, op.role))
    {
      return FailureReason::DuplicateRecord;
    }
    if (commit)
    {
      r.entries.push_back(FlowRecordEntry{op.digest, tx.submitter, op.role, ctx.height});
      r.keys.insert({op.digest, tx.submitter, op.role});
    }
    return std::nullopt;
  }

  Failure operator()(const OpenFlowOp &op) const
  {
    auto found = sla();
    if (auto *f = std::get_if<FailureReason>(&found))
    {
      return *f;
    }
    SlaContract *s = std::get<SlaContract *>(found);
    if (tx.submitter != s->manager)
    {
      return FailureReason::CallerNotManager;
    }
    if (s->status != SlaStatus::Active)
    {
      return FailureReason::NotActive;
    }
    if (tx.submit_ts < s->lease_start || tx.submit_ts >= s->lease_end())
    {
      return FailureReason::OutsideLease;
    }
    if (op.flow.empty() || std::find(s->flows.begin(), s->flows.end(), op.flow) != s->flows.end())
    {
      return FailureReason::DuplicateFlow;
    }
    if (commit)
    {
      s->flows.push_back(op.flow);
    }
    return std::nullopt;
  }

  Failure close(SlaStatus to, bool require_lease_end) const
  {
    auto found = sla();
    if (auto *f = std::get_if<FailureReason>(&found))
    {
      return *f;
    }
    SlaContract *s = std::get<SlaContract *>(found);
    if (tx.submitter != s->manager)
    {
      return FailureReason::CallerNotManager;
    }
    if (!is_legal_transition(s->status, to))
    {
      return FailureReason::NotActive;
    }
    if (require_lease_end && tx.submit_ts < s->lease_end())
    {
      return FailureReason::LeaseNotEnded;
    }
    if (commit)
    {
      s->status = to;
    }
    return std::nullopt;
  }

  Failure operator()(const ExpireSlaOp &) const { return close(SlaStatus::Expired, true); }
  Failure operator()(const TerminateSlaOp &) const { return close(SlaStatus::Terminated, false); }

  Failure operator()(const ManifestOp &op) const
  {
    if (tx.submitter != ledger::kGenesisSubmitter || ctx.height != 0 || state.manifest)
    {
      return FailureReason::GenesisOnly;
    }
    if (commit)
    {
      state.manifest = op.manifest;
    }
    return std::nullopt;
  }
};

Failure run(ContractState &state, const Transaction &tx, const BlockContext &ctx, bool commit)
{
  const bool genesis_entry = ctx.height == 0 && tx.submitter == ledger::kGenesisSubmitter;
  if (genesis_entry && !tx.payload.empty() && tx.payload[0] == ledger::kGenesisConfigOpcode)
  {
    return std::nullopt;
  }
  Operation op;
  try
  {
    op = decode_operation(tx.payload);
  }
  catch (const Error &)
  {
    return peek_opcode(tx.payload) ? FailureReason::Malformed : FailureReason::UnknownOpcode;
  }
  return std::visit(Runner{state, tx, ctx, commit}, op);
}

}  // namespace

std::optional<FailureReason> check(const ContractState &state, const Transaction &tx,
                                   const BlockContext &ctx)
{
  // Runner only mutates when commit is set.
  return run(const_cast<ContractState &>(state), tx, ctx, false);
}

std::optional<FailureReason> apply(ContractState &state, const Transaction &tx,
                                   const BlockContext &ctx)
{
  auto failure = run(state, tx, ctx, false);
  if (failure)
  {
    state.failures.push_back(ExecutionFailure{ctx.height, ctx.index, tx.submitter, *failure});
  }
  else
  {
    run(state, tx, ctx, true);
  }
  ++state.executed;
  return failure;
}

ContractState execute(const ContractState &state, const Transaction &tx, const BlockContext &ctx)
{
  ContractState next = state;
  apply(next, tx, ctx);
  return next;
}

void apply_block(ContractState &state, const ledger::Block &block)
{
  for (std::uint32_t i = 0; i < block.transactions.size(); ++i)
  {
    apply(state, block.transactions[i], BlockContext{block.header.height, i});
  }
}

ContractState replay(std::span<const ledger::Block> chain)
{
  ContractState state;
  for (const auto &block : chain)
  {
    apply_block(state, block);
  }
  return state;
}

}  // namespace netshare::contracts
