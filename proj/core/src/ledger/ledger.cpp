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

#include "netshare/ledger/ledger.hpp"

#include "netshare/ledger/digest.hpp"
#include "netshare/ledger/genesis.hpp"

#include <algorithm>

namespace netshare::ledger {

std::string_view to_string(RejectReason reason) noexcept
{
  switch (reason)
  {
  case RejectReason::Unauthorized: return "Unauthorized";
  case RejectReason::BadNonce: return "BadNonce";
  case RejectReason::RateCapped: return "RateCapped";
  case RejectReason::MempoolFull: return "MempoolFull";
  }
  return "Unknown";
}

std::string_view to_string(ChainCheck check) noexcept
{
  switch (check)
  {
  case ChainCheck::GenesisShape: return "GenesisShape";
  case ChainCheck::HeightSuccession: return "HeightSuccession";
  case ChainCheck::ParentDigest: return "ParentDigest";
  case ChainCheck::TxDigest: return "TxDigest";
  case ChainCheck::SealerMembership: return "SealerMembership";
  case ChainCheck::SealerRotation: return "SealerRotation";
  case ChainCheck::SealCadence: return "SealCadence";
  case ChainCheck::BlockDigest: return "BlockDigest";
  }
  return "Unknown";
}

void LedgerConfig::validate() const
{
  if (block_interval <= SimDuration::zero())
  {
    throw Error(ErrorCode::InvalidConfig, "block_interval must be positive");
  }
  if (tps_cap == 0)
  {
    throw Error(ErrorCode::InvalidConfig, "tps_cap must be positive");
  }
  if (mempool_cap < tps_cap)
  {
    throw Error(ErrorCode::InvalidConfig, "mempool_cap must be at least tps_cap");
  }
  if (authorities.empty())
  {
    throw Error(ErrorCode::InvalidConfig, "authority set is empty");
  }
  std::set<PdlId> seen;
  for (const auto &a : authorities)
  {
    if (a.pdl_id.empty() || !seen.insert(a.pdl_id).second)
    {
      throw Error(ErrorCode::InvalidConfig, "authority pdl_id empty or duplicated: " + a.pdl_id.str());
    }
  }
}

std::uint32_t LedgerConfig::effective_batch_size() const
{
  if (batch_size != 0)
  {
    return batch_size;
  }
  const auto seconds = std::max<std::int64_t>(
      1, std::chrono::duration_cast<Seconds>(block_interval).count());
  return static_cast<std::uint32_t>(tps_cap * seconds);
}

Ledger::Ledger(LedgerConfig config, std::vector<Bytes> genesis_payloads)
  : config_(std::move(config))
{
  config_.validate();

  Block genesis;
  genesis.transactions.push_back(Transaction{kGenesisSubmitter, {}, 0, SimTime{0},
                                             encode_genesis_config(config_)});
  std::uint64_t nonce = 1;
  for (auto &payload : genesis_payloads)
  {
    genesis.transactions.push_back(
        Transaction{kGenesisSubmitter, {}, nonce++, SimTime{0}, std::move(payload)});
  }
  genesis.header.height        = 0;
  genesis.header.parent_digest = kZeroDigest;
  genesis.header.sealer        = config_.authorities.front().pdl_id;
  genesis.header.seal_ts       = SimTime{0};
  genesis.header.tx_digest     = transactions_digest(genesis.transactions);
  genesis.digest               = header_digest(genesis.header);
  chain_.push_back(std::move(genesis));
}

void Ledger::register_participant(const PdlId &id)
{
  participants_.insert(id);
}

void Ledger::deregister_participant(const PdlId &id)
{
  participants_.erase(id);
}

bool Ledger::is_participant(const PdlId &id) const
{
  return participants_.contains(id);
}

std::uint64_t Ledger::next_nonce(const PdlId &submitter) const
{
  auto it = next_nonce_.find(submitter);
  return it == next_nonce_.end() ? 0 : it->second;
}

const PdlId &Ledger::sealer_for(std::uint64_t height) const
{
  return config_.authorities[height % config_.authorities.size()].pdl_id;
}

SimTime Ledger::next_seal_due() const
{
  return tip().header.seal_ts + config_.block_interval;
}

void Ledger::note_time(SimTime now)
{
  if (now < last_time_)
  {
    throw Error(ErrorCode::TimeReversal, "ledger driven backwards in simulated time");
  }
  last_time_ = now;
}

SubmitResult Ledger::submit_transaction(Transaction tx, SimTime now)
{
  if (tx.payload.size() > config_.max_payload)
  {
    throw Error(ErrorCode::MalformedTransaction,
                "payload of " + std::to_string(tx.payload.size()) + " bytes exceeds max_payload");
  }
  note_time(now);

  auto reject = [this](RejectReason r) {
    ++counters_.rejected[r];
    return SubmitResult::reject(r);
  };

  if (!is_participant(tx.submitter))
  {
    return reject(RejectReason::Unauthorized);
  }
  if (tx.nonce != next_nonce(tx.submitter))
  {
    return reject(RejectReason::BadNonce);
  }
  const std::int64_t second = std::chrono::duration_cast<Seconds>(now).count();
  if (second != window_second_)
  {
    window_second_   = second;
    window_admitted_ = 0;
  }
  if (window_admitted_ >= config_.tps_cap)
  {
    return reject(RejectReason::RateCapped);
  }
  if (mempool_.size() >= config_.mempool_cap)
  {
    return reject(RejectReason::MempoolFull);
  }

  ++window_admitted_;
  ++counters_.admitted;
  next_nonce_[tx.submitter] = tx.nonce + 1;
  mempool_.push_back(PendingTx{std::move(tx), now});
  return SubmitResult::accept();
}

SealResult Ledger::seal_block(SimTime now)
{
  note_time(now);
  if (now < next_seal_due())
  {
    return NotDue{next_seal_due()};
  }

  Block block;
  block.header.height        = tip().header.height + 1;
  block.header.parent_digest = tip().digest;
  block.header.sealer        = sealer_for(block.header.height);
  block.header.seal_ts       = now;

  const std::size_t take = std::min<std::size_t>(mempool_.size(), config_.effective_batch_size());
  block.transactions.reserve(take);
  for (std::size_t i = 0; i < take; ++i)
  {
    block.transactions.push_back(std::move(mempool_.front().tx));
    mempool_.pop_front();
  }
  counters_.committed += take;

  block.header.tx_digest = transactions_digest(block.transactions);
  block.digest           = header_digest(block.header);
  chain_.push_back(block);
  return block;
}

std::vector<CommittedTx> Ledger::query_records(const ContractAddress &contract,
                                               HeightRange            range) const
{
  if (range.last > tip().header.height || range.first > range.last)
  {
    throw Error(ErrorCode::RangeBeyondTip,
                "range [" + std::to_string(range.first) + ", " + std::to_string(range.last) +
                    "] outside chain of tip " + std::to_string(tip().header.height));
  }
  std::vector<CommittedTx> out;
  for (auto h = range.first; h <= range.last; ++h)
  {
    const auto &txs = chain_[h].transactions;
    for (std::uint32_t i = 0; i < txs.size(); ++i)
    {
      if (txs[i].contract == contract)
      {
        out.push_back(CommittedTx{txs[i], h, i});
      }
    }
  }
  return out;
}

VerifyResult verify_chain(std::span<const Block> chain, const LedgerConfig &config)
{
  if (chain.empty())
  {
    return ChainViolation{0, ChainCheck::GenesisShape};
  }
  const auto &authorities = config.authorities;
  if (authorities.empty())
  {
    return ChainViolation{0, ChainCheck::SealerMembership};
  }

  for (std::size_t i = 0; i < chain.size(); ++i)
  {
    const auto         &block  = chain[i];
    const auto         &header = block.header;
    const std::uint64_t height = i;

    if (header.height != height)
    {
      return ChainViolation{height, ChainCheck::HeightSuccession};
    }
    const Digest expected_parent = i == 0 ? kZeroDigest : chain[i - 1].digest;
    if (header.parent_digest != expected_parent)
    {
      return ChainViolation{height, ChainCheck::ParentDigest};
    }
    if (header.tx_digest != transactions_digest(block.transactions))
    {
      return ChainViolation{height, ChainCheck::TxDigest};
    }
    const bool member = std::any_of(authorities.begin(), authorities.end(),
                                    [&](const Authority &a) { return a.pdl_id == header.sealer; });
    if (!member)
    {
      return ChainViolation{height, ChainCheck::SealerMembership};
    }
    if (header.sealer != authorities[height % authorities.size()].pdl_id)
    {
      return ChainViolation{height, ChainCheck::SealerRotation};
    }
    if (i == 0 ? header.seal_ts != SimTime{0}
               : header.seal_ts - chain[i - 1].header.seal_ts < config.block_interval)
    {
      return ChainViolation{height, ChainCheck::SealCadence};
    }
    if (block.digest != header_digest(header))
    {
      return ChainViolation{height, ChainCheck::BlockDigest};
    }
  }
  return std::nullopt;
}

VerifyResult verify_chain(std::span<const Block> chain)
{
  if (chain.empty())
  {
    return ChainViolation{0, ChainCheck::GenesisShape};
  }
  auto config = config_from_genesis(chain.front());
  if (!config)
  {
    return ChainViolation{0, ChainCheck::GenesisShape};
  }
  return verify_chain(chain, *config);
}

}  // namespace netshare::ledger
