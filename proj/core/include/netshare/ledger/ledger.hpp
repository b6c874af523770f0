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

#include "netshare/common/error.hpp"
#include "netshare/ledger/types.hpp"

#include <deque>
#include <map>
#include <set>
#include <span>
#include <variant>

namespace netshare::ledger {

/// Returned by seal_block when the block interval has not elapsed yet.
struct NotDue
{
  SimTime next_due{0};
};

using SealResult = std::variant<Block, NotDue>;

/// Thrown by layers above the ledger when a submission they depend on is
/// rejected; carries the ledger's reason.
class LedgerRejected : public Error
{
public:
  explicit LedgerRejected(RejectReason reason)
    : Error(ErrorCode::LedgerRejected, std::string(to_string(reason)))
    , reason_(reason)
  {}

  RejectReason reason() const noexcept { return reason_; }

private:
  RejectReason reason_;
};

struct PendingTx
{
  Transaction tx;
  SimTime     admitted_at{0};
};

/// Append-only permissioned ledger with strict in-turn proof-of-authority
/// sealing.
///
/// All mutation goes through one owner (the simulation event loop). Times
/// passed to submit_transaction and seal_block must be nondecreasing.
class Ledger
{
public:
  /// `genesis_payloads` become additional genesis transactions after the
  /// configuration entry, submitted by kGenesisSubmitter.
  explicit Ledger(LedgerConfig config, std::vector<Bytes> genesis_payloads = {});

  const LedgerConfig &config() const noexcept { return config_; }

  // Access control. Blacklisting is deregistration; the history stays.
  void register_participant(const PdlId &id);
  void deregister_participant(const PdlId &id);
  bool is_participant(const PdlId &id) const;

  SubmitResult submit_transaction(Transaction tx, SimTime now);
  SealResult   seal_block(SimTime now);

  /// Committed transactions addressed to `contract` within `range`, in commit
  /// order. Throws Error(RangeBeyondTip).
  std::vector<CommittedTx> query_records(const ContractAddress &contract, HeightRange range) const;

  const std::vector<Block>     &chain() const noexcept { return chain_; }
  const Block                  &tip() const noexcept { return chain_.back(); }
  const std::deque<PendingTx>  &mempool() const noexcept { return mempool_; }
  std::uint64_t                 next_nonce(const PdlId &submitter) const;
  const PdlId                  &sealer_for(std::uint64_t height) const;
  SimTime                       next_seal_due() const;

  struct Counters
  {
    std::uint64_t                        admitted{0};
    std::uint64_t                        committed{0};
    std::map<RejectReason, std::uint64_t> rejected;
  };
  const Counters &counters() const noexcept { return counters_; }

private:
  void note_time(SimTime now);

  LedgerConfig             config_;
  std::vector<Block>       chain_;
  std::deque<PendingTx>    mempool_;
  std::set<PdlId>          participants_;
  std::map<PdlId, std::uint64_t> next_nonce_;
  std::int64_t             window_second_{-1};
  std::uint32_t            window_admitted_{0};
  SimTime                  last_time_{0};
  Counters                 counters_;
};

enum class ChainCheck
{
  GenesisShape,
  HeightSuccession,
  ParentDigest,
  TxDigest,
  SealerMembership,
  SealerRotation,
  SealCadence,
  BlockDigest,
};

std::string_view to_string(ChainCheck check) noexcept;

struct ChainViolation
{
  std::uint64_t height{0};
  ChainCheck    check{ChainCheck::GenesisShape};

  bool operator==(const ChainViolation &) const = default;
};

/// nullopt means Valid.
using VerifyResult = std::optional<ChainViolation>;

/// Verifies hash links, transaction digests, height succession, sealer
/// membership and rotation, cadence, and each block's recorded digest.
/// Malformed input yields a violation, never an exception.
VerifyResult verify_chain(std::span<const Block> chain, const LedgerConfig &config);

/// As above, with the configuration read from the genesis block.
VerifyResult verify_chain(std::span<const Block> chain);

}  // namespace netshare::ledger
