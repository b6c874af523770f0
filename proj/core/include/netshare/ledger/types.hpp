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

#include "netshare/common/types.hpp"

#include <cstdint>
#include <optional>
#include <string_view>
#include <string>
#include <vector>

namespace netshare::ledger {

/// Submitter identity used for transactions placed in the genesis block.
inline const PdlId kGenesisSubmitter{"genesis"};

struct Authority
{
  PdlId       pdl_id;
  std::string label;

  bool operator==(const Authority &) const = default;
};

struct Transaction
{
  PdlId           submitter;
  ContractAddress contract;  // zero address for deployments and genesis entries
  std::uint64_t   nonce{0};
  SimTime         submit_ts{0};
  Bytes           payload;

  bool operator==(const Transaction &) const = default;
};

struct BlockHeader
{
  std::uint64_t height{0};
  Digest        parent_digest{};
  PdlId         sealer;
  SimTime       seal_ts{0};
  Digest        tx_digest{};

  bool operator==(const BlockHeader &) const = default;
};

/// A sealed block. `digest` is the header digest as recorded by the sealer;
/// verification recomputes it.
struct Block
{
  BlockHeader              header;
  std::vector<Transaction> transactions;
  Digest                   digest{};

  bool operator==(const Block &) const = default;
};

struct LedgerConfig
{
  SimDuration            block_interval{Seconds{15}};
  std::uint32_t          tps_cap{20};
  std::uint32_t          mempool_cap{200};
  std::uint32_t          batch_size{0};  // 0: tps_cap * block interval in seconds
  std::uint32_t          max_payload{1024};
  std::vector<Authority> authorities;

  /// Throws Error(InvalidConfig) when an invariant does not hold.
  void          validate() const;
  std::uint32_t effective_batch_size() const;
};

enum class RejectReason
{
  Unauthorized,
  BadNonce,
  RateCapped,
  MempoolFull,
};

std::string_view to_string(RejectReason reason) noexcept;

/// Outcome of submit_transaction: admitted, or rejected with a reason.
struct SubmitResult
{
  std::optional<RejectReason> rejection;

  bool admitted() const noexcept { return !rejection.has_value(); }

  static SubmitResult accept() { return {}; }
  static SubmitResult reject(RejectReason r) { return {r}; }
};

struct CommittedTx
{
  Transaction   tx;
  std::uint64_t height{0};
  std::uint32_t index{0};  // position within the block
};

struct HeightRange
{
  std::uint64_t first{0};
  std::uint64_t last{0};  // inclusive
};

}  // namespace netshare::ledger
