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

#include "netshare/contracts/types.hpp"
#include "netshare/ledger/types.hpp"

#include <optional>
#include <span>

namespace netshare::contracts {

/// Position of the transaction being executed.
struct BlockContext
{
  std::uint64_t height{0};
  std::uint32_t index{0};
};

/// Height used when applying not-yet-committed transactions to a speculative
/// view.
inline constexpr std::uint64_t kPendingHeight = ~std::uint64_t{0};

/// Validates `tx` against `state` without modifying it.
std::optional<FailureReason> check(const ContractState &state, const ledger::Transaction &tx,
                                   const BlockContext &ctx);

/// Applies one committed transaction in place. A transaction that fails
/// validation leaves contract state untouched and is appended to
/// state.failures. Returns the failure, if any.
std::optional<FailureReason> apply(ContractState &state, const ledger::Transaction &tx,
                                   const BlockContext &ctx);

/// Pure form of apply().
ContractState execute(const ContractState &state, const ledger::Transaction &tx,
                      const BlockContext &ctx);

void apply_block(ContractState &state, const ledger::Block &block);

/// Rebuilds contract state from genesis.
ContractState replay(std::span<const ledger::Block> chain);

}  // namespace netshare::contracts
