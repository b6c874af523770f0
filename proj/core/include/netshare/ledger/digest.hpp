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

#include "netshare/ledger/types.hpp"

#include <span>

namespace netshare::ledger {

Bytes  encode_transaction(const Transaction &tx);
Digest transaction_id(const Transaction &tx);

/// Digest over the ordered transaction ids of a block.
Digest transactions_digest(std::span<const Transaction> txs);

Bytes  encode_header(const BlockHeader &header);
Digest header_digest(const BlockHeader &header);

}  // namespace netshare::ledger
