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

#include "netshare/ledger/digest.hpp"

#include "netshare/common/codec.hpp"
#include "netshare/crypto/sha3.hpp"

namespace netshare::ledger {

Bytes encode_transaction(const Transaction &tx)
{
  ByteWriter w;
  w.str(tx.submitter.str())
      .digest(tx.contract.bytes)
      .u64(tx.nonce)
      .i64(tx.submit_ts.count())
      .blob(tx.payload);
  return std::move(w).take();
}

Digest transaction_id(const Transaction &tx)
{
  return crypto::sha3_256(encode_transaction(tx));
}

Digest transactions_digest(std::span<const Transaction> txs)
{
  crypto::Sha3_256 h;
  for (const auto &tx : txs)
  {
    const Digest id = transaction_id(tx);
    h.update(id);
  }
  return h.finish();
}

Bytes encode_header(const BlockHeader &header)
{
  ByteWriter w;
  w.u64(header.height)
      .digest(header.parent_digest)
      .str(header.sealer.str())
      .i64(header.seal_ts.count())
      .digest(header.tx_digest);
  return std::move(w).take();
}

Digest header_digest(const BlockHeader &header)
{
  return crypto::sha3_256(encode_header(header));
}

}  // namespace netshare::ledger
