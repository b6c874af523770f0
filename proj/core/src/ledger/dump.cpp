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

#include "netshare/ledger/dump.hpp"

#include "netshare/common/error.hpp"
#include "netshare/common/hex.hpp"

#include <json.hpp>

#include <fstream>
#include <istream>
#include <ostream>

namespace netshare::ledger {
namespace {

using ordered_json = nlohmann::ordered_json;

Digest parse_digest(const ordered_json &j, const char *field)
{
  auto d = digest_from_hex(j.at(field).get<std::string>());
  if (!d)
  {
    throw Error(ErrorCode::DumpParseError, std::string("field ") + field + " is not a 32-byte hex digest");
  }
  return *d;
}

template <class T>
T parse_int(const ordered_json &j, const char *field)
{
  const auto &v = j.at(field);
  if (!v.is_number_integer())
  {
    throw Error(ErrorCode::DumpParseError, std::string("field ") + field + " is not an integer");
  }
  return v.get<T>();
}

}  // namespace

std::string dump_block(const Block &block)
{
  ordered_json j;
  j["height"]        = block.header.height;
  j["parent_digest"] = to_hex(block.header.parent_digest);
  j["sealer"]        = block.header.sealer.str();
  j["seal_ts_us"]    = block.header.seal_ts.count();
  j["tx_digest"]     = to_hex(block.header.tx_digest);
  j["digest"]        = to_hex(block.digest);
  auto txs           = ordered_json::array();
  for (const auto &tx : block.transactions)
  {
    ordered_json t;
    t["submitter"]    = tx.submitter.str();
    t["contract"]     = tx.contract.hex();
    t["nonce"]        = tx.nonce;
    t["submit_ts_us"] = tx.submit_ts.count();
    t["payload"]      = to_hex(tx.payload);
    txs.push_back(std::move(t));
  }
  j["txs"] = std::move(txs);
  return j.dump();
}

void write_dump(std::ostream &out, std::span<const Block> chain)
{
  for (const auto &block : chain)
  {
    out << dump_block(block) << '\n';
  }
}

std::vector<Block> read_dump(std::istream &in)
{
  std::vector<Block> chain;
  std::string        line;
  std::size_t        line_no = 0;
  while (std::getline(in, line))
  {
    ++line_no;
    if (line.empty())
    {
      continue;
    }
    try
    {
      const auto j = ordered_json::parse(line);
      Block      b;
      b.header.height        = parse_int<std::uint64_t>(j, "height");
      b.header.parent_digest = parse_digest(j, "parent_digest");
      b.header.sealer        = PdlId{j.at("sealer").get<std::string>()};
      b.header.seal_ts       = SimTime{parse_int<std::int64_t>(j, "seal_ts_us")};
      b.header.tx_digest     = parse_digest(j, "tx_digest");
      b.digest               = parse_digest(j, "digest");
      for (const auto &t : j.at("txs"))
      {
        Transaction tx;
        tx.submitter = PdlId{t.at("submitter").get<std::string>()};
        auto addr    = ContractAddress::from_hex(t.at("contract").get<std::string>());
        if (!addr)
        {
          throw Error(ErrorCode::DumpParseError, "field contract is not a 32-byte hex digest");
        }
        tx.contract  = *addr;
        tx.nonce     = parse_int<std::uint64_t>(t, "nonce");
        tx.submit_ts = SimTime{parse_int<std::int64_t>(t, "submit_ts_us")};
        auto payload = from_hex(t.at("payload").get<std::string>());
        if (!payload)
        {
          throw Error(ErrorCode::DumpParseError, "field payload is not lowercase hex");
        }
        tx.payload = std::move(*payload);
        b.transactions.push_back(std::move(tx));
      }
      chain.push_back(std::move(b));
    }
    catch (const Error &e)
    {
      throw Error(ErrorCode::DumpParseError, "line " + std::to_string(line_no) + ": " + e.what());
    }
    catch (const nlohmann::json::exception &e)
    {
      throw Error(ErrorCode::DumpParseError, "line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return chain;
}

std::vector<Block> read_dump_file(const std::string &path)
{
  std::ifstream in(path);
  if (!in)
  {
    throw Error(ErrorCode::DumpParseError, "cannot open " + path);
  }
  return read_dump(in);
}

}  // namespace netshare::ledger
