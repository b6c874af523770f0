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

#include "netshare/network/scenario.hpp"

#include "netshare/common/error.hpp"

#include <json.hpp>

#include <fstream>
#include <limits>
#include <set>
#include <sstream>

namespace netshare::network {
namespace {

using json = nlohmann::json;
using orchestration::ParticipantKind;

[[noreturn]] void invalid(const std::string &path, const std::string &what)
{
  throw Error(ErrorCode::SpecValidationError, path + ": " + what);
}

// Typed access to one JSON object that rejects unknown keys.
class Object
{
public:
  Object(const json &j, std::string path)
    : j_(j)
    , path_(std::move(path))
  {
    if (!j_.is_object())
    {
      invalid(path_.empty() ? "<root>" : path_, "expected an object");
    }
  }

  std::string at(std::string_view key) const
  {
    return path_.empty() ? std::string(key) : path_ + "." + std::string(key);
  }

  bool has(const std::string &key)
  {
    seen_.insert(key);
    return j_.contains(key);
  }

  std::int64_t integer(const std::string &key, std::optional<std::int64_t> fallback,
                       std::int64_t lo = std::numeric_limits<std::int64_t>::min(),
                       std::int64_t hi = std::numeric_limits<std::int64_t>::max())
  {
    if (!has(key))
    {
      if (!fallback)
      {
        invalid(at(key), "required field missing");
      }
      return *fallback;
    }
    const auto &v = j_.at(key);
    if (!v.is_number_integer())
    {
      invalid(at(key), "expected an integer");
    }
    if (v.is_number_unsigned() && v.get<std::uint64_t>() > static_cast<std::uint64_t>(hi))
    {
      invalid(at(key), "out of range");
    }
    const auto x = v.get<std::int64_t>();
    if (x < lo || x > hi)
    {
      invalid(at(key), "must be in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
    return x;
  }

  std::uint64_t unsigned_integer(const std::string &key, std::uint64_t fallback)
  {
    if (!has(key))
    {
      return fallback;
    }
    const auto &v = j_.at(key);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
    {
      invalid(at(key), "expected a non-negative integer");
    }
    return v.get<std::uint64_t>();
  }

  std::string string(const std::string &key, std::optional<std::string> fallback = std::nullopt)
  {
    if (!has(key))
    {
      if (!fallback)
      {
        invalid(at(key), "required field missing");
      }
      return *fallback;
    }
    const auto &v = j_.at(key);
    if (!v.is_string())
    {
      invalid(at(key), "expected a string");
    }
    return v.get<std::string>();
  }

  bool boolean(const std::string &key, bool fallback)
  {
    if (!has(key))
    {
      return fallback;
    }
    const auto &v = j_.at(key);
    if (!v.is_boolean())
    {
      invalid(at(key), "expected true or false");
    }
    return v.get<bool>();
  }

  const json *array(const std::string &key)
  {
    if (!has(key))
    {
      return nullptr;
    }
    const auto &v = j_.at(key);
    if (!v.is_array())
    {
      invalid(at(key), "expected an array");
    }
    return &v;
  }

  const json *object(const std::string &key)
  {
    if (!has(key))
    {
      return nullptr;
    }
    return &j_.at(key);
  }

  const json &raw(const std::string &key) const { return j_.at(key); }

  void done() const
  {
    for (const auto &[key, _] : j_.items())
    {
      if (!seen_.contains(key))
      {
        invalid(at(key), "unknown field");
      }
    }
  }

private:
  const json           &j_;
  std::string           path_;
  std::set<std::string> seen_;
};

std::string item(const std::string &base, std::size_t i)
{
  return base + "[" + std::to_string(i) + "]";
}

Ipv4 ip_field(Object &o, const std::string &key)
{
  const auto text = o.string(key);
  auto       ip   = Ipv4::parse(text);
  if (!ip)
  {
    invalid(o.at(key), "invalid IPv4 address '" + text + "'");
  }
  return *ip;
}

Behavior behavior_field(Object &o)
{
  if (!o.has("behavior"))
  {
    return {};
  }
  const auto &v = o.raw("behavior");
  Behavior    b;
  std::string kind;
  if (v.is_string())
  {
    kind = v.get<std::string>();
  }
  else
  {
    Object bo(v, o.at("behavior"));
    kind     = bo.string("kind");
    b.amount = Millis{bo.integer("amount_ms", 0, 0, 3'600'000)};
    bo.done();
  }
  auto k = parse_behavior(kind);
  if (!k)
  {
    invalid(o.at("behavior"), "unknown behavior '" + kind + "'");
  }
  b.kind = *k;
  if (b.kind != BehaviorKind::DelayedTimestamp && b.kind != BehaviorKind::SlowForward)
  {
    b.amount = Millis{0};
  }
  return b;
}

SimTime in_window(Object &o, const std::string &key, SimTime duration, std::int64_t unit_us)
{
  const auto x = o.integer(key, std::nullopt, 0);
  const auto t = SimTime{x * unit_us};
  if (t >= duration)
  {
    invalid(o.at(key), "must lie before the end of the run");
  }
  return t;
}

Scenario from_json(const json &root)
{
  Scenario s;
  Object   o(root, "");
  s.name = o.string("name");
  if (s.name.empty())
  {
    invalid("name", "must not be empty");
  }
  s.seed           = o.unsigned_integer("seed", 0);
  s.duration       = SimTime{Seconds{o.integer("duration_s", std::nullopt, 1, 10'000'000)}};
  s.clock_epoch_ms = o.integer("clock_epoch_ms", 0, 0, 9'999'999'999'999);

  // participants
  std::map<std::string, ParticipantKind> kinds;
  if (const auto *arr = o.array("participants"))
  {
    for (std::size_t i = 0; i < arr->size(); ++i)
    {
      Object          p((*arr)[i], item("participants", i));
      ParticipantSpec ps;
      ps.label = p.string("label");
      if (ps.label.empty())
      {
        invalid(p.at("label"), "must not be empty");
      }
      const auto kind = p.string("kind");
      auto       k    = orchestration::parse_participant_kind(kind);
      if (!k)
      {
        invalid(p.at("kind"), "unknown participant kind '" + kind + "'");
      }
      ps.kind = *k;
      p.done();
      if (!kinds.emplace(ps.label, ps.kind).second)
      {
        invalid(p.at("label"), "duplicate label '" + ps.label + "'");
      }
      s.participants.push_back(std::move(ps));
    }
  }
  auto is_owner = [&](const std::string &label) {
    auto it = kinds.find(label);
    return it != kinds.end() &&
           (it->second == ParticipantKind::Owner || it->second == ParticipantKind::OwnerTenant);
  };

  // ledger
  if (const auto *lj = o.object("ledger"))
  {
    Object l(*lj, "ledger");
    s.ledger.block_interval = SimDuration{Seconds{l.integer("block_interval_s", 15, 1, 86'400)}};
    s.ledger.tps_cap        = static_cast<std::uint32_t>(l.integer("tps_cap", 20, 1, 1'000'000));
    s.ledger.mempool_cap    = static_cast<std::uint32_t>(l.integer("mempool_cap", 200, 1, 10'000'000));
    s.ledger.batch_size     = static_cast<std::uint32_t>(l.integer("batch_size", 0, 0, 10'000'000));
    s.ledger.max_payload    = static_cast<std::uint32_t>(l.integer("max_payload", 1024, 256, 1 << 20));
    if (const auto *arr = l.array("authorities"))
    {
      std::set<std::string> dup;
      for (std::size_t i = 0; i < arr->size(); ++i)
      {
        const auto path = item("ledger.authorities", i);
        if (!(*arr)[i].is_string())
        {
          invalid(path, "expected a participant label");
        }
        auto label = (*arr)[i].get<std::string>();
        auto it    = kinds.find(label);
        if (it == kinds.end())
        {
          invalid(path, "unknown participant '" + label + "'");
        }
        if (it->second == ParticipantKind::Regulator)
        {
          invalid(path, "a regulator cannot seal blocks");
        }
        if (!dup.insert(label).second)
        {
          invalid(path, "duplicate authority '" + label + "'");
        }
        s.ledger.authorities.push_back(std::move(label));
      }
    }
    l.done();
  }
  if (s.ledger.authorities.empty())
  {
    for (const auto &p : s.participants)
    {
      if (is_owner(p.label))
      {
        s.ledger.authorities.push_back(p.label);
      }
    }
    if (s.ledger.authorities.empty())
    {
      invalid("ledger.authorities", "no authorities given and no owners to default to");
    }
  }

  if (const auto *oj = o.object("overheads"))
  {
    Object v(*oj, "overheads");
    s.overheads.capture_delay = SimDuration{v.integer("capture_delay_us", 650, 0, 60'000'000)};
    s.overheads.hash_delay    = SimDuration{v.integer("hash_delay_us", 310, 0, 60'000'000)};
    s.overheads.deploy_delay  = SimDuration{Seconds{v.integer("deploy_delay_s", 14, 0, 86'400)}};
    s.overheads.tick_interval = SimDuration{Millis{v.integer("tick_interval_ms", 1000, 1, 86'400'000)}};
    v.done();
  }
  if (const auto *rj = o.object("recording"))
  {
    Object r(*rj, "recording");
    s.full_path_recording = r.boolean("full_path", false);
    r.done();
  }

  // devices and links
  std::set<DeviceId> device_ids;
  if (const auto *arr = o.array("devices"))
  {
    for (std::size_t i = 0; i < arr->size(); ++i)
    {
      Object     d((*arr)[i], item("devices", i));
      DeviceSpec ds;
      ds.id = DeviceId{d.string("id")};
      if (ds.id.empty())
      {
        invalid(d.at("id"), "must not be empty");
      }
      if (!device_ids.insert(ds.id).second)
      {
        invalid(d.at("id"), "duplicate device id '" + ds.id.str() + "'");
      }
      ds.ip    = ip_field(d, "ip");
      ds.owner = d.string("owner");
      if (!is_owner(ds.owner))
      {
        invalid(d.at("owner"), "'" + ds.owner + "' is not a registered owner");
      }
      ds.vendor = d.string("vendor", "");
      if (!ds.vendor.empty() &&
          (!kinds.contains(ds.vendor) || kinds.at(ds.vendor) != ParticipantKind::Vendor))
      {
        invalid(d.at("vendor"), "'" + ds.vendor + "' is not a registered vendor");
      }
      ds.behavior = behavior_field(d);
      ds.tee      = d.boolean("tee", false);
      d.done();
      s.devices.push_back(std::move(ds));
    }
  }
  if (s.devices.empty())
  {
    invalid("devices", "at least one device is required");
  }
  std::set<LinkId> link_ids;
  if (const auto *arr = o.array("links"))
  {
    for (std::size_t i = 0; i < arr->size(); ++i)
    {
      Object l((*arr)[i], item("links", i));
      Link   ls;
      ls.id = LinkId{l.string("id")};
      if (ls.id.empty() || !link_ids.insert(ls.id).second)
      {
        invalid(l.at("id"), "empty or duplicate link id");
      }
      ls.a = DeviceId{l.string("a")};
      ls.b = DeviceId{l.string("b")};
      for (const auto &[key, end] : {std::pair{"a", ls.a}, std::pair{"b", ls.b}})
      {
        if (!device_ids.contains(end))
        {
          invalid(l.at(key), "unknown device '" + end.str() + "'");
        }
      }
      if (ls.a == ls.b)
      {
        invalid(l.at("b"), "self-loop");
      }
      ls.capacity = l.integer("capacity", std::nullopt, 1);
      ls.latency  = Millis{l.integer("latency_ms", std::nullopt, 0, 3'600'000)};
      ls.cost     = l.integer("cost", 0, 0);
      l.done();
      s.links.push_back(std::move(ls));
    }
  }

  // requests and flows
  std::set<RequestId> request_ids;
  if (const auto *arr = o.array("requests"))
  {
    for (std::size_t i = 0; i < arr->size(); ++i)
    {
      Object      r((*arr)[i], item("requests", i));
      RequestSpec rs;
      rs.id = RequestId{r.string("id")};
      if (rs.id.empty() || !request_ids.insert(rs.id).second)
      {
        invalid(r.at("id"), "empty or duplicate request id");
      }
      rs.tenant = r.string("tenant");
      rs.src    = DeviceId{r.string("src")};
      rs.dst    = DeviceId{r.string("dst")};
      for (const auto &[key, end] : {std::pair{"src", rs.src}, std::pair{"dst", rs.dst}})
      {
        if (!device_ids.contains(end))
        {
          invalid(r.at(key), "unknown device '" + end.str() + "'");
        }
      }
      if (rs.src == rs.dst)
      {
        invalid(r.at("dst"), "must differ from src");
      }
      rs.bandwidth      = r.integer("bandwidth", std::nullopt, 1);
      rs.lease          = SimDuration{Seconds{r.integer("lease_s", std::nullopt, 1, 10'000'000)}};
      rs.latency_target = Millis{r.integer("latency_target_ms", std::nullopt, 1, 3'600'000)};
      rs.price          = r.integer("price", 0, 0);
      rs.penalty_rate   = r.integer("penalty_rate", 0, 0);
      rs.at             = in_window(r, "at_s", s.duration, 1'000'000);
      r.done();
      s.requests.push_back(std::move(rs));
    }
  }
  std::set<FlowId> flow_ids;
  if (const auto *arr = o.array("flows"))
  {
    for (std::size_t i = 0; i < arr->size(); ++i)
    {
      Object   f((*arr)[i], item("flows", i));
      FlowSpec fs;
      fs.id = FlowId{f.string("id")};
      if (fs.id.empty() || !flow_ids.insert(fs.id).second)
      {
        invalid(f.at("id"), "empty or duplicate flow id");
      }
      fs.request = RequestId{f.string("request")};
      if (!request_ids.contains(fs.request))
      {
        invalid(f.at("request"), "unknown request '" + fs.request.str() + "'");
      }
      fs.at = in_window(f, "at_ms", s.duration, 1000);
      f.done();
      s.flows.push_back(std::move(fs));
    }
  }
  if (const auto *arr = o.array("flow_generators"))
  {
    for (std::size_t i = 0; i < arr->size(); ++i)
    {
      Object            g((*arr)[i], item("flow_generators", i));
      FlowGeneratorSpec gs;
      gs.request = RequestId{g.string("request")};
      if (!request_ids.contains(gs.request))
      {
        invalid(g.at("request"), "unknown request '" + gs.request.str() + "'");
      }
      gs.count = static_cast<std::uint32_t>(g.integer("count", std::nullopt, 0, 1'000'000));
      gs.from  = SimTime{Millis{g.integer("from_ms", std::nullopt, 0)}};
      gs.to    = SimTime{Millis{g.integer("to_ms", std::nullopt, 0)}};
      if (gs.from >= gs.to || gs.to > s.duration)
      {
        invalid(g.at("to_ms"), "need from_ms < to_ms <= duration");
      }
      g.done();
      s.flow_generators.push_back(std::move(gs));
    }
  }
  if (const auto *arr = o.array("ip_changes"))
  {
    for (std::size_t i = 0; i < arr->size(); ++i)
    {
      Object       c((*arr)[i], item("ip_changes", i));
      IpChangeSpec cs;
      cs.device = DeviceId{c.string("device")};
      if (!device_ids.contains(cs.device))
      {
        invalid(c.at("device"), "unknown device '" + cs.device.str() + "'");
      }
      cs.ip = ip_field(c, "ip");
      cs.at = in_window(c, "at_ms", s.duration, 1000);
      c.done();
      s.ip_changes.push_back(std::move(cs));
    }
  }
  if (const auto *gj = o.object("governance"))
  {
    Object g(*gj, "governance");
    s.governance.quorum         = g.boolean("quorum", false);
    s.governance.auto_blacklist = g.boolean("auto_blacklist", false);
    if (s.governance.auto_blacklist && !s.governance.quorum)
    {
      invalid("governance.auto_blacklist", "requires quorum");
    }
    if (const auto *arr = g.array("blacklist"))
    {
      for (std::size_t i = 0; i < arr->size(); ++i)
      {
        Object        b((*arr)[i], item("governance.blacklist", i));
        BlacklistSpec bs;
        bs.node = b.string("node");
        if (!device_ids.contains(DeviceId{bs.node}) && !kinds.contains(bs.node))
        {
          invalid(b.at("node"), "unknown device or participant '" + bs.node + "'");
        }
        bs.reason = b.string("reason", "governance decision");
        bs.at     = in_window(b, "at_ms", s.duration, 1000);
        b.done();
        s.governance.blacklist.push_back(std::move(bs));
      }
    }
    g.done();
  }
  o.done();
  return s;
}

}  // namespace

Scenario parse_scenario(std::string_view text)
{
  json root;
  try
  {
    root = json::parse(text.begin(), text.end());
  }
  catch (const json::parse_error &e)
  {
    std::size_t line = 1;
    std::size_t col  = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i)
    {
      if (text[i] == '\n')
      {
        ++line;
        col = 1;
      }
      else
      {
        ++col;
      }
    }
    std::string what = e.what();
    if (auto pos = what.find("parse error"); pos != std::string::npos)
    {
      what = what.substr(pos);
    }
    throw Error(ErrorCode::SpecParseError,
                "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + what);
  }
  return from_json(root);
}

Scenario load_scenario(const std::string &path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
  {
    throw Error(ErrorCode::SpecParseError, "cannot open " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

}  // namespace netshare::network
