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

#include "netshare/network/simulation.hpp"

#include "netshare/common/error.hpp"
#include "netshare/common/hex.hpp"
#include "netshare/common/random.hpp"
#include "netshare/contracts/payload.hpp"

#include <json.hpp>

#include <algorithm>

namespace netshare::network {
namespace {

using ordered_json = nlohmann::ordered_json;
using contracts::RecordRole;

constexpr std::uint64_t kMaxDrainBlocks = 10'000;

ordered_json base(SimTime at, std::string_view event)
{
  ordered_json j;
  j["t_us"]  = at.count();
  j["event"] = event;
  return j;
}

}  // namespace

std::string_view to_string(EventTag tag) noexcept
{
  switch (tag)
  {
  case EventTag::RequestArrival: return "RequestArrival";
  case EventTag::RequestReady: return "RequestReady";
  case EventTag::FlowStart: return "FlowStart";
  case EventTag::HopArrival: return "HopArrival";
  case EventTag::RecordSubmit: return "RecordSubmit";
  case EventTag::SealDue: return "SealDue";
  case EventTag::Tick: return "Tick";
  case EventTag::Governance: return "Governance";
  case EventTag::IpChange: return "IpChange";
  }
  return "?";
}

Simulation::Simulation(const Scenario &scenario, std::uint64_t seed)
  : scenario_(scenario)
  , seed_(seed)
{
  try
  {
    TopologySpec spec;
    for (const auto &d : scenario_.devices)
    {
      Device dev;
      dev.id          = d.id;
      dev.ip          = d.ip;
      dev.behavior    = d.behavior;
      dev.tee_enabled = d.tee;
      spec.devices.push_back(std::move(dev));
    }
    spec.links = scenario_.links;
    topology_  = Topology::build(std::move(spec));
  }
  catch (const Error &e)
  {
    throw Error(ErrorCode::SpecValidationError, e.what());
  }

  orchestrator_ = std::make_unique<orchestration::OrchestrationManager>(topology_);
  std::map<std::string, PdlId> ids;
  for (const auto &p : scenario_.participants)
  {
    ids.emplace(p.label, orchestrator_->register_participant(p.kind, p.label).pdl_id);
  }
  for (const auto &d : scenario_.devices)
  {
    auto &dev  = topology_.device(d.id);
    dev.owner  = ids.at(d.owner);
    dev.vendor = d.vendor.empty() ? PdlId{} : ids.at(d.vendor);
    orchestrator_->assign_pdl_id(d.id);
  }

  ledger::LedgerConfig config;
  config.block_interval = scenario_.ledger.block_interval;
  config.tps_cap        = scenario_.ledger.tps_cap;
  config.mempool_cap    = scenario_.ledger.mempool_cap;
  config.batch_size     = scenario_.ledger.batch_size;
  config.max_payload    = scenario_.ledger.max_payload;
  for (const auto &label : scenario_.ledger.authorities)
  {
    config.authorities.push_back({ids.at(label), label});
  }
  if (scenario_.ledger.authorities.empty())
  {
    for (const auto &p : scenario_.participants)
    {
      if (p.kind == orchestration::ParticipantKind::Owner ||
          p.kind == orchestration::ParticipantKind::OwnerTenant)
      {
        config.authorities.push_back({ids.at(p.label), p.label});
      }
    }
  }
  try
  {
    config.validate();
  }
  catch (const Error &e)
  {
    throw Error(ErrorCode::SpecValidationError, std::string("ledger: ") + e.what());
  }
  ledger_ = std::make_unique<ledger::Ledger>(
      config, std::vector<Bytes>{contracts::encode_operation(contracts::ManifestOp{topology_.manifest()})});
  engine_ = std::make_unique<contracts::ContractEngine>(
      *ledger_, contracts::EngineConfig{scenario_.overheads.deploy_delay});
  orchestrator_->connect(*ledger_, *engine_, SimTime{0});
  blacklist_ = std::make_unique<audit::Blacklist>(*ledger_, scenario_.governance.quorum);
  blacklist_->on_blacklist([this](const audit::BlacklistEntry &e) { orchestrator_->revoke(e.node); });

  processor_.capture_delay  = scenario_.overheads.capture_delay;
  processor_.hash_delay     = scenario_.overheads.hash_delay;
  processor_.clock_epoch_ms = scenario_.clock_epoch_ms;

  flow_schedule_ = scenario_.flows;
  std::set<FlowId> taken;
  for (const auto &f : flow_schedule_)
  {
    taken.insert(f.id);
  }
  // Two flows of one request starting in the same millisecond would hash to
  // the same record, so generated start times are distinct per request.
  std::set<std::pair<RequestId, SimTime>> slots;
  for (const auto &f : flow_schedule_)
  {
    slots.emplace(f.request, std::chrono::floor<Millis>(f.at));
  }
  DeterministicRng rng(seed_);
  for (std::size_t g = 0; g < scenario_.flow_generators.size(); ++g)
  {
    const auto &gen  = scenario_.flow_generators[g];
    const auto  span = static_cast<std::uint64_t>(std::chrono::floor<Millis>(gen.to - gen.from).count());
    if (gen.count > span / 2)
    {
      throw Error(ErrorCode::SpecValidationError,
                  "flow_generators[" + std::to_string(g) + "]: count exceeds half the window in ms");
    }
    for (std::uint32_t k = 0; k < gen.count; ++k)
    {
      FlowSpec f;
      f.id      = FlowId{gen.request.str() + "-g" + std::to_string(g) + "-" + std::to_string(k)};
      f.request = gen.request;
      do
      {
        f.at = gen.from + Millis{static_cast<std::int64_t>(rng.below(span))};
      } while (!slots.emplace(f.request, f.at).second);
      if (!taken.insert(f.id).second)
      {
        throw Error(ErrorCode::SpecValidationError, "generated flow id collides: " + f.id.str());
      }
      flow_schedule_.push_back(std::move(f));
    }
  }

  for (std::size_t i = 0; i < scenario_.requests.size(); ++i)
  {
    schedule({scenario_.requests[i].at, EventTag::RequestArrival, 0, i});
  }
  for (std::size_t i = 0; i < flow_schedule_.size(); ++i)
  {
    schedule({flow_schedule_[i].at, EventTag::FlowStart, 0, i});
  }
  for (std::size_t i = 0; i < scenario_.ip_changes.size(); ++i)
  {
    schedule({scenario_.ip_changes[i].at, EventTag::IpChange, 0, i});
  }
  for (std::size_t i = 0; i < scenario_.governance.blacklist.size(); ++i)
  {
    schedule({scenario_.governance.blacklist[i].at, EventTag::Governance, 0, i});
  }
  schedule({ledger_->next_seal_due(), EventTag::SealDue});
  schedule({SimTime{0} + scenario_.overheads.tick_interval, EventTag::Tick});
}

Simulation::~Simulation() = default;

bool Simulation::idle() const noexcept
{
  return queue_.empty();
}

namespace {

template <class E>
bool later(const E &a, const E &b)
{
  return std::tie(a.at, a.tag, a.seq) > std::tie(b.at, b.tag, b.seq);
}

}  // namespace

void Simulation::schedule(Event event)
{
  event.seq = next_seq_++;
  queue_.push_back(std::move(event));
  std::push_heap(queue_.begin(), queue_.end(), later<Event>);
}

std::vector<TraceRecord> Simulation::advance(SimTime until)
{
  const auto first = trace_.size();
  while (!queue_.empty() && queue_.front().at <= until)
  {
    std::pop_heap(queue_.begin(), queue_.end(), later<Event>);
    Event e = std::move(queue_.back());
    queue_.pop_back();
    now_ = e.at;
    dispatch(e);
  }
  if (until > now_ && (queue_.empty() || until < queue_.front().at))
  {
    now_ = until;
  }
  return {trace_.begin() + static_cast<std::ptrdiff_t>(first), trace_.end()};
}

void Simulation::run_to_completion()
{
  advance(scenario_.duration);
  while (!queue_.empty())
  {
    advance(queue_.front().at);
  }
}

bool Simulation::has_pending_work() const
{
  if (!ledger_->mempool().empty())
  {
    return true;
  }
  return std::any_of(queue_.begin(), queue_.end(), [](const Event &e) {
    return e.tag == EventTag::HopArrival || e.tag == EventTag::RecordSubmit;
  });
}

void Simulation::emit(std::string json)
{
  trace_.push_back({now_, std::move(json)});
}

void Simulation::dispatch(const Event &e)
{
  switch (e.tag)
  {
  case EventTag::RequestArrival: on_request_arrival(e); break;
  case EventTag::RequestReady: on_request_ready(e); break;
  case EventTag::FlowStart: on_flow_start(e); break;
  case EventTag::HopArrival: on_hop_arrival(e); break;
  case EventTag::RecordSubmit: on_record_submit(e); break;
  case EventTag::SealDue: on_seal_due(e); break;
  case EventTag::Tick: on_tick(e); break;
  case EventTag::Governance: on_governance(e); break;
  case EventTag::IpChange:
  {
    const auto &c = scenario_.ip_changes[e.index];
    change_ip(c.device, c.ip, e.at);
    break;
  }
  }
}

orchestration::ResourceRequest Simulation::to_request(const RequestSpec &spec) const
{
  orchestration::ResourceRequest r;
  r.request_id = spec.id;
  if (const auto *p = orchestrator_->access().find_label(spec.tenant))
  {
    r.tenant     = p->pdl_id;
    r.credential = p->credential;
  }
  else
  {
    r.tenant = PdlId{"unregistered:" + spec.tenant};
  }
  r.src_device     = topology_.device(spec.src).pdl_id;
  r.dst_device     = topology_.device(spec.dst).pdl_id;
  r.bandwidth      = spec.bandwidth;
  r.lease_duration = spec.lease;
  r.latency_target = spec.latency_target;
  r.submitted_at   = spec.at;
  r.price          = spec.price;
  r.penalty_rate   = spec.penalty_rate;
  return r;
}

void Simulation::log_orchestration(const orchestration::OrchestrationEvent &ev)
{
  using Kind = orchestration::OrchestrationEvent::Kind;
  auto j          = base(ev.at, to_string(ev.kind));
  j["request_id"] = ev.request_id.str();
  switch (ev.kind)
  {
  case Kind::Confirmed:
    ++outcomes_.confirmed;
    j["sla"] = ev.sla.hex();
    break;
  case Kind::Waitlisted: ++outcomes_.waitlisted; break;
  case Kind::Denied:
    ++outcomes_.denied[std::string(to_string(*ev.reason))];
    j["reason"] = to_string(*ev.reason);
    break;
  case Kind::Expired:
    ++outcomes_.expired;
    j["sla"] = ev.sla.hex();
    break;
  case Kind::ExpiryDeferred: j["sla"] = ev.sla.hex(); break;
  }
  emit(j.dump());
}

void Simulation::on_request_arrival(const Event &e)
{
  const auto req = to_request(scenario_.requests[e.index]);
  auto       j   = base(e.at, "RequestArrival");
  j["request_id"] = req.request_id.str();
  emit(j.dump());
  if (auto denied = orchestrator_->prepare(req, e.at))
  {
    log_orchestration({e.at, orchestration::OrchestrationEvent::Kind::Denied, req.request_id,
                       denied->reason, {}});
    return;
  }
  schedule({e.at + scenario_.overheads.deploy_delay, EventTag::RequestReady, 0, e.index});
}

void Simulation::on_request_ready(const Event &e)
{
  using Kind     = orchestration::OrchestrationEvent::Kind;
  const auto req = to_request(scenario_.requests[e.index]);
  const auto out = orchestrator_->handle_request(req, e.at);
  if (const auto *c = std::get_if<orchestration::Confirmed>(&out))
  {
    log_orchestration({e.at, Kind::Confirmed, req.request_id, std::nullopt, c->allocation.sla});
  }
  else if (std::holds_alternative<orchestration::Waitlisted>(out))
  {
    log_orchestration({e.at, Kind::Waitlisted, req.request_id, std::nullopt, {}});
  }
  else
  {
    log_orchestration({e.at, Kind::Denied, req.request_id,
                       std::get<orchestration::Denied>(out).reason, {}});
  }
}

void Simulation::on_flow_start(const Event &e)
{
  const auto &spec = flow_schedule_[e.index];
  auto        skip = [&](std::string_view why) {
    ++outcomes_.flows_skipped;
    auto j       = base(e.at, "FlowSkipped");
    j["flow_id"] = spec.id.str();
    j["reason"]  = why;
    emit(j.dump());
  };

  const auto *alloc = orchestrator_->log().find(spec.request);
  if (alloc == nullptr || e.at < alloc->start || e.at >= alloc->end)
  {
    skip("NoLiveAllocation");
    return;
  }
  const auto &src = alloc->path.devices.front();
  const auto &dst = alloc->path.devices.back();

  FlowRun run;
  run.source       = src;
  run.destination  = dst;
  run.flow.id      = spec.id;
  run.flow.request = spec.request;
  run.flow.sla     = alloc->sla;
  run.flow.src_ip  = topology_.device(src).ip;
  run.flow.dst_ip  = topology_.device(dst).ip;
  run.flow.start   = e.at;
  run.flow.path    = route(topology_, src, dst);
  run.flow.arrivals = arrival_times(topology_, run.flow.path, e.at);

  try
  {
    engine_->open_flow(alloc->sla, orchestrator_->pdl_id(), spec.id, e.at);
  }
  catch (const ledger::LedgerRejected &r)
  {
    skip(std::string("OpenFlowRejected:") + std::string(to_string(r.reason())));
    return;
  }
  catch (const Error &err)
  {
    skip(std::string("OpenFlowRejected:") + std::string(to_string(err.code())));
    return;
  }

  ++outcomes_.flows_started;
  const auto idx = flows_.size();
  flow_index_.emplace(spec.id, idx);
  flows_.push_back(std::move(run));
  const auto &flow = flows_.back().flow;

  auto j          = base(e.at, "FlowStart");
  j["flow_id"]    = flow.id.str();
  j["request_id"] = flow.request.str();
  j["path"]       = ordered_json::array();
  for (const auto &d : flow.path.devices)
  {
    j["path"].push_back(d.str());
  }
  j["path_latency_ms"] = flow.path.latency.count();
  if (flow.path.diverted_at)
  {
    j["diverted_at"] = flow.path.diverted_at->str();
  }
  emit(j.dump());

  // The source records now; later devices on their arrival.
  Event src_event{e.at, EventTag::HopArrival, 0, idx, 0, RecordRole::Source};
  on_hop_arrival(src_event);
  for (std::size_t h = 1; h < flow.path.devices.size(); ++h)
  {
    const bool last = h + 1 == flow.path.devices.size();
    if (!last && !scenario_.full_path_recording)
    {
      continue;
    }
    schedule({flow.arrivals[h], EventTag::HopArrival, 0, idx, h,
              last ? RecordRole::Destination : RecordRole::Hop});
  }
}

void Simulation::on_hop_arrival(const Event &e)
{
  auto       &run    = flows_[e.index];
  const auto &device = topology_.device(run.flow.path.devices[e.hop]);
  if (e.role == RecordRole::Destination)
  {
    run.completed = true;
  }
  auto preimage = capture_endpoint(device, run.flow, e.at, processor_);
  if (!preimage)
  {
    ++outcomes_.records_dropped;
    auto j       = base(e.at, "RecordDropped");
    j["flow_id"] = run.flow.id.str();
    j["role"]    = to_string(e.role);
    j["device"]  = device.id.str();
    emit(j.dump());
    return;
  }
  auto j           = base(e.at, "RecordCaptured");
  j["flow_id"]     = run.flow.id.str();
  j["role"]        = to_string(e.role);
  j["device"]      = device.id.str();
  j["digest"]      = to_hex(preimage->digest());
  emit(j.dump());
  disclosure_.records.push_back(contracts::disclose(run.flow.id, e.role, *preimage));

  Event submit{e.at + processor_.processing_delay(), EventTag::RecordSubmit, 0, e.index, e.hop, e.role};
  submit.preimage = std::move(preimage);
  schedule(std::move(submit));
}

void Simulation::on_record_submit(const Event &e)
{
  const auto &run    = flows_[e.index];
  const auto &device = topology_.device(run.flow.path.devices[e.hop]);
  auto        j      = base(e.at, "RecordSubmitted");
  j["flow_id"]       = run.flow.id.str();
  j["role"]          = to_string(e.role);
  j["device"]        = device.id.str();
  try
  {
    engine_->record_flow(orchestrator_->registry(), *e.preimage, e.role, device.pdl_id, e.at);
  }
  catch (const ledger::LedgerRejected &r)
  {
    ++outcomes_.records_rejected;
    j["event"]  = "RecordRejected";
    j["reason"] = to_string(r.reason());
  }
  catch (const Error &err)
  {
    ++outcomes_.records_rejected;
    j["event"]  = "RecordRejected";
    j["reason"] = to_string(err.code());
  }
  emit(j.dump());
}

void Simulation::on_seal_due(const Event &e)
{
  auto sealed = ledger_->seal_block(e.at);
  if (const auto *block = std::get_if<ledger::Block>(&sealed))
  {
    engine_->on_block(*block);
    std::uint64_t records = 0;
    for (const auto &tx : block->transactions)
    {
      if (contracts::peek_opcode(tx.payload) == contracts::Opcode::RecordFlow)
      {
        ++records;
        commits_.push_back({tx.submit_ts, block->header.seal_ts});
      }
    }
    auto j       = base(e.at, "BlockSealed");
    j["height"]  = block->header.height;
    j["sealer"]  = block->header.sealer.str();
    j["txs"]     = block->transactions.size();
    j["records"] = records;
    j["digest"]  = to_hex(block->digest);
    emit(j.dump());
  }
  const auto next = ledger_->next_seal_due();
  if (next <= scenario_.duration)
  {
    schedule({next, EventTag::SealDue});
  }
  else if (has_pending_work() && drain_blocks_ < kMaxDrainBlocks)
  {
    ++drain_blocks_;
    schedule({next, EventTag::SealDue});
  }
}

void Simulation::on_tick(const Event &e)
{
  for (const auto &ev : orchestrator_->tick(e.at))
  {
    log_orchestration(ev);
  }
  const auto next = e.at + scenario_.overheads.tick_interval;
  if (next <= scenario_.duration)
  {
    schedule({next, EventTag::Tick});
  }
}

void Simulation::blacklist(const PdlId &node, const std::string &reason, SimTime now)
{
  auto j      = base(now, "Blacklisted");
  j["node"]   = node.str();
  j["reason"] = reason;
  try
  {
    blacklist_->blacklist_node(node, reason, now);
  }
  catch (const Error &err)
  {
    j["event"]  = "BlacklistRefused";
    j["reason"] = to_string(err.code());
  }
  emit(j.dump());
}

void Simulation::on_governance(const Event &e)
{
  const auto &b = scenario_.governance.blacklist[e.index];
  PdlId       node;
  if (topology_.has_device(DeviceId{b.node}))
  {
    node = topology_.device(DeviceId{b.node}).pdl_id;
  }
  else
  {
    node = orchestrator_->access().find_label(b.node)->pdl_id;
  }
  blacklist(node, b.reason, e.at);
}

void Simulation::apply_auto_blacklist(const audit::AuditReport &report)
{
  if (!scenario_.governance.auto_blacklist)
  {
    return;
  }
  for (const auto &node : report.blacklist_eligible)
  {
    if (!blacklist_->contains(node))
    {
      blacklist(node, "unverifiable flow records", now_);
    }
  }
}

TraceRecord Simulation::change_ip(const DeviceId &device, Ipv4 ip, SimTime now)
{
  auto      &dev = topology_.device(device);
  auto       j   = base(now, dev.ip == ip ? "IpUnchanged" : "IpChanged");
  j["device"]    = device.str();
  j["pdl_id"]    = dev.pdl_id.str();
  j["old_ip"]    = dev.ip.str();
  j["new_ip"]    = ip.str();
  dev.ip         = ip;
  const auto out = TraceRecord{now, j.dump()};
  trace_.push_back(out);
  return out;
}

}  // namespace netshare::network
