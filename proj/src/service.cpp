// Copyright 2026 The ppbench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ppbench/service.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>

#include "ppbench/bytes.hpp"
#include "ppbench/codec.hpp"
#include "ppbench/errors.hpp"
#include "ppbench/provider.hpp"
#include "ppbench/rng.hpp"
#include "ppbench/session_log.hpp"

namespace ppbench::transport {

using nlohmann::json;

namespace {

json ConfigJson(const SessionConfig& cfg) {
  json doc = {
      {"session", cfg.session_id},
      {"roster", cfg.roster},
      {"modulus", BigToHex(cfg.pk.n)},
      {"input_bits", cfg.domain.input_bits},
      {"compare_blind_bits", cfg.domain.compare_blind_bits},
      {"decimal_places", cfg.domain.decimal_places},
      {"min_peers", cfg.min_peers},
      {"result_places", cfg.result_places},
      {"provider_seed", std::to_string(cfg.provider_seed)},
  };
  if (cfg.fault.equivocate) {
    doc["fault"] = {{"measure", std::string(MeasureName(*cfg.fault.equivocate))},
                    {"target", cfg.fault.target}};
  }
  return doc;
}

SessionConfig ConfigFromJson(const json& doc) {
  try {
    SessionConfig cfg;
    cfg.session_id = doc.at("session").get<std::string>();
    cfg.roster = doc.at("roster").get<std::vector<std::string>>();
    cfg.pk = paillier::PublicKey::FromModulus(
        BigFromHex(doc.at("modulus").get<std::string>()));
    cfg.domain.modulus_bits = cfg.pk.bits;
    cfg.domain.input_bits = doc.value("input_bits", cfg.domain.input_bits);
    cfg.domain.compare_blind_bits =
        doc.value("compare_blind_bits", cfg.domain.compare_blind_bits);
    cfg.domain.decimal_places = doc.value("decimal_places", cfg.domain.decimal_places);
    cfg.min_peers = doc.value("min_peers", cfg.min_peers);
    cfg.result_places = doc.value("result_places", cfg.result_places);
    cfg.provider_seed = std::stoull(doc.value("provider_seed", std::string("0")));
    if (doc.contains("fault")) {
      const json& f = doc.at("fault");
      auto m = MeasureFromName(f.at("measure").get<std::string>());
      if (!m) throw Error(ErrorCode::kSchemaViolation, "fault.measure: unknown");
      cfg.fault.equivocate = *m;
      cfg.fault.target = f.at("target").get<std::size_t>();
    }
    return cfg;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kSchemaViolation, std::string("session config: ") + e.what());
  } catch (const std::logic_error& e) {
    throw Error(ErrorCode::kSchemaViolation, std::string("session config: ") + e.what());
  }
}

bool ValidSessionId(const std::string& id) {
  if (id.empty() || id.size() > 64) return false;
  return std::all_of(id.begin(), id.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           (c >= '0' && c <= '9') || c == '-' || c == '_';
  });
}

Digest256 HashStrings(const std::vector<std::string>& parts) {
  std::string all;
  for (const auto& p : parts) all += p + "\n";
  return Sha256(std::span(reinterpret_cast<const std::uint8_t*>(all.data()), all.size()));
}

}  // namespace

std::string SessionConfigToJson(const SessionConfig& cfg) {
  return ConfigJson(cfg).dump();
}

SessionConfig SessionConfigFromJson(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded() || !doc.is_object()) {
    throw Error(ErrorCode::kSchemaViolation, "session config: malformed JSON");
  }
  return ConfigFromJson(doc);
}

Digest256 EnrollmentProof(const std::string& session, const std::string& player,
                          const mpz_class& challenge, std::size_t width) {
  std::string prefix = "ppbench-enroll";
  Bytes data(prefix.begin(), prefix.end());
  data.insert(data.end(), session.begin(), session.end());
  data.push_back(0);
  data.insert(data.end(), player.begin(), player.end());
  data.push_back(0);
  Bytes c = BigToBytes(challenge, width);
  data.insert(data.end(), c.begin(), c.end());
  return Sha256(data);
}

struct Service::Session {
  std::mutex mu;
  SessionConfig cfg;
  std::unique_ptr<Provider> provider;
  std::unique_ptr<SessionLog> log;
  std::set<std::string> enrolled;
  std::map<std::string, std::vector<WireMessage>> outbound;
  std::map<std::string, std::vector<std::string>> encoded;
  bool replaying = false;

  void Record(const json& entry) {
    if (log) log->Append(entry.dump());
  }

  void Deliver(std::vector<WireMessage> out) {
    for (auto& m : out) {
      encoded[m.recipient].push_back(codec::EncodeMessage(m));
      outbound[m.recipient].push_back(std::move(m));
    }
  }

  mpz_class ChallengePlain(const std::string& player, mpz_class* ciphertext) const {
    Drbg rng = Drbg::FromLabel(cfg.provider_seed,
                               "enroll:" + cfg.session_id + ":" + player);
    mpz_class c = rng.UniformBelow(cfg.pk.n);
    if (ciphertext) *ciphertext = paillier::Encrypt(cfg.pk, c, rng).value;
    return c;
  }
};

Service::Service(ServiceOptions options) : options_(std::move(options)) {
  if (!options_.data_dir) return;
  std::filesystem::create_directories(*options_.data_dir);
  std::vector<std::filesystem::path> logs;
  for (const auto& entry : std::filesystem::directory_iterator(*options_.data_dir)) {
    if (entry.path().extension() == ".log") logs.push_back(entry.path());
  }
  std::sort(logs.begin(), logs.end());
  for (const auto& p : logs) Restore(p);
}

Service::~Service() = default;

void Service::Restore(const std::filesystem::path& path) {
  const std::vector<std::string> records = SessionLog::ReadAll(path);
  if (records.empty()) return;
  auto session = std::make_unique<Session>();
  session->replaying = true;
  for (std::size_t i = 0; i < records.size(); ++i) {
    json entry = json::parse(records[i], nullptr, false);
    if (entry.is_discarded() || !entry.is_object() || !entry.contains("type")) {
      throw Error(ErrorCode::kCorruptLog, "record " + std::to_string(i));
    }
    const std::string type = entry["type"].get<std::string>();
    if (i == 0) {
      if (type != "create") throw Error(ErrorCode::kCorruptLog, "missing create record");
      session->cfg = ConfigFromJson(entry.at("config"));
      session->provider = std::make_unique<Provider>(session->cfg);
    } else if (type == "join") {
      session->enrolled.insert(entry.at("player").get<std::string>());
    } else if (type == "push") {
      WireMessage msg = codec::DecodeMessage(entry.at("message").get<std::string>());
      session->Deliver(session->provider->Advance(msg));
    } else {
      throw Error(ErrorCode::kCorruptLog, "unknown record type " + type);
    }
  }
  Session* raw = session.get();
  const std::string id = raw->cfg.session_id;
  raw->provider->SetPhaseObserver([this, raw, id](Phase p) {
    if (!raw->replaying && observer_) observer_(id, p);
  });
  raw->replaying = false;
  raw->log = std::make_unique<SessionLog>(path);
  sessions_[id] = std::move(session);
}

Service::Session& Service::Find(const std::string& id) {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = sessions_.find(id);
  if (it == sessions_.end()) throw Error(ErrorCode::kUnknownSession, id);
  return *it->second;
}

std::string Service::CreateSession(SessionConfig cfg) {
  std::lock_guard<std::mutex> lock(mu_);
  if (cfg.session_id.empty()) {
    Drbg rng = Drbg::FromOs();
    Bytes id(8);
    rng.Fill(id);
    cfg.session_id = "s-" + ToHex(id);
  }
  if (!ValidSessionId(cfg.session_id)) {
    throw Error(ErrorCode::kInvalidArgument, "session id must match [A-Za-z0-9_-]{1,64}");
  }
  if (sessions_.count(cfg.session_id)) {
    throw Error(ErrorCode::kInvalidArgument, "session " + cfg.session_id + " exists");
  }
  if (cfg.fault.equivocate && !options_.allow_fault_injection) {
    throw Error(ErrorCode::kInvalidArgument, "fault injection is disabled");
  }
  auto session = std::make_unique<Session>();
  session->cfg = cfg;
  session->provider = std::make_unique<Provider>(cfg);  // validates
  if (options_.data_dir) {
    const auto path = *options_.data_dir / (cfg.session_id + ".log");
    std::error_code ec;
    std::filesystem::remove(path, ec);
    session->log = std::make_unique<SessionLog>(path);
  }
  session->Record({{"type", "create"}, {"config", ConfigJson(cfg)}});
  Session* raw = session.get();
  const std::string id = cfg.session_id;
  raw->provider->SetPhaseObserver([this, raw, id](Phase p) {
    if (!raw->replaying && observer_) observer_(id, p);
  });
  sessions_[id] = std::move(session);
  return id;
}

mpz_class Service::Challenge(const std::string& session, const std::string& player) {
  Session& s = Find(session);
  std::lock_guard<std::mutex> lock(s.mu);
  if (s.cfg.IndexOf(player) == 0) throw Error(ErrorCode::kNotEnrolled, player);
  mpz_class ciphertext;
  s.ChallengePlain(player, &ciphertext);
  return ciphertext;
}

JoinInfo Service::Join(const std::string& session, const std::string& player,
                       const Digest256& proof) {
  Session& s = Find(session);
  std::lock_guard<std::mutex> lock(s.mu);
  const std::size_t index = s.cfg.IndexOf(player);
  if (index == 0) throw Error(ErrorCode::kNotEnrolled, player + " is not on the roster");
  const Digest256 expected = EnrollmentProof(
      session, player, s.ChallengePlain(player, nullptr), s.cfg.pk.PlaintextBytes());
  if (!ConstantTimeEqual(expected, proof)) {
    throw Error(ErrorCode::kNotEnrolled, "enrollment proof rejected for " + player);
  }
  if (!s.enrolled.count(player)) {
    s.Record({{"type", "join"}, {"player", player}});
    s.enrolled.insert(player);
  }
  JoinInfo info;
  info.session = session;
  info.player = player;
  info.index = index;
  info.n = s.cfg.n();
  info.modulus = s.cfg.pk.n;
  info.domain = s.cfg.domain;
  info.min_peers = s.cfg.min_peers;
  info.result_places = s.cfg.result_places;
  return info;
}

void Service::Push(const WireMessage& msg) {
  Session& s = Find(msg.session);
  std::lock_guard<std::mutex> lock(s.mu);
  if (msg.sender_role != Role::kPlayer || !s.enrolled.count(msg.sender)) {
    throw Error(ErrorCode::kNotEnrolled, msg.sender);
  }
  s.provider->Check(msg);
  s.Record({{"type", "push"}, {"message", codec::EncodeMessage(msg)}});
  s.Deliver(s.provider->Advance(msg));
}

PollResult Service::Poll(const std::string& session, const std::string& recipient,
                         std::size_t after) {
  Session& s = Find(session);
  std::lock_guard<std::mutex> lock(s.mu);
  if (!s.enrolled.count(recipient)) throw Error(ErrorCode::kNotEnrolled, recipient);
  PollResult r;
  r.cursor = after;
  auto it = s.outbound.find(recipient);
  if (it == s.outbound.end()) return r;
  for (std::size_t k = after; k < it->second.size(); ++k) {
    r.messages.push_back(it->second[k]);
  }
  r.cursor = std::max(after, it->second.size());
  return r;
}

SessionStatus Service::Status(const std::string& session) {
  Session& s = Find(session);
  std::lock_guard<std::mutex> lock(s.mu);
  SessionStatus st;
  st.session = session;
  st.phase = s.provider->phase();
  st.n = s.cfg.n();
  st.enrolled.assign(s.enrolled.begin(), s.enrolled.end());
  st.missing = s.provider->MissingParticipants();
  return st;
}

std::vector<std::string> Service::Sessions() {
  std::lock_guard<std::mutex> lock(mu_);
  std::vector<std::string> ids;
  for (const auto& [id, s] : sessions_) ids.push_back(id);
  return ids;
}

std::optional<BenchmarkResult> Service::Result(const std::string& session) {
  Session& s = Find(session);
  std::lock_guard<std::mutex> lock(s.mu);
  return s.provider->result();
}

Digest256 Service::OutboundDigest(const std::string& session) {
  Session& s = Find(session);
  std::lock_guard<std::mutex> lock(s.mu);
  std::vector<std::string> parts;
  for (const auto& [recipient, msgs] : s.encoded) {
    parts.push_back(recipient);
    parts.insert(parts.end(), msgs.begin(), msgs.end());
  }
  return HashStrings(parts);
}

void Service::SetPhaseObserver(
    std::function<void(const std::string& session, Phase)> observer) {
  std::lock_guard<std::mutex> lock(mu_);
  observer_ = std::move(observer);
}

}  // namespace ppbench::transport
