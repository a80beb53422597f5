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

#ifndef PPBENCH_SERVICE_HPP_
#define PPBENCH_SERVICE_HPP_

#include <gmpxx.h>

#include <cstddef>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "ppbench/digest.hpp"
#include "ppbench/messages.hpp"
#include "ppbench/protocol.hpp"

namespace ppbench::transport {

std::string SessionConfigToJson(const SessionConfig& cfg);
SessionConfig SessionConfigFromJson(const std::string& text);

// SHA-256("ppbench-enroll" || session || 0x00 || player || 0x00 ||
// challenge as fixed-width big-endian bytes).
Digest256 EnrollmentProof(const std::string& session, const std::string& player,
                          const mpz_class& challenge, std::size_t width);

struct JoinInfo {
  std::string session;
  std::string player;
  std::size_t index = 0;
  std::size_t n = 0;
  mpz_class modulus;
  PlaintextDomain domain;
  std::size_t min_peers = kDefaultMinPeers;
  unsigned result_places = kDefaultResultPlaces;
};

struct SessionStatus {
  std::string session;
  Phase phase = Phase::kSubmit;
  std::size_t n = 0;
  std::vector<std::string> enrolled;
  std::vector<std::string> missing;
};

struct PollResult {
  std::vector<WireMessage> messages;
  std::size_t cursor = 0;  // pass back as `after` on the next poll
};

struct ServiceOptions {
  // Session logs live here as <session>.log; in-memory only when unset.
  std::optional<std::filesystem::path> data_dir;
  bool allow_fault_injection = false;
};

// Star-topology relay in front of one provider per session. Every accepted
// create, join and push is logged before it takes effect, and constructing a
// service over an existing data directory replays those logs.
class Service {
 public:
  explicit Service(ServiceOptions options = {});
  ~Service();

  // Returns the session id (generated when cfg.session_id is empty).
  std::string CreateSession(SessionConfig cfg);
  // E(c) for a challenge c derived from the session seed and player id.
  mpz_class Challenge(const std::string& session, const std::string& player);
  // kNotEnrolled if the player is not on the roster or the proof is wrong.
  JoinInfo Join(const std::string& session, const std::string& player,
                const Digest256& proof);
  void Push(const WireMessage& msg);
  // Messages for `recipient` with sequence number > after (1-based).
  PollResult Poll(const std::string& session, const std::string& recipient,
                  std::size_t after);
  SessionStatus Status(const std::string& session);
  std::vector<std::string> Sessions();

  // The provider's result once the session is done.
  std::optional<BenchmarkResult> Result(const std::string& session);
  // SHA-256 over every queued outbound message, grouped by recipient.
  Digest256 OutboundDigest(const std::string& session);

  // Invoked on every phase entry of live (not replayed) sessions. An
  // exception thrown here aborts the push that triggered it.
  void SetPhaseObserver(
      std::function<void(const std::string& session, Phase)> observer);

 private:
  struct Session;
  Session& Find(const std::string& id);
  void Restore(const std::filesystem::path& log);

  ServiceOptions options_;
  std::mutex mu_;
  std::map<std::string, std::unique_ptr<Session>> sessions_;
  std::function<void(const std::string&, Phase)> observer_;
};

}  // namespace ppbench::transport

#endif  // PPBENCH_SERVICE_HPP_
