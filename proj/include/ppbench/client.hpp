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

#ifndef PPBENCH_CLIENT_HPP_
#define PPBENCH_CLIENT_HPP_

#include <chrono>
#include <cstddef>
#include <deque>
#include <memory>
#include <optional>
#include <string>

#include "ppbench/integrity.hpp"
#include "ppbench/numeric.hpp"
#include "ppbench/paillier.hpp"
#include "ppbench/player.hpp"
#include "ppbench/rng.hpp"
#include "ppbench/service.hpp"

namespace ppbench::transport {

// The five service operations, reachable in-process or over HTTP.
class ServiceApi {
 public:
  virtual ~ServiceApi() = default;
  virtual std::string CreateSession(const SessionConfig& cfg) = 0;
  virtual mpz_class Challenge(const std::string& session,
                              const std::string& player) = 0;
  virtual JoinInfo Join(const std::string& session, const std::string& player,
                        const Digest256& proof) = 0;
  virtual void Push(const WireMessage& msg) = 0;
  virtual PollResult Poll(const std::string& session,
                          const std::string& recipient, std::size_t after) = 0;
  virtual SessionStatus Status(const std::string& session) = 0;
};

class LocalApi : public ServiceApi {
 public:
  explicit LocalApi(Service& service) : service_(&service) {}

  std::string CreateSession(const SessionConfig& cfg) override {
    return service_->CreateSession(cfg);
  }
  mpz_class Challenge(const std::string& session,
                      const std::string& player) override {
    return service_->Challenge(session, player);
  }
  JoinInfo Join(const std::string& session, const std::string& player,
                const Digest256& proof) override {
    return service_->Join(session, player, proof);
  }
  void Push(const WireMessage& msg) override { service_->Push(msg); }
  PollResult Poll(const std::string& session, const std::string& recipient,
                  std::size_t after) override {
    return service_->Poll(session, recipient, after);
  }
  SessionStatus Status(const std::string& session) override {
    return service_->Status(session);
  }

 private:
  Service* service_;
};

struct PlayerCredentials {
  paillier::PrivateKey sk;
  integrity::MacKey mac_key{};
};

// Drives one Player against a service: enrollment, pushes, cursor polling.
// Pushes that fail for reasons other than a protocol error stay queued and
// are retried; a retry answered with kDuplicateMessage counts as delivered.
class PlayerClient {
 public:
  PlayerClient(ServiceApi* api, std::string session, std::string player,
               PlayerCredentials credentials, KpiValue input, Drbg rng);

  // Challenge-response join, then queues step 1. kKeyMismatch if the session
  // uses a different modulus.
  void Enroll();
  // Flushes queued pushes, polls once and feeds new messages to the player.
  // Returns true if anything was sent or received.
  bool Step();
  bool done() const { return player_ && player_->done(); }
  void Rebind(ServiceApi* api) { api_ = api; }

  const Player& player() const { return *player_; }
  const JoinInfo& join_info() const { return info_; }

 private:
  ServiceApi* api_;
  std::string session_;
  std::string player_id_;
  PlayerCredentials credentials_;
  KpiValue input_;
  Drbg rng_;
  JoinInfo info_;
  std::optional<Player> player_;
  std::deque<WireMessage> pending_;
  std::size_t cursor_ = 0;
};

// Enrolls and runs to completion, polling every `interval`. Throws kIoError
// when `timeout` passes without the session finishing.
BenchmarkResult RunPlayer(PlayerClient& client,
                          std::chrono::milliseconds interval,
                          std::chrono::milliseconds timeout);

}  // namespace ppbench::transport

#endif  // PPBENCH_CLIENT_HPP_
