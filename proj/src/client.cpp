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

#include "ppbench/client.hpp"

#include <thread>

#include "ppbench/errors.hpp"

namespace ppbench::transport {

PlayerClient::PlayerClient(ServiceApi* api, std::string session,
                           std::string player, PlayerCredentials credentials,
                           KpiValue input, Drbg rng)
    : api_(api),
      session_(std::move(session)),
      player_id_(std::move(player)),
      credentials_(std::move(credentials)),
      input_(std::move(input)),
      rng_(std::move(rng)) {}

void PlayerClient::Enroll() {
  const paillier::PublicKey& pk = credentials_.sk.pub;
  const mpz_class ct = api_->Challenge(session_, player_id_);
  const mpz_class c =
      paillier::Decrypt(credentials_.sk, paillier::CiphertextFromValue(pk, ct))
          .residue;
  info_ = api_->Join(session_, player_id_,
                     EnrollmentProof(session_, player_id_, c, pk.PlaintextBytes()));
  if (info_.modulus != pk.n) {
    throw Error(ErrorCode::kKeyMismatch, "session key differs from the key file");
  }
  PlayerConfig cfg;
  cfg.session_id = session_;
  cfg.player_id = player_id_;
  cfg.index = info_.index;
  cfg.n = info_.n;
  cfg.sk = credentials_.sk;
  cfg.mac_key = credentials_.mac_key;
  cfg.domain = info_.domain;
  cfg.min_peers = info_.min_peers;
  cfg.result_places = info_.result_places;
  cfg.input = input_;
  player_.emplace(std::move(cfg), rng_);
  for (auto& m : player_->Start()) pending_.push_back(std::move(m));
}

bool PlayerClient::Step() {
  if (!player_) throw Error(ErrorCode::kNotEnrolled, "call Enroll first");
  bool progress = false;
  while (!pending_.empty()) {
    try {
      api_->Push(pending_.front());
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kDuplicateMessage) throw;
    }
    pending_.pop_front();
    progress = true;
  }
  if (player_->done()) return progress;
  PollResult r = api_->Poll(session_, player_id_, cursor_);
  for (const WireMessage& msg : r.messages) {
    for (auto& out : player_->Advance(msg)) pending_.push_back(std::move(out));
    progress = true;
  }
  cursor_ = r.cursor;
  while (!pending_.empty()) {
    try {
      api_->Push(pending_.front());
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kDuplicateMessage) throw;
    }
    pending_.pop_front();
  }
  return progress;
}

BenchmarkResult RunPlayer(PlayerClient& client,
                          std::chrono::milliseconds interval,
                          std::chrono::milliseconds timeout) {
  client.Enroll();
  const auto deadline = std::chrono::steady_clock::now() + timeout;
  while (!client.done()) {
    if (!client.Step()) {
      if (std::chrono::steady_clock::now() > deadline) {
        throw Error(ErrorCode::kIoError, "session did not finish in time");
      }
      std::this_thread::sleep_for(interval);
    }
  }
  return *client.player().result();
}

}  // namespace ppbench::transport
