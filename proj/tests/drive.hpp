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

#ifndef PPBENCH_TESTS_DRIVE_HPP_
#define PPBENCH_TESTS_DRIVE_HPP_

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ppbench/client.hpp"
#include "ppbench/service.hpp"

namespace ppbench::testing {

struct ServiceRun {
  std::string provider_json;
  std::vector<std::string> player_json;
  Digest256 outbound{};
  int restarts = 0;
};

struct SimulatedCrash {};

// Runs one session through a Service with in-process clients. With
// `crash_at`, the service dies on entry to that phase and is rebuilt from
// its logs in `data_dir`.
inline ServiceRun DriveService(const SessionConfig& cfg,
                               const std::vector<KpiValue>& inputs,
                               const paillier::PrivateKey& sk,
                               const integrity::MacKey& mac,
                               std::optional<std::filesystem::path> data_dir,
                               std::optional<Phase> crash_at = std::nullopt) {
  using namespace transport;
  if (data_dir) std::filesystem::create_directories(*data_dir);
  ServiceOptions options;
  options.data_dir = data_dir;
  options.allow_fault_injection = true;
  bool armed = crash_at.has_value();
  std::unique_ptr<Service> service;
  std::unique_ptr<LocalApi> api;
  std::vector<std::unique_ptr<PlayerClient>> clients;
  ServiceRun run;

  auto boot = [&] {
    api.reset();
    service.reset();
    service = std::make_unique<Service>(options);
    service->SetPhaseObserver([&](const std::string&, Phase p) {
      if (armed && p == *crash_at) {
        armed = false;
        throw SimulatedCrash{};
      }
    });
    api = std::make_unique<LocalApi>(*service);
    for (auto& c : clients) c->Rebind(api.get());
  };
  boot();
  const std::string session = api->CreateSession(cfg);
  for (std::size_t i = 0; i < cfg.n(); ++i) {
    clients.push_back(std::make_unique<PlayerClient>(
        api.get(), session, cfg.roster[i], PlayerCredentials{sk, mac}, inputs[i],
        Drbg::FromLabel(i + 1, "drive-player")));
    clients.back()->Enroll();
  }
  for (int round = 0; round < 10000; ++round) {
    bool all_done = true;
    for (auto& c : clients) {
      try {
        c->Step();
      } catch (const SimulatedCrash&) {
        ++run.restarts;
        boot();
      }
      all_done = all_done && c->done();
    }
    if (all_done) break;
  }
  auto result = service->Result(session);
  if (result) run.provider_json = result->ToJson();
  for (auto& c : clients) {
    const auto& r = c->player().result();
    run.player_json.push_back(r ? r->ToJson() : "");
  }
  run.outbound = service->OutboundDigest(session);
  return run;
}

}  // namespace ppbench::testing

#endif  // PPBENCH_TESTS_DRIVE_HPP_
