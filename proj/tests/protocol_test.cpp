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

#include <doctest.h>

#include <algorithm>
#include <deque>

#include "ppbench/codec.hpp"
#include "ppbench/harness.hpp"
#include "ppbench/player.hpp"
#include "ppbench/provider.hpp"
#include "support.hpp"

using namespace ppbench;
using testing::CodeOf;
using testing::Q;

namespace {

harness::ScenarioConfig Scenario(std::vector<KpiValue> inputs,
                                 std::uint64_t seed = 1) {
  harness::ScenarioConfig cfg;
  cfg.n = inputs.size();
  cfg.inputs = std::move(inputs);
  cfg.seed = seed;
  cfg.keys = testing::CachedKeys(768);
  return cfg;
}

// Hand-driven session with opaque roster ids, for message-level checks.
struct Session {
  explicit Session(std::vector<KpiValue> inputs) {
    const auto& keys = testing::CachedKeys(768);
    SessionConfig sc;
    sc.session_id = "manual";
    for (std::size_t i = 0; i < inputs.size(); ++i) {
      sc.roster.push_back("member-" + std::string(1, char('q' + i)) + "x9");
    }
    sc.pk = keys.pub;
    sc.provider_seed = 11;
    provider.emplace(sc);
    integrity::MacKey mac{};
    mac[3] = 42;
    for (std::size_t i = 1; i <= inputs.size(); ++i) {
      PlayerConfig pc;
      pc.session_id = sc.session_id;
      pc.player_id = sc.roster[i - 1];
      pc.index = i;
      pc.n = inputs.size();
      pc.sk = keys.priv;
      pc.mac_key = mac;
      pc.input = inputs[i - 1];
      players.emplace_back(pc, Drbg::FromLabel(i, "manual-player"));
    }
    delivered.resize(players.size());
  }

  std::size_t IndexOf(const std::string& id) const {
    return provider->config().IndexOf(id);
  }

  void Deliver(const std::vector<WireMessage>& out) {
    for (const auto& m : out) outbox.push_back(m);
  }

  void Run() {
    while (!outbox.empty() || !to_provider.empty()) {
      while (!to_provider.empty()) {
        WireMessage m = to_provider.front();
        to_provider.pop_front();
        Deliver(provider->Advance(m));
      }
      while (!outbox.empty()) {
        WireMessage m = outbox.front();
        outbox.pop_front();
        const std::size_t i = IndexOf(m.recipient);
        delivered[i - 1].push_back(m);
        for (auto& r : players[i - 1].Advance(m)) to_provider.push_back(r);
      }
    }
  }

  void StartAll() {
    for (auto& p : players) {
      for (auto& m : p.Start()) to_provider.push_back(m);
    }
  }

  std::optional<Provider> provider;
  std::vector<Player> players;
  std::deque<WireMessage> to_provider;
  std::deque<WireMessage> outbox;
  std::vector<std::vector<WireMessage>> delivered;
};

}  // namespace

TEST_CASE("four-player example matches hand-computed statistics") {
  auto out = harness::SimulateSession(
      Scenario(testing::Ints({5, 9, 2, 7}, 2)),
      [](const Provider& provider, const std::vector<Player>& players) {
        // Player i holds the ascending rank of input phi[i], not of its own.
        const std::vector<std::size_t> ascending = {2, 4, 1, 3};
        for (std::size_t i = 0; i < players.size(); ++i) {
          CHECK(*players[i].rank() == ascending[provider.phi()[i]]);
        }
      });
  const BenchmarkResult& r = out.player_results[0];
  CHECK(r.Exact(Measure::kMean) == Q(23, 4));
  CHECK(r.Exact(Measure::kVariance) == Q(107, 16));
  CHECK(r.Exact(Measure::kMedian) == 5);
  CHECK(r.Exact(Measure::kBestInClass) == 9);
  CHECK(r.Exact(Measure::kMax) == 9);
  CHECK(r.Exact(Measure::kBottomQuartile) == 2);
  CHECK(r.Exact(Measure::kTopQuartile) == 9);
  CHECK(r.Rounded(Measure::kVariance).ToString() == "6.6875");
  CHECK(r.AllValid());
  CHECK(r.validation.size() == 7);
  for (const auto& pr : out.player_results) {
    CHECK(pr.ToJson() == r.ToJson());
  }
  CHECK(out.provider_result.exact == r.exact);
}

TEST_CASE("eight players, quartiles and best-in-class average") {
  auto out = harness::SimulateSession(
      Scenario(testing::Ints({3, 8, 1, 6, 2, 7, 5, 4}, 2), 2));
  const BenchmarkResult& r = out.player_results[4];
  CHECK(r.Exact(Measure::kMean) == Q(9, 2));
  CHECK(r.Exact(Measure::kMedian) == 4);
  CHECK(r.Exact(Measure::kBottomQuartile) == 2);
  CHECK(r.Exact(Measure::kTopQuartile) == 7);
  CHECK(r.Exact(Measure::kBestInClass) == Q(15, 2));
  CHECK(r.Exact(Measure::kMax) == 8);
  CHECK(r.Exact(Measure::kVariance) == Q(21, 4));
  CHECK(r.AllValid());
}

TEST_CASE("single player when the minimum is lowered") {
  auto cfg = Scenario(testing::Ints({-3}, 2), 3);
  cfg.min_peers = 1;
  auto out = harness::SimulateSession(cfg);
  const BenchmarkResult& r = out.player_results[0];
  for (Measure m : {Measure::kMean, Measure::kMedian, Measure::kMax,
                    Measure::kBestInClass, Measure::kBottomQuartile,
                    Measure::kTopQuartile}) {
    CHECK(r.Exact(m) == -3);
  }
  CHECK(r.Exact(Measure::kVariance) == 0);
  CHECK(out.ranks == std::vector<std::size_t>{1});
  CHECK(r.AllValid());
}

TEST_CASE("too few players") {
  auto cfg = Scenario(testing::Ints({1, 2, 3}), 4);
  CHECK(CodeOf([&] { harness::SimulateSession(cfg); }) ==
        ErrorCode::kPeerGroupTooSmall);
}

TEST_CASE("ranks form a set with ties, and selections cancel their blinds") {
  auto cfg = Scenario(testing::Ints({4, 4, 4, 1, 9, 9, 2}), 5);
  cfg.min_peers = 4;
  harness::SimulationOutcome out = harness::SimulateSession(
      cfg, [](const Provider& provider, const std::vector<Player>& players) {
        const std::size_t n = players.size();
        const auto& sk = testing::CachedKeys(768).priv;
        for (Measure m : kRankMeasures) {
          const Selection sel = MeasurePosition(m, n);
          std::size_t chosen = 0;
          mpz_class blinds = 0;
          for (std::size_t i = 0; i < n; ++i) {
            const Player& p = players[i];
            CHECK(p.choice(m) == sel.Matches(*p.rank()));
            if (p.choice(m)) ++chosen;
            // The returned ciphertext carries x_sel + r_i or r_i alone.
            const mpz_class got =
                paillier::Decrypt(sk, provider.returned(m)[i]).residue;
            const mpz_class blind = provider.selection_blinds(m)[i];
            if (p.choice(m)) {
              CHECK(got != blind);
            } else {
              CHECK(got == blind);
            }
            blinds += blind;
          }
          if (sel.op == Selector::kEqual) {
            CHECK(chosen == 1);
          } else {
            CHECK(chosen == BestInClassMembers(n));
          }
        }
      });
  std::vector<std::size_t> ranks = out.ranks;
  std::sort(ranks.begin(), ranks.end());
  for (std::size_t i = 0; i < ranks.size(); ++i) CHECK(ranks[i] == i + 1);
  CHECK(out.player_results[0].Exact(Measure::kMedian) == 4);
  CHECK(out.player_results[0].Exact(Measure::kMax) == 9);
  CHECK(out.player_results[0].Exact(Measure::kBestInClass) == 9);
}

TEST_CASE("matches the plaintext oracle") {
  for (std::uint64_t seed = 10; seed < 16; ++seed) {
    harness::ScenarioConfig cfg;
    cfg.n = 4 + seed % 5;
    cfg.seed = seed;
    cfg.ties = seed % 2 == 0;
    cfg.keys = testing::CachedKeys(768);
    auto out = harness::SimulateSession(cfg);
    auto oracle = harness::OracleStats(out.inputs);
    for (const auto& r : out.player_results) CHECK(r.exact == oracle.exact);
  }
}

TEST_CASE("counters do not depend on the inputs") {
  auto a = harness::SimulateSession(Scenario(testing::Ints({1, 2, 3, 4, 5}), 6));
  auto b = harness::SimulateSession(
      Scenario(testing::Ints({-900, 77, 77, 12345, 0}), 7));
  CHECK(a.provider_counters == b.provider_counters);
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(a.player_counters[i] == b.player_counters[i]);
  }
  CHECK(a.provider_counters.Total() == ProviderClosedForm(5) );
  OpCounters player = a.player_counters[0].Total();
  CHECK(player == PlayerClosedForm(5));
}

TEST_CASE("serial and threaded runs produce the same transcript") {
  auto cfg = Scenario(testing::Ints({5, 9, 2, 7, 1}), 8);
  auto serial = harness::SimulateSession(cfg);
  cfg.concurrent = true;
  auto threaded = harness::SimulateSession(cfg);
  CHECK(serial.transcript == threaded.transcript);
}

TEST_CASE("no delivered message names another player") {
  Session s(testing::Ints({5, 9, 2, 7}, 2));
  s.StartAll();
  s.Run();
  REQUIRE(s.provider->done());
  const auto& roster = s.provider->config().roster;
  for (std::size_t i = 0; i < roster.size(); ++i) {
    CHECK(s.players[i].done());
    CHECK_FALSE(s.delivered[i].empty());
    for (const WireMessage& m : s.delivered[i]) {
      CHECK(m.recipient == roster[i]);
      CHECK(m.sender == kProviderId);
      const std::string wire = codec::EncodeMessage(m);
      for (std::size_t j = 0; j < roster.size(); ++j) {
        if (j != i) CHECK(wire.find(roster[j]) == std::string::npos);
      }
    }
  }
}

TEST_CASE("out-of-phase and repeated messages are rejected") {
  Session s(testing::Ints({5, 9, 2, 7}, 2));
  std::vector<WireMessage> firsts;
  for (auto& p : s.players) {
    auto out = p.Start();
    firsts.push_back(out.at(0));
  }
  // Player 1 submits; its variance term is not due yet.
  s.provider->Advance(firsts[0]);
  WireMessage early = firsts[0];
  early.step = "13";
  early.kind = MessageKind::kVarianceTerm;
  early.phase = Phase::kRerandomizeAndVariance;
  CHECK(CodeOf([&] { s.provider->Check(early); }) == ErrorCode::kPhaseViolation);
  CHECK(CodeOf([&] { s.provider->Advance(firsts[0]); }) ==
        ErrorCode::kDuplicateMessage);

  WireMessage stranger = firsts[1];
  stranger.sender = "nobody";
  CHECK(CodeOf([&] { s.provider->Check(stranger); }) == ErrorCode::kNotEnrolled);
  WireMessage other_session = firsts[1];
  other_session.session = "elsewhere";
  CHECK(CodeOf([&] { s.provider->Check(other_session); }) ==
        ErrorCode::kUnknownSession);
  WireMessage wrong_kind = firsts[1];
  wrong_kind.kind = MessageKind::kMacTag;
  CHECK(CodeOf([&] { s.provider->Check(wrong_kind); }) ==
        ErrorCode::kSchemaViolation);

  CHECK(s.provider->phase() == Phase::kSubmit);
  CHECK(s.provider->MissingParticipants().size() == 3);
  for (std::size_t i = 1; i < firsts.size(); ++i) {
    s.Deliver(s.provider->Advance(firsts[i]));
  }
  CHECK(s.provider->phase() == Phase::kDistributeAndOt);
  CHECK(CodeOf([&] { s.provider->Advance(firsts[2]); }) ==
        ErrorCode::kDuplicateMessage);

  // A player sees step 9 before it has the rank vector.
  Session t(testing::Ints({5, 9, 2, 7}, 2));
  t.players[0].Start();
  WireMessage result;
  result.session = "manual";
  result.step = "9";
  result.sender_role = Role::kProvider;
  result.sender = std::string(kProviderId);
  result.recipient = t.provider->config().roster[0];
  result.kind = MessageKind::kResult;
  result.phase = Phase::kRerandomizeAndVariance;
  result.numbers = {mpz_class(1)};
  CHECK(CodeOf([&] { t.players[0].Check(result); }) == ErrorCode::kPhaseViolation);
  WireMessage misaddressed = result;
  misaddressed.recipient = t.provider->config().roster[1];
  CHECK(CodeOf([&] { t.players[0].Check(misaddressed); }) ==
        ErrorCode::kSchemaViolation);
}

TEST_CASE("payload validation") {
  const auto& pk = testing::CachedKeys(768).pub;
  WireMessage m;
  m.session = "s";
  m.step = "3";
  m.sender_role = Role::kProvider;
  m.sender = std::string(kProviderId);
  m.recipient = "p1";
  m.kind = MessageKind::kRankVector;
  m.phase = Phase::kDistributeAndOt;
  m.numbers = {mpz_class(2), mpz_class(3), mpz_class(4)};
  CHECK_NOTHROW(ValidatePayload(m, pk, 4));
  CHECK(CodeOf([&] { ValidatePayload(m, pk, 5); }) == ErrorCode::kSchemaViolation);
  m.numbers[1] = pk.n_squared;
  CHECK_THROWS_AS(ValidatePayload(m, pk, 4), Error);

  WireMessage ot = m;
  ot.step = "4";
  ot.kind = MessageKind::kOtAnnounce;
  ot.numbers.clear();
  ot.blobs = {Bytes(32, 0xff)};
  CHECK(CodeOf([&] { ValidatePayload(ot, pk, 4); }) ==
        ErrorCode::kInvalidGroupElement);
}

TEST_CASE("finalize divides by the public divisors") {
  std::array<mpz_class, 7> agg;
  agg[static_cast<std::size_t>(Measure::kMean)] = 2300;
  agg[static_cast<std::size_t>(Measure::kVariance)] = 428 * 10000;
  agg[static_cast<std::size_t>(Measure::kMedian)] = 500;
  agg[static_cast<std::size_t>(Measure::kBestInClass)] = 900;
  agg[static_cast<std::size_t>(Measure::kMax)] = 900;
  agg[static_cast<std::size_t>(Measure::kBottomQuartile)] = 200;
  agg[static_cast<std::size_t>(Measure::kTopQuartile)] = 900;
  BenchmarkResult r = FinalizeStatistics(agg, 4, 2, 4);
  auto oracle = harness::OracleStats(testing::Ints({5, 9, 2, 7}, 2));
  CHECK(r.exact == oracle.exact);
  CHECK(r.ToJson().find("\"n\":4") != std::string::npos);
}
