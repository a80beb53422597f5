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

#include "ppbench/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <condition_variable>
#include <deque>
#include <exception>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <thread>

#include "ppbench/codec.hpp"
#include "ppbench/errors.hpp"
#include "ppbench/measure.hpp"

namespace ppbench::harness {

BenchmarkResult OracleStats(const std::vector<KpiValue>& inputs,
                            unsigned result_places, std::size_t min_peers) {
  const std::size_t n = inputs.size();
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "no inputs");
  std::vector<mpq_class> xs;
  for (const KpiValue& v : inputs) xs.push_back(v.ToRational());
  std::sort(xs.begin(), xs.end());

  mpq_class sum = 0;
  for (const auto& x : xs) sum += x;
  const mpq_class count(static_cast<unsigned long>(n));
  mpq_class mean = sum / count;
  mpq_class squares = 0;
  for (const auto& x : xs) squares += (x - mean) * (x - mean);

  BenchmarkResult r;
  r.n = n;
  r.places = result_places;
  auto at = [&](Measure m) -> mpq_class& {
    return r.exact[static_cast<std::size_t>(m)];
  };
  at(Measure::kMean) = mean;
  at(Measure::kVariance) = squares / count;
  for (Measure m : kRankMeasures) {
    Selection sel = MeasurePosition(m, n, min_peers);
    if (sel.op == Selector::kEqual) {
      at(m) = xs[sel.position - 1];
    } else {
      mpq_class top = 0;
      for (std::size_t k = sel.position; k <= n; ++k) top += xs[k - 1];
      at(m) = top / mpq_class(static_cast<unsigned long>(n - sel.position + 1));
    }
  }
  for (auto& q : r.exact) q.canonicalize();
  return r;
}

PlaintextDomain DomainOf(const ScenarioConfig& cfg) {
  PlaintextDomain d;
  d.modulus_bits = cfg.key_bits;
  d.input_bits = cfg.input_bits;
  d.compare_blind_bits = cfg.compare_blind_bits;
  d.decimal_places = cfg.decimal_places;
  return d;
}

std::vector<KpiValue> ScenarioInputs(const ScenarioConfig& cfg) {
  if (!cfg.inputs.empty()) return cfg.inputs;
  Drbg rng = Drbg::FromLabel(cfg.seed, "inputs");
  const std::uint64_t range = 10000000;
  std::vector<std::uint64_t> pool;
  if (cfg.ties) {
    const std::size_t size = std::max<std::size_t>(1, cfg.n / 2);
    for (std::size_t i = 0; i < size; ++i) pool.push_back(rng.Below(range));
  }
  std::vector<KpiValue> out;
  for (std::size_t i = 0; i < cfg.n; ++i) {
    std::uint64_t v = cfg.ties ? pool[rng.Below(pool.size())] : rng.Below(range);
    out.emplace_back(mpz_class(static_cast<unsigned long>(v)), cfg.decimal_places);
  }
  return out;
}

namespace {

SessionConfig MakeSession(const ScenarioConfig& cfg,
                          const paillier::PublicKey& pk) {
  SessionConfig s;
  s.session_id = "sim-" + std::to_string(cfg.seed);
  for (std::size_t i = 1; i <= cfg.n; ++i) s.roster.push_back("p" + std::to_string(i));
  s.pk = pk;
  s.domain = DomainOf(cfg);
  s.min_peers = cfg.min_peers;
  s.result_places = cfg.result_places;
  s.provider_seed = cfg.seed;
  s.fault = cfg.fault;
  return s;
}

class Transcript {
 public:
  explicit Transcript(std::size_t players) : players_(players) {}
  void Provider(const std::vector<WireMessage>& out) {
    for (const auto& m : out) provider_ += codec::EncodeMessage(m) + "\n";
  }
  void Player(std::size_t index, const std::vector<WireMessage>& out) {
    for (const auto& m : out) players_[index - 1] += codec::EncodeMessage(m) + "\n";
  }
  Digest256 Finish() const {
    std::string all = provider_;
    for (const auto& s : players_) all += s;
    return Sha256(std::span(reinterpret_cast<const std::uint8_t*>(all.data()),
                            all.size()));
  }

 private:
  std::string provider_;
  std::vector<std::string> players_;
};

void RunSerial(Provider& provider, std::vector<Player>& players,
               Transcript& transcript) {
  const std::size_t n = players.size();
  std::deque<WireMessage> to_provider;
  std::vector<std::deque<WireMessage>> to_player(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto out = players[i].Start();
    transcript.Player(i + 1, out);
    to_provider.insert(to_provider.end(), out.begin(), out.end());
  }
  bool progress = true;
  while (progress) {
    progress = false;
    while (!to_provider.empty()) {
      WireMessage msg = std::move(to_provider.front());
      to_provider.pop_front();
      auto out = provider.Advance(msg);
      transcript.Provider(out);
      for (auto& m : out) {
        to_player[provider.config().IndexOf(m.recipient) - 1].push_back(std::move(m));
      }
      progress = true;
    }
    for (std::size_t i = 0; i < n; ++i) {
      while (!to_player[i].empty()) {
        WireMessage msg = std::move(to_player[i].front());
        to_player[i].pop_front();
        auto out = players[i].Advance(msg);
        transcript.Player(i + 1, out);
        to_provider.insert(to_provider.end(), out.begin(), out.end());
        progress = true;
      }
    }
  }
}

struct Mailbox {
  std::mutex mu;
  std::condition_variable cv;
  std::deque<WireMessage> queue;
};

void RunConcurrent(Provider& provider, std::vector<Player>& players,
                   Transcript& transcript) {
  const std::size_t n = players.size();
  std::vector<Mailbox> boxes(n);
  std::mutex provider_mu;
  std::mutex transcript_mu;
  std::mutex error_mu;
  std::exception_ptr error;
  bool aborted = false;

  auto abort_all = [&](std::exception_ptr e) {
    {
      std::lock_guard<std::mutex> lock(error_mu);
      if (!error) error = e;
      aborted = true;
    }
    for (auto& b : boxes) {
      std::lock_guard<std::mutex> lock(b.mu);
      b.cv.notify_all();
    }
  };
  auto is_aborted = [&] {
    std::lock_guard<std::mutex> lock(error_mu);
    return aborted;
  };
  auto deliver = [&](const std::vector<WireMessage>& msgs) {
    std::lock_guard<std::mutex> lock(provider_mu);
    for (const auto& msg : msgs) {
      auto out = provider.Advance(msg);
      {
        std::lock_guard<std::mutex> tl(transcript_mu);
        transcript.Provider(out);
      }
      for (auto& m : out) {
        Mailbox& b = boxes[provider.config().IndexOf(m.recipient) - 1];
        std::lock_guard<std::mutex> bl(b.mu);
        b.queue.push_back(std::move(m));
        b.cv.notify_one();
      }
    }
  };

  std::vector<std::thread> threads;
  for (std::size_t i = 0; i < n; ++i) {
    threads.emplace_back([&, i] {
      try {
        Player& player = players[i];
        auto out = player.Start();
        {
          std::lock_guard<std::mutex> tl(transcript_mu);
          transcript.Player(i + 1, out);
        }
        deliver(out);
        while (!player.done()) {
          WireMessage msg;
          {
            std::unique_lock<std::mutex> lock(boxes[i].mu);
            boxes[i].cv.wait(lock, [&] {
              return !boxes[i].queue.empty() || is_aborted();
            });
            if (boxes[i].queue.empty()) return;
            msg = std::move(boxes[i].queue.front());
            boxes[i].queue.pop_front();
          }
          auto replies = player.Advance(msg);
          {
            std::lock_guard<std::mutex> tl(transcript_mu);
            transcript.Player(i + 1, replies);
          }
          deliver(replies);
        }
      } catch (...) {
        abort_all(std::current_exception());
      }
    });
  }
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace

SimulationOutcome SimulateSession(const ScenarioConfig& cfg,
                                  const Inspector& inspect) {
  const PlaintextDomain domain = DomainOf(cfg);
  if (cfg.min_peers == 0 || cfg.n < cfg.min_peers) {
    throw Error(ErrorCode::kPeerGroupTooSmall,
                "peer group of " + std::to_string(cfg.n));
  }
  RequireBudget(domain, cfg.n);
  SimulationOutcome outcome;
  outcome.inputs = ScenarioInputs(cfg);
  if (outcome.inputs.size() != cfg.n) {
    throw Error(ErrorCode::kInvalidArgument, "expected n inputs");
  }
  const mpz_class bound = mpz_class(1) << cfg.key_bits;
  for (const KpiValue& v : outcome.inputs) EncodeKpi(v, domain, bound);

  paillier::KeyPair keys;
  if (cfg.keys) {
    keys = *cfg.keys;
  } else {
    Drbg key_rng = Drbg::FromLabel(cfg.seed, "keys");
    keys = paillier::KeyGen(cfg.key_bits, key_rng,
                            cfg.key_bits < paillier::kMinSecureBits
                                ? paillier::KeyGenMode::kTest
                                : paillier::KeyGenMode::kSecure);
  }
  if (keys.pub.bits != cfg.key_bits) {
    throw Error(ErrorCode::kInvalidArgument, "key size differs from scenario");
  }
  integrity::MacKey mac_key{};
  Drbg::FromLabel(cfg.seed, "mac").Fill(mac_key);

  const auto start = std::chrono::steady_clock::now();
  Provider provider(MakeSession(cfg, keys.pub));
  std::vector<Player> players;
  for (std::size_t i = 1; i <= cfg.n; ++i) {
    PlayerConfig pc;
    pc.session_id = provider.config().session_id;
    pc.player_id = provider.config().roster[i - 1];
    pc.index = i;
    pc.n = cfg.n;
    pc.sk = keys.priv;
    pc.mac_key = mac_key;
    pc.domain = domain;
    pc.min_peers = cfg.min_peers;
    pc.result_places = cfg.result_places;
    pc.input = outcome.inputs[i - 1];
    players.emplace_back(std::move(pc),
                         Drbg::FromLabel(cfg.seed, "player:" + std::to_string(i)));
  }

  Transcript transcript(cfg.n);
  if (cfg.concurrent) {
    RunConcurrent(provider, players, transcript);
  } else {
    RunSerial(provider, players, transcript);
  }
  outcome.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();

  if (!provider.done()) {
    throw Error(ErrorCode::kPhaseViolation, "session stalled in " +
                                                std::string(PhaseName(provider.phase())));
  }
  outcome.provider_result = *provider.result();
  outcome.provider_counters = provider.counters();
  for (const Player& p : players) {
    outcome.player_results.push_back(*p.result());
    outcome.player_counters.push_back(p.counters());
    outcome.ranks.push_back(*p.rank());
  }
  outcome.transcript = transcript.Finish();
  if (inspect) inspect(provider, players);
  return outcome;
}

ScalingFit FitThroughOrigin(const std::vector<double>& x,
                            const std::vector<double>& y) {
  double xy = 0;
  double xx = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    xy += x[i] * y[i];
    xx += x[i] * x[i];
  }
  ScalingFit fit;
  fit.coefficient = xx == 0 ? 0 : xy / xx;
  for (std::size_t i = 0; i < x.size(); ++i) {
    fit.max_residual =
        std::max(fit.max_residual, std::abs(y[i] - fit.coefficient * x[i]));
  }
  return fit;
}

ScalingReport BenchScaling(const std::vector<std::size_t>& ns,
                           const std::vector<unsigned>& key_bits,
                           std::uint64_t seed) {
  ScalingReport report;
  std::vector<double> pairs;
  std::vector<double> squares;
  std::vector<double> ops;
  for (unsigned bits : key_bits) {
    Drbg key_rng = Drbg::FromLabel(seed, "bench-keys:" + std::to_string(bits));
    paillier::KeyPair keys = paillier::KeyGen(
        bits, key_rng,
        bits < paillier::kMinSecureBits ? paillier::KeyGenMode::kTest
                                        : paillier::KeyGenMode::kSecure);
    for (std::size_t n : ns) {
      ScenarioConfig cfg;
      cfg.n = n;
      cfg.key_bits = bits;
      cfg.seed = seed;
      cfg.keys = keys;
      SimulationOutcome out = SimulateSession(cfg);
      ScalingRow row;
      row.n = n;
      row.key_bits = bits;
      row.elapsed_seconds = out.elapsed_seconds;
      row.provider = out.provider_counters.Total();
      row.player = out.player_counters[0].Total();
      const OpCounters s3 = out.provider_counters.Row("3");
      row.step3_ops = s3.encryptions + s3.exponentiations + s3.multiplications +
                      s3.inversions;
      report.rows.push_back(row);
      const double nd = static_cast<double>(n);
      pairs.push_back(nd * (nd - 1));
      squares.push_back(nd * nd);
      ops.push_back(static_cast<double>(row.step3_ops));
    }
  }
  report.pairs_fit = FitThroughOrigin(pairs, ops);
  report.square_fit = FitThroughOrigin(squares, ops);
  return report;
}

std::string ScalingReport::ToText() const {
  std::ostringstream os;
  os << std::left << std::setw(6) << "n" << std::setw(6) << "bits"
     << std::setw(11) << "seconds" << std::setw(11) << "step3_ops"
     << std::setw(10) << "S:E" << std::setw(10) << "S:Exp" << std::setw(10)
     << "S:Mult" << std::setw(10) << "S:Inv" << std::setw(10) << "S:values"
     << std::setw(6) << "P:E" << std::setw(6) << "P:D" << "P:values\n";
  for (const ScalingRow& r : rows) {
    os << std::setw(6) << r.n << std::setw(6) << r.key_bits << std::setw(11)
       << std::fixed << std::setprecision(3) << r.elapsed_seconds
       << std::setw(11) << r.step3_ops << std::setw(10) << r.provider.encryptions
       << std::setw(10) << r.provider.exponentiations << std::setw(10)
       << r.provider.multiplications << std::setw(10) << r.provider.inversions
       << std::setw(10) << r.provider.values_sent << std::setw(6)
       << r.player.encryptions << std::setw(6) << r.player.decryptions
       << r.player.values_sent << "\n";
  }
  os << std::setprecision(4);
  os << "step-3 fit c*n(n-1): c = " << pairs_fit.coefficient
     << ", max residual = " << pairs_fit.max_residual << "\n";
  os << "step-3 fit c*n^2:    c = " << square_fit.coefficient
     << ", max residual = " << square_fit.max_residual << "\n";
  os << "provider closed form: E = n(n-1)+11n+7, Exp = n(n-1)+n, "
        "Mult = 2n(n-1)+18n, Add = 7, Inv = n(n-1), values = n(n-1)+26n\n";
  return os.str();
}

std::string ScalingReport::ToCsv() const {
  std::ostringstream os;
  os << "n,key_bits,seconds,step3_ops,provider_e,provider_exp,provider_mult,"
        "provider_add,provider_inv,provider_values,player_e,player_d,"
        "player_values\n";
  for (const ScalingRow& r : rows) {
    os << r.n << "," << r.key_bits << "," << std::fixed << std::setprecision(6)
       << r.elapsed_seconds << "," << r.step3_ops << ","
       << r.provider.encryptions << "," << r.provider.exponentiations << ","
       << r.provider.multiplications << "," << r.provider.additions << ","
       << r.provider.inversions << "," << r.provider.values_sent << ","
       << r.player.encryptions << "," << r.player.decryptions << ","
       << r.player.values_sent << "\n";
  }
  return os.str();
}

}  // namespace ppbench::harness
