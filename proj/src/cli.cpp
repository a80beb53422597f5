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

#include "ppbench/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "ppbench/client.hpp"
#include "ppbench/errors.hpp"
#include "ppbench/harness.hpp"
#include "ppbench/http.hpp"
#include "ppbench/paillier.hpp"
#include "ppbench/service.hpp"

namespace ppbench::cli {
namespace {

std::vector<std::string> SplitList(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

std::vector<KpiValue> ParseInputs(const std::string& text, unsigned places) {
  std::vector<KpiValue> values;
  for (const auto& part : SplitList(text)) values.push_back(KpiValue::Parse(part, places));
  return values;
}

void PrintStatistics(std::ostream& out, const BenchmarkResult& r) {
  for (Measure m : kAllMeasures) {
    out << MeasureName(m) << " " << r.Rounded(m).ToString();
    for (const auto& bit : r.validation) {
      if (bit.measure == m) out << (bit.ok ? " valid" : " INVALID");
    }
    out << "\n";
  }
}

struct SetupKeysArgs {
  unsigned bits = 768;
  std::string out_dir = ".";
  std::uint64_t seed = 0;
  bool seeded = false;
  bool insecure = false;
};

int SetupKeys(const SetupKeysArgs& a, std::ostream& out) {
  Drbg rng = a.seeded ? Drbg::FromLabel(a.seed, "setup-keys") : Drbg::FromOs();
  paillier::KeyPair kp = paillier::KeyGen(
      a.bits, rng, a.insecure ? paillier::KeyGenMode::kTest : paillier::KeyGenMode::kSecure);
  std::array<std::uint8_t, 32> mac{};
  rng.Fill(mac);
  std::filesystem::create_directories(a.out_dir);
  const auto dir = std::filesystem::path(a.out_dir);
  paillier::WriteTextFile(dir / "public.json", paillier::PublicKeyToJson(kp.pub));
  paillier::WriteTextFile(dir / "private.json", paillier::PrivateKeyToJson(kp.priv, mac));
  out << "key " << kp.pub.id.ToHex() << " (" << kp.pub.bits << " bits)\n"
      << "public key: " << (dir / "public.json").string() << "\n"
      << "private key and MAC key: " << (dir / "private.json").string() << "\n";
  return kExitOk;
}

struct ServeArgs {
  std::string host = "127.0.0.1";
  int port = 8080;
  std::string data_dir = "ppbench-data";
  bool allow_faults = false;
  std::string session;
  std::string roster;
  std::string public_key;
  unsigned decimal_places = 2;
  unsigned input_bits = 40;
  unsigned compare_blind_bits = 64;
  std::size_t min_peers = kDefaultMinPeers;
  unsigned result_places = kDefaultResultPlaces;
  std::string fault_measure;
  std::size_t fault_target = 1;
};

int Serve(const ServeArgs& a, std::ostream& out) {
  transport::ServiceOptions opts;
  opts.data_dir = a.data_dir;
  opts.allow_fault_injection = a.allow_faults;
  transport::Service service(opts);
  if (!a.session.empty()) {
    auto existing = service.Sessions();
    if (std::find(existing.begin(), existing.end(), a.session) == existing.end()) {
      if (a.public_key.empty() || a.roster.empty()) {
        throw Error(ErrorCode::kInvalidArgument,
                    "--session needs --public-key and --roster");
      }
      SessionConfig cfg;
      cfg.session_id = a.session;
      cfg.roster = SplitList(a.roster);
      cfg.pk = paillier::KeyFileFromJson(paillier::ReadTextFile(a.public_key)).pub;
      cfg.domain.modulus_bits = cfg.pk.bits;
      cfg.domain.decimal_places = a.decimal_places;
      cfg.domain.input_bits = a.input_bits;
      cfg.domain.compare_blind_bits = a.compare_blind_bits;
      cfg.min_peers = a.min_peers;
      cfg.result_places = a.result_places;
      cfg.provider_seed = Drbg::FromOs().NextU64();
      if (!a.fault_measure.empty()) {
        auto m = MeasureFromName(a.fault_measure);
        if (!m) throw Error(ErrorCode::kInvalidArgument, "unknown measure " + a.fault_measure);
        cfg.fault.equivocate = *m;
        cfg.fault.target = a.fault_target;
      }
      service.CreateSession(cfg);
    }
    out << "session " << a.session << "\n";
  }
  transport::HttpServer server(service);
  const int port = server.Bind(a.host, a.port);
  if (port < 0) throw Error(ErrorCode::kIoError, "cannot bind " + a.host);
  out << "listening on http://" << a.host << ":" << port << std::endl;
  return server.Serve() ? kExitOk : kExitProtocol;
}

struct JoinArgs {
  std::string url;
  std::string session;
  std::string player;
  std::string key;
  std::string kpi;
  unsigned poll_ms = 50;
  unsigned timeout_s = 600;
  std::uint64_t seed = 0;
  bool seeded = false;
};

int Join(const JoinArgs& a, std::ostream& out) {
  paillier::KeyFile kf = paillier::KeyFileFromJson(paillier::ReadTextFile(a.key));
  if (!kf.priv || !kf.mac_key) {
    throw Error(ErrorCode::kInvalidArgument, "join needs the private key file");
  }
  transport::HttpApi api(a.url);
  transport::PlayerCredentials creds{*kf.priv, *kf.mac_key};
  // Scaled to the session's decimal places when encoded.
  const auto dot = a.kpi.find('.');
  const unsigned given = dot == std::string::npos
                             ? 0
                             : static_cast<unsigned>(a.kpi.size() - dot - 1);
  KpiValue input = KpiValue::Parse(a.kpi, given);
  Drbg rng = a.seeded ? Drbg::FromLabel(a.seed, "join:" + a.player) : Drbg::FromOs();
  transport::PlayerClient client(&api, a.session, a.player, creds, input, rng);
  BenchmarkResult r = transport::RunPlayer(client, std::chrono::milliseconds(a.poll_ms),
                                           std::chrono::seconds(a.timeout_s));
  out << "assigned rank " << *client.player().rank() << " of " << r.n << "\n";
  PrintStatistics(out, r);
  if (!r.AllValid()) {
    out << "integrity check failed\n";
    return kExitIntegrity;
  }
  return kExitOk;
}

struct SimulateArgs {
  harness::ScenarioConfig cfg;
  std::string inputs;
};

int Simulate(SimulateArgs a, std::ostream& out) {
  if (!a.inputs.empty()) {
    a.cfg.inputs = ParseInputs(a.inputs, a.cfg.decimal_places);
    a.cfg.n = a.cfg.inputs.size();
  }
  harness::SimulationOutcome s = harness::SimulateSession(a.cfg);
  BenchmarkResult oracle =
      harness::OracleStats(s.inputs, a.cfg.result_places, a.cfg.min_peers);
  out << "n " << a.cfg.n << ", " << a.cfg.key_bits << "-bit key, "
      << s.elapsed_seconds << " s\n";
  PrintStatistics(out, s.player_results[0]);
  bool match = true;
  for (const auto& r : s.player_results) {
    match = match && r.exact == oracle.exact && r.exact == s.provider_result.exact;
  }
  out << "oracle " << (match ? "match" : "MISMATCH") << "\n";
  out << "provider: " << CountersToText(s.provider_counters.Total()) << "\n";
  out << "player 1: " << CountersToText(s.player_counters[0].Total()) << "\n";
  out << "transcript " << ToHex(s.transcript) << "\n";
  for (const auto& r : s.player_results) {
    if (!r.AllValid()) return kExitIntegrity;
  }
  return match ? kExitOk : kExitProtocol;
}

struct BenchArgs {
  std::string ns = "10,20,40";
  std::string bits = "768";
  std::uint64_t seed = 1;
  std::string out_dir;
};

int Bench(const BenchArgs& a, std::ostream& out) {
  std::vector<std::size_t> ns;
  for (const auto& s : SplitList(a.ns)) ns.push_back(std::stoul(s));
  std::vector<unsigned> bits;
  for (const auto& s : SplitList(a.bits)) bits.push_back(static_cast<unsigned>(std::stoul(s)));
  harness::ScalingReport report = harness::BenchScaling(ns, bits, a.seed);
  out << report.ToText();
  if (!a.out_dir.empty()) {
    std::filesystem::create_directories(a.out_dir);
    const auto dir = std::filesystem::path(a.out_dir);
    paillier::WriteTextFile(dir / "report.txt", report.ToText());
    paillier::WriteTextFile(dir / "scaling.csv", report.ToCsv());
    out << "wrote " << (dir / "report.txt").string() << " and "
        << (dir / "scaling.csv").string() << "\n";
  }
  return kExitOk;
}

struct OracleArgs {
  std::string inputs;
  unsigned decimal_places = 2;
  unsigned places = kDefaultResultPlaces;
  std::size_t min_peers = kDefaultMinPeers;
};

int Oracle(const OracleArgs& a, std::ostream& out) {
  PrintStatistics(out, harness::OracleStats(ParseInputs(a.inputs, a.decimal_places),
                                            a.places, a.min_peers));
  return kExitOk;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Privacy-preserving KPI benchmarking"};
  app.set_config("--config", "", "Read options from a TOML/INI file");
  app.require_subcommand(1);

  SetupKeysArgs keys;
  auto* setup = app.add_subcommand("setup-keys", "Generate the Paillier pair and MAC key");
  setup->add_option("--bits", keys.bits, "Modulus size")->capture_default_str();
  setup->add_option("--out", keys.out_dir, "Output directory")->capture_default_str();
  auto* seed_opt = setup->add_option("--seed", keys.seed, "Deterministic seed");
  setup->add_flag("--insecure-test-key", keys.insecure, "Allow moduli below 512 bits");

  ServeArgs serve;
  auto* srv = app.add_subcommand("serve", "Run the benchmarking service");
  srv->add_option("--host", serve.host)->capture_default_str();
  srv->add_option("--port", serve.port, "0 picks a free port")->capture_default_str();
  srv->add_option("--data-dir", serve.data_dir, "Session logs")->capture_default_str();
  srv->add_option("--session", serve.session, "Create this session unless restored");
  srv->add_option("--roster", serve.roster, "Comma-separated player ids");
  srv->add_option("--public-key", serve.public_key, "Public key file");
  srv->add_option("--decimal-places", serve.decimal_places)->capture_default_str();
  srv->add_option("--input-bits", serve.input_bits)->capture_default_str();
  srv->add_option("--compare-blind-bits", serve.compare_blind_bits)->capture_default_str();
  srv->add_option("--min-peers", serve.min_peers)->capture_default_str();
  srv->add_option("--result-places", serve.result_places)->capture_default_str();
  srv->add_flag("--allow-fault-injection", serve.allow_faults, "Testing only");
  srv->add_option("--fault-measure", serve.fault_measure, "Testing only");
  srv->add_option("--fault-target", serve.fault_target, "Testing only");

  JoinArgs join;
  auto* jn = app.add_subcommand("join", "Run a player against a service");
  jn->add_option("--url", join.url, "Service URL")->required();
  jn->add_option("--session", join.session)->required();
  jn->add_option("--player", join.player, "Roster id")->required();
  jn->add_option("--key", join.key, "Private key file")->required();
  jn->add_option("--kpi", join.kpi, "Own KPI value")->required();
  jn->add_option("--poll-ms", join.poll_ms)->capture_default_str();
  jn->add_option("--timeout", join.timeout_s, "Seconds")->capture_default_str();
  auto* join_seed = jn->add_option("--seed", join.seed, "Deterministic randomness");

  SimulateArgs sim;
  auto* sm = app.add_subcommand("simulate", "Run a whole session in-process");
  sm->add_option("-n", sim.cfg.n, "Peer-group size")->capture_default_str();
  sm->add_option("--key-bits", sim.cfg.key_bits)->capture_default_str();
  sm->add_option("--seed", sim.cfg.seed)->capture_default_str();
  sm->add_option("--inputs", sim.inputs, "Comma-separated KPIs; overrides -n");
  sm->add_option("--decimal-places", sim.cfg.decimal_places)->capture_default_str();
  sm->add_option("--input-bits", sim.cfg.input_bits)->capture_default_str();
  sm->add_option("--compare-blind-bits", sim.cfg.compare_blind_bits)->capture_default_str();
  sm->add_option("--min-peers", sim.cfg.min_peers)->capture_default_str();
  sm->add_option("--result-places", sim.cfg.result_places)->capture_default_str();
  sm->add_flag("--ties", sim.cfg.ties, "Draw inputs with repeats");
  sm->add_flag("--concurrent", sim.cfg.concurrent, "One thread per player");

  BenchArgs bench;
  auto* bn = app.add_subcommand("bench", "Scaling report over n and key sizes");
  bn->add_option("--n", bench.ns, "Comma-separated sizes")->capture_default_str();
  bn->add_option("--key-bits", bench.bits, "Comma-separated key sizes")->capture_default_str();
  bn->add_option("--seed", bench.seed)->capture_default_str();
  bn->add_option("--out-dir", bench.out_dir, "Write report.txt and scaling.csv");

  OracleArgs oracle;
  auto* orc = app.add_subcommand("oracle", "Plaintext statistics");
  orc->add_option("--inputs", oracle.inputs, "Comma-separated KPIs")->required();
  orc->add_option("--decimal-places", oracle.decimal_places)->capture_default_str();
  orc->add_option("--places", oracle.places, "Printed decimals")->capture_default_str();
  orc->add_option("--min-peers", oracle.min_peers)->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*setup) {
      keys.seeded = seed_opt->count() > 0;
      return SetupKeys(keys, out);
    }
    if (*srv) return Serve(serve, out);
    if (*jn) {
      join.seeded = join_seed->count() > 0;
      return Join(join, out);
    }
    if (*sm) return Simulate(sim, out);
    if (*bn) return Bench(bench, out);
    if (*orc) return Oracle(oracle, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitProtocol;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitProtocol;
  }
  return kExitUsage;
}

}  // namespace ppbench::cli
