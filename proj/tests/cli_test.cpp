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

#include <filesystem>
#include <sstream>
#include <thread>

#include "ppbench/cli.hpp"
#include "ppbench/http.hpp"
#include "ppbench/service.hpp"
#include "support.hpp"

using namespace ppbench;

namespace {

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation Call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = cli::Run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("oracle subcommand") {
  Invocation r = Call({"oracle", "--inputs", "5,9,2,7"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out ==
        "mean 5.7500\nvariance 6.6875\nmedian 5.0000\nbest_in_class 9.0000\n"
        "max 9.0000\nbottom_quartile 2.0000\ntop_quartile 9.0000\n");
  CHECK(Call({"oracle", "--inputs", "1,2,3"}).code == cli::kExitProtocol);
  CHECK(Call({"oracle", "--inputs", "1,2,3", "--min-peers", "1", "--places", "2"})
            .out.find("mean 2.00") != std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(Call({}).code == cli::kExitUsage);
  CHECK(Call({"frobnicate"}).code == cli::kExitUsage);
  CHECK(Call({"simulate", "--bogus"}).code == cli::kExitUsage);
  CHECK(Call({"join", "--url", "http://x"}).code == cli::kExitUsage);
  CHECK(Call({"--help"}).code == cli::kExitOk);
}

TEST_CASE("simulate subcommand") {
  Invocation r = Call({"simulate", "--inputs", "5,9,2,7", "--key-bits", "256"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.find("oracle match") != std::string::npos);
  CHECK(r.out.find("variance 6.6875 valid") != std::string::npos);
  CHECK(Call({"simulate", "-n", "3", "--key-bits", "256"}).code ==
        cli::kExitProtocol);
  CHECK(Call({"simulate", "-n", "4", "--key-bits", "64"}).code ==
        cli::kExitProtocol);
}

TEST_CASE("setup-keys refuses weak keys unless asked") {
  auto dir = std::filesystem::temp_directory_path() / "ppbench-cli-keys";
  std::filesystem::remove_all(dir);
  CHECK(Call({"setup-keys", "--bits", "256", "--out", dir.string()}).code ==
        cli::kExitProtocol);
  CHECK(Call({"setup-keys", "--bits", "256", "--out", dir.string(), "--seed", "4",
              "--insecure-test-key"})
            .code == cli::kExitOk);
  auto kf = paillier::KeyFileFromJson(paillier::ReadTextFile(dir / "private.json"));
  CHECK(kf.pub.bits == 256);
  CHECK(kf.mac_key.has_value());
  std::filesystem::remove_all(dir);
}

TEST_CASE("join reports tampering with exit code 4") {
  auto dir = std::filesystem::temp_directory_path() / "ppbench-cli-join";
  std::filesystem::remove_all(dir);
  REQUIRE(Call({"setup-keys", "--bits", "256", "--out", dir.string(), "--seed", "5",
                "--insecure-test-key"})
              .code == cli::kExitOk);
  auto kf = paillier::KeyFileFromJson(paillier::ReadTextFile(dir / "public.json"));

  transport::Service service(transport::ServiceOptions{std::nullopt, true});
  auto make = [&](const std::string& id, std::optional<Measure> fault) {
    SessionConfig cfg;
    cfg.session_id = id;
    cfg.roster = {"a", "b", "c", "d"};
    cfg.pk = kf.pub;
    cfg.domain.modulus_bits = kf.pub.bits;
    cfg.provider_seed = 3;
    cfg.fault.equivocate = fault;
    cfg.fault.target = 2;
    service.CreateSession(cfg);
  };
  make("honest", std::nullopt);
  make("tampered", Measure::kMedian);

  transport::HttpServer server(service);
  const int port = server.Bind("127.0.0.1", 0);
  REQUIRE(port > 0);
  std::thread serving([&] { server.Serve(); });
  server.WaitUntilReady();
  const std::string url = "http://127.0.0.1:" + std::to_string(port);

  auto run_session = [&](const std::string& session) {
    const std::vector<std::string> ids = {"a", "b", "c", "d"};
    const std::vector<std::string> kpis = {"5", "9.25", "2", "7.5"};
    std::vector<Invocation> results(4);
    std::vector<std::thread> threads;
    for (std::size_t i = 0; i < 4; ++i) {
      threads.emplace_back([&, i] {
        results[i] = Call({"join", "--url", url, "--session", session, "--player",
                           ids[i], "--key", (dir / "private.json").string(),
                           "--kpi", kpis[i], "--poll-ms", "5", "--timeout", "60",
                           "--seed", std::to_string(i)});
      });
    }
    for (auto& t : threads) t.join();
    return results;
  };

  auto honest = run_session("honest");
  for (const auto& r : honest) {
    CHECK(r.code == cli::kExitOk);
    CHECK(r.out.find("mean 5.9375 valid") != std::string::npos);
  }
  for (const auto& r : honest) {
    CHECK(r.out.find("assigned rank ") == 0);
    CHECK(r.out.find(" of 4\n") != std::string::npos);
  }

  auto tampered = run_session("tampered");
  CHECK(tampered[1].code == cli::kExitIntegrity);
  CHECK(tampered[1].out.find("median") != std::string::npos);
  CHECK(tampered[1].out.find("INVALID") != std::string::npos);
  CHECK(tampered[1].out.find("mean 5.9375 valid") != std::string::npos);

  server.Stop();
  serving.join();
  std::filesystem::remove_all(dir);
}
