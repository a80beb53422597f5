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

#ifndef PPBENCH_HTTP_HPP_
#define PPBENCH_HTTP_HPP_

#include <memory>
#include <string>

#include "ppbench/client.hpp"
#include "ppbench/errors.hpp"
#include "ppbench/service.hpp"

// JSON over HTTP:
//
//   POST /sessions                       session config -> {"session": id}
//   POST /sessions/{id}/join             {"player"} -> {"challenge"}
//                                        {"player","proof"} -> join info
//   POST /sessions/{id}/messages         encoded message -> {"accepted": true}
//   GET  /sessions/{id}/messages?recipient=&after=
//                                        -> {"cursor": k, "messages": [...]}
//   GET  /sessions/{id}/status           -> status
//
// Failures answer {"error": CODE, "message": text} with 404 for
// UNKNOWN_SESSION, 403 for NOT_ENROLLED, 409 for PHASE_VIOLATION and
// DUPLICATE_MESSAGE, 400 for other request errors and 500 otherwise.
namespace ppbench::transport {

int HttpStatusFor(ErrorCode code);

class HttpServer {
 public:
  explicit HttpServer(Service& service);
  ~HttpServer();

  // Binds and serves until Stop(); port 0 picks a free port.
  bool Listen(const std::string& host, int port);
  // Binds only; returns the port, or -1.
  int Bind(const std::string& host, int port);
  // Serves on a socket from Bind(); blocks until Stop().
  bool Serve();
  void WaitUntilReady();
  void Stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

class HttpApi : public ServiceApi {
 public:
  // base_url like "http://127.0.0.1:8080".
  explicit HttpApi(const std::string& base_url);
  ~HttpApi() override;

  std::string CreateSession(const SessionConfig& cfg) override;
  mpz_class Challenge(const std::string& session,
                      const std::string& player) override;
  JoinInfo Join(const std::string& session, const std::string& player,
                const Digest256& proof) override;
  void Push(const WireMessage& msg) override;
  PollResult Poll(const std::string& session, const std::string& recipient,
                  std::size_t after) override;
  SessionStatus Status(const std::string& session) override;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace ppbench::transport

#endif  // PPBENCH_HTTP_HPP_
