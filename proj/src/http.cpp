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

#include "ppbench/http.hpp"

#include <httplib.h>
#include <json.hpp>

#include "ppbench/bytes.hpp"
#include "ppbench/codec.hpp"
#include "ppbench/errors.hpp"

namespace ppbench::transport {

using nlohmann::json;

int HttpStatusFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUnknownSession: return 404;
    case ErrorCode::kNotEnrolled: return 403;
    case ErrorCode::kPhaseViolation:
    case ErrorCode::kDuplicateMessage: return 409;
    case ErrorCode::kIoError:
    case ErrorCode::kCorruptLog: return 500;
    default: return 400;
  }
}

namespace {

json JoinInfoJson(const JoinInfo& info) {
  return {{"session", info.session},
          {"player", info.player},
          {"index", info.index},
          {"n", info.n},
          {"modulus", BigToHex(info.modulus)},
          {"input_bits", info.domain.input_bits},
          {"compare_blind_bits", info.domain.compare_blind_bits},
          {"decimal_places", info.domain.decimal_places},
          {"min_peers", info.min_peers},
          {"result_places", info.result_places}};
}

JoinInfo JoinInfoFromJson(const json& doc) {
  JoinInfo info;
  info.session = doc.at("session").get<std::string>();
  info.player = doc.at("player").get<std::string>();
  info.index = doc.at("index").get<std::size_t>();
  info.n = doc.at("n").get<std::size_t>();
  info.modulus = BigFromHex(doc.at("modulus").get<std::string>());
  info.domain.modulus_bits =
      static_cast<unsigned>(mpz_sizeinbase(info.modulus.get_mpz_t(), 2));
  info.domain.input_bits = doc.at("input_bits").get<unsigned>();
  info.domain.compare_blind_bits = doc.at("compare_blind_bits").get<unsigned>();
  info.domain.decimal_places = doc.at("decimal_places").get<unsigned>();
  info.min_peers = doc.at("min_peers").get<std::size_t>();
  info.result_places = doc.at("result_places").get<unsigned>();
  return info;
}

json StatusJson(const SessionStatus& st) {
  return {{"session", st.session},
          {"phase", std::string(PhaseName(st.phase))},
          {"n", st.n},
          {"enrolled", st.enrolled},
          {"missing", st.missing}};
}

SessionStatus StatusFromJson(const json& doc) {
  SessionStatus st;
  st.session = doc.at("session").get<std::string>();
  auto phase = PhaseFromName(doc.at("phase").get<std::string>());
  if (!phase) throw Error(ErrorCode::kSchemaViolation, "phase");
  st.phase = *phase;
  st.n = doc.at("n").get<std::size_t>();
  st.enrolled = doc.at("enrolled").get<std::vector<std::string>>();
  st.missing = doc.at("missing").get<std::vector<std::string>>();
  return st;
}

void Reply(httplib::Response& res, int status, const json& body) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

template <typename F>
void Guarded(httplib::Response& res, F&& body) {
  try {
    body();
  } catch (const Error& e) {
    Reply(res, HttpStatusFor(e.code()),
          {{"error", std::string(ErrorCodeName(e.code()))}, {"message", e.what()}});
  } catch (const json::exception& e) {
    Reply(res, 400, {{"error", "SCHEMA_VIOLATION"}, {"message", e.what()}});
  } catch (const std::exception& e) {
    Reply(res, 500, {{"error", "INTERNAL"}, {"message", e.what()}});
  }
}

json ParseBody(const std::string& body) {
  json doc = json::parse(body, nullptr, false);
  if (doc.is_discarded() || !doc.is_object()) {
    throw Error(ErrorCode::kSchemaViolation, "$: malformed JSON");
  }
  return doc;
}

}  // namespace

struct HttpServer::Impl {
  Service& service;
  httplib::Server server;

  explicit Impl(Service& s) : service(s) {
    server.Post("/sessions", [this](const httplib::Request& req,
                                    httplib::Response& res) {
      Guarded(res, [&] {
        json doc = ParseBody(req.body);
        if (!doc.contains("provider_seed")) {
          doc["provider_seed"] = std::to_string(Drbg::FromOs().NextU64());
        }
        if (!doc.contains("session")) doc["session"] = "";
        SessionConfig cfg = SessionConfigFromJson(doc.dump());
        Reply(res, 200, {{"session", service.CreateSession(std::move(cfg))}});
      });
    });
    server.Post(R"(/sessions/([^/]+)/join)", [this](const httplib::Request& req,
                                                    httplib::Response& res) {
      Guarded(res, [&] {
        const std::string id = req.matches[1];
        json doc = ParseBody(req.body);
        const std::string player = doc.at("player").get<std::string>();
        if (!doc.contains("proof")) {
          Reply(res, 200, {{"challenge", BigToHex(service.Challenge(id, player))}});
          return;
        }
        Bytes proof = FromHex(doc.at("proof").get<std::string>());
        if (proof.size() != 32) {
          throw Error(ErrorCode::kSchemaViolation, "proof: expected 32 bytes");
        }
        Digest256 d{};
        std::copy(proof.begin(), proof.end(), d.begin());
        Reply(res, 200, JoinInfoJson(service.Join(id, player, d)));
      });
    });
    server.Post(R"(/sessions/([^/]+)/messages)", [this](const httplib::Request& req,
                                                        httplib::Response& res) {
      Guarded(res, [&] {
        WireMessage msg = codec::DecodeMessage(req.body);
        if (msg.session != req.matches[1]) {
          throw Error(ErrorCode::kSchemaViolation, "session: differs from the URL");
        }
        service.Push(msg);
        Reply(res, 200, {{"accepted", true}});
      });
    });
    server.Get(R"(/sessions/([^/]+)/messages)", [this](const httplib::Request& req,
                                                       httplib::Response& res) {
      Guarded(res, [&] {
        if (!req.has_param("recipient")) {
          throw Error(ErrorCode::kSchemaViolation, "recipient: missing");
        }
        std::size_t after = 0;
        if (req.has_param("after")) {
          try {
            after = std::stoul(req.get_param_value("after"));
          } catch (const std::exception&) {
            throw Error(ErrorCode::kSchemaViolation, "after: not a number");
          }
        }
        PollResult r = service.Poll(req.matches[1], req.get_param_value("recipient"), after);
        json msgs = json::array();
        for (const auto& m : r.messages) msgs.push_back(json::parse(codec::EncodeMessage(m)));
        Reply(res, 200, {{"cursor", r.cursor}, {"messages", msgs}});
      });
    });
    server.Get(R"(/sessions/([^/]+)/status)", [this](const httplib::Request& req,
                                                     httplib::Response& res) {
      Guarded(res, [&] { Reply(res, 200, StatusJson(service.Status(req.matches[1]))); });
    });
  }
};

HttpServer::HttpServer(Service& service) : impl_(std::make_unique<Impl>(service)) {}
HttpServer::~HttpServer() = default;

bool HttpServer::Listen(const std::string& host, int port) {
  return impl_->server.listen(host, port);
}

int HttpServer::Bind(const std::string& host, int port) {
  if (port == 0) return impl_->server.bind_to_any_port(host);
  return impl_->server.bind_to_port(host, port) ? port : -1;
}

bool HttpServer::Serve() { return impl_->server.listen_after_bind(); }
void HttpServer::WaitUntilReady() { impl_->server.wait_until_ready(); }
void HttpServer::Stop() { impl_->server.stop(); }

struct HttpApi::Impl {
  httplib::Client client;
  explicit Impl(const std::string& url) : client(url) {
    client.set_connection_timeout(5);
    client.set_read_timeout(60);
  }

  json Check(const httplib::Result& r) {
    if (!r) {
      throw Error(ErrorCode::kIoError, "request failed: " + httplib::to_string(r.error()));
    }
    json doc = json::parse(r->body, nullptr, false);
    if (r->status != 200) {
      std::optional<ErrorCode> code;
      std::string message = r->body;
      if (!doc.is_discarded() && doc.contains("error")) {
        code = ErrorCodeFromName(doc["error"].get<std::string>());
        message = doc.value("message", message);
      }
      throw Error(code.value_or(ErrorCode::kIoError), message);
    }
    if (doc.is_discarded()) throw Error(ErrorCode::kSchemaViolation, "response body");
    return doc;
  }
};

HttpApi::HttpApi(const std::string& base_url)
    : impl_(std::make_unique<Impl>(base_url)) {}
HttpApi::~HttpApi() = default;

std::string HttpApi::CreateSession(const SessionConfig& cfg) {
  json doc = impl_->Check(
      impl_->client.Post("/sessions", SessionConfigToJson(cfg), "application/json"));
  return doc.at("session").get<std::string>();
}

mpz_class HttpApi::Challenge(const std::string& session, const std::string& player) {
  json body = {{"player", player}};
  json doc = impl_->Check(impl_->client.Post("/sessions/" + session + "/join",
                                             body.dump(), "application/json"));
  return BigFromHex(doc.at("challenge").get<std::string>());
}

JoinInfo HttpApi::Join(const std::string& session, const std::string& player,
                       const Digest256& proof) {
  json body = {{"player", player}, {"proof", ToHex(proof)}};
  return JoinInfoFromJson(impl_->Check(impl_->client.Post(
      "/sessions/" + session + "/join", body.dump(), "application/json")));
}

void HttpApi::Push(const WireMessage& msg) {
  impl_->Check(impl_->client.Post("/sessions/" + msg.session + "/messages",
                                  codec::EncodeMessage(msg), "application/json"));
}

PollResult HttpApi::Poll(const std::string& session, const std::string& recipient,
                         std::size_t after) {
  httplib::Params params{{"recipient", recipient}, {"after", std::to_string(after)}};
  json doc = impl_->Check(
      impl_->client.Get("/sessions/" + session + "/messages", params, httplib::Headers{}));
  PollResult r;
  r.cursor = doc.at("cursor").get<std::size_t>();
  for (const auto& m : doc.at("messages")) r.messages.push_back(codec::DecodeMessage(m.dump()));
  return r;
}

SessionStatus HttpApi::Status(const std::string& session) {
  return StatusFromJson(
      impl_->Check(impl_->client.Get("/sessions/" + session + "/status")));
}

}  // namespace ppbench::transport
