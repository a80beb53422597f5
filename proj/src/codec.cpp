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

#include "ppbench/codec.hpp"

#include <json.hpp>

#include <set>

#include "ppbench/errors.hpp"

namespace ppbench::codec {
namespace {

using nlohmann::json;

enum class Shape { kBig, kBigArray, kBlob, kBlobPair };

struct PayloadSchema {
  Shape shape;
  const char* field;
};

PayloadSchema SchemaFor(MessageKind kind) {
  switch (kind) {
    case MessageKind::kRankVector: return {Shape::kBigArray, "c"};
    case MessageKind::kInput:
    case MessageKind::kBlindedSum:
    case MessageKind::kRerandomized:
    case MessageKind::kVarianceTerm:
    case MessageKind::kBlindedMeasure: return {Shape::kBig, "c"};
    case MessageKind::kBlindedPlain:
    case MessageKind::kResult: return {Shape::kBig, "v"};
    case MessageKind::kOtAnnounce: return {Shape::kBlob, "A"};
    case MessageKind::kOtResponse: return {Shape::kBlob, "B"};
    case MessageKind::kOtPayloads: return {Shape::kBlobPair, "w"};
    case MessageKind::kMacTag: return {Shape::kBlob, "tag"};
    case MessageKind::kTagHash: return {Shape::kBlob, "h"};
  }
  return {Shape::kBig, "c"};
}

[[noreturn]] void Fail(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::kSchemaViolation, path + ": " + what);
}

std::string Str(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) Fail(key, "missing");
  if (!it->is_string()) Fail(key, "expected string");
  return it->get<std::string>();
}

mpz_class Big(const json& v, const std::string& path) {
  if (!v.is_string()) Fail(path, "expected hex string");
  try {
    return BigFromHex(v.get<std::string>());
  } catch (const Error&) {
    Fail(path, "not a canonical hex integer");
  }
}

Bytes Blob(const json& v, const std::string& path) {
  if (!v.is_string()) Fail(path, "expected hex string");
  const std::string s = v.get<std::string>();
  for (char ch : s) {
    if (!((ch >= '0' && ch <= '9') || (ch >= 'a' && ch <= 'f'))) {
      Fail(path, "expected lowercase hex");
    }
  }
  if (s.size() % 2 != 0) Fail(path, "odd hex length");
  return FromHex(s);
}

void ExpectKeys(const json& obj, const std::set<std::string>& keys,
                const std::string& path) {
  for (const auto& [k, v] : obj.items()) {
    if (!keys.count(k)) Fail(path.empty() ? k : path + "." + k, "unexpected field");
  }
}

}  // namespace

std::string EncodeMessage(const WireMessage& msg) {
  const PayloadSchema schema = SchemaFor(msg.kind);
  json payload = json::object();
  switch (schema.shape) {
    case Shape::kBig:
      payload[schema.field] = BigToHex(msg.numbers.at(0));
      break;
    case Shape::kBigArray: {
      json arr = json::array();
      for (const auto& v : msg.numbers) arr.push_back(BigToHex(v));
      payload[schema.field] = std::move(arr);
      break;
    }
    case Shape::kBlob:
      payload[schema.field] = ToHex(msg.blobs.at(0));
      break;
    case Shape::kBlobPair:
      payload["w0"] = ToHex(msg.blobs.at(0));
      payload["w1"] = ToHex(msg.blobs.at(1));
      break;
  }
  json doc = {
      {"session", msg.session},
      {"phase", std::string(PhaseName(msg.phase))},
      {"step", msg.step},
      {"sender_role", std::string(RoleName(msg.sender_role))},
      {"sender", msg.sender},
      {"recipient", msg.recipient},
      {"kind", std::string(KindName(msg.kind))},
      {"payload", std::move(payload)},
  };
  return doc.dump();
}

WireMessage DecodeMessage(std::string_view text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) Fail("$", "malformed JSON");
  if (!doc.is_object()) Fail("$", "expected object");
  ExpectKeys(doc,
             {"session", "phase", "step", "sender_role", "sender", "recipient",
              "kind", "payload"},
             "");

  WireMessage msg;
  msg.session = Str(doc, "session");
  auto phase = PhaseFromName(Str(doc, "phase"));
  if (!phase) Fail("phase", "unknown phase");
  msg.phase = *phase;
  msg.step = Str(doc, "step");
  if (!IsValidStepLabel(msg.step)) Fail("step", "unknown step label");
  const std::string role = Str(doc, "sender_role");
  if (role == RoleName(Role::kPlayer)) {
    msg.sender_role = Role::kPlayer;
  } else if (role == RoleName(Role::kProvider)) {
    msg.sender_role = Role::kProvider;
  } else {
    Fail("sender_role", "unknown role");
  }
  msg.sender = Str(doc, "sender");
  msg.recipient = Str(doc, "recipient");
  auto kind = KindFromName(Str(doc, "kind"));
  if (!kind) Fail("kind", "unknown kind");
  msg.kind = *kind;
  if (!IsLegalStepKind(msg.sender_role, msg.step, msg.kind)) {
    Fail("step", "not a " + std::string(KindName(msg.kind)) + " step for " +
                     role);
  }

  auto pit = doc.find("payload");
  if (pit == doc.end()) Fail("payload", "missing");
  if (!pit->is_object()) Fail("payload", "expected object");
  const json& payload = *pit;
  const PayloadSchema schema = SchemaFor(msg.kind);
  const std::string base = std::string("payload.") + schema.field;
  auto field = [&](const char* name) -> const json& {
    auto it = payload.find(name);
    if (it == payload.end()) Fail(std::string("payload.") + name, "missing");
    return *it;
  };
  switch (schema.shape) {
    case Shape::kBig:
      ExpectKeys(payload, {schema.field}, "payload");
      msg.numbers.push_back(Big(field(schema.field), base));
      break;
    case Shape::kBigArray: {
      ExpectKeys(payload, {schema.field}, "payload");
      const json& arr = field(schema.field);
      if (!arr.is_array()) Fail(base, "expected array");
      for (std::size_t i = 0; i < arr.size(); ++i) {
        msg.numbers.push_back(Big(arr[i], base + "[" + std::to_string(i) + "]"));
      }
      break;
    }
    case Shape::kBlob:
      ExpectKeys(payload, {schema.field}, "payload");
      msg.blobs.push_back(Blob(field(schema.field), base));
      break;
    case Shape::kBlobPair:
      ExpectKeys(payload, {"w0", "w1"}, "payload");
      msg.blobs.push_back(Blob(field("w0"), "payload.w0"));
      msg.blobs.push_back(Blob(field("w1"), "payload.w1"));
      break;
  }
  return msg;
}

}  // namespace ppbench::codec
