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

#include "ppbench/protocol.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>

#include "ppbench/errors.hpp"
#include "ppbench/ot.hpp"

namespace ppbench {

std::size_t SessionConfig::IndexOf(const std::string& player_id) const {
  auto it = std::find(roster.begin(), roster.end(), player_id);
  return it == roster.end() ? 0 : static_cast<std::size_t>(it - roster.begin()) + 1;
}

void ValidateSessionConfig(const SessionConfig& cfg) {
  if (cfg.session_id.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "empty session id");
  }
  std::set<std::string> ids(cfg.roster.begin(), cfg.roster.end());
  if (ids.size() != cfg.roster.size() || ids.count(std::string(kProviderId)) ||
      ids.count("")) {
    throw Error(ErrorCode::kInvalidArgument, "roster ids must be unique");
  }
  if (cfg.min_peers == 0 || cfg.n() < cfg.min_peers) {
    throw Error(ErrorCode::kPeerGroupTooSmall,
                "peer group of " + std::to_string(cfg.n()) + " below minimum " +
                    std::to_string(cfg.min_peers));
  }
  if (cfg.domain.modulus_bits != cfg.pk.bits) {
    throw Error(ErrorCode::kInvalidArgument,
                "domain modulus bits differ from the key");
  }
  RequireBudget(cfg.domain, cfg.n());
  if (cfg.fault.equivocate &&
      (cfg.fault.target == 0 || cfg.fault.target > cfg.n())) {
    throw Error(ErrorCode::kInvalidArgument, "fault target out of range");
  }
}

KpiValue BenchmarkResult::Rounded(Measure m) const {
  return KpiValue::FromRational(Exact(m), places);
}

bool BenchmarkResult::AllValid() const {
  return std::all_of(validation.begin(), validation.end(),
                     [](const integrity::ValidationBit& b) { return b.ok; });
}

std::string BenchmarkResult::ToJson() const {
  nlohmann::json stats = nlohmann::json::object();
  nlohmann::json exact_json = nlohmann::json::object();
  for (Measure m : kAllMeasures) {
    std::string name(MeasureName(m));
    stats[name] = Rounded(m).ToString();
    exact_json[name] = Exact(m).get_str();
  }
  nlohmann::json bits = nlohmann::json::object();
  for (const auto& b : validation) bits[std::string(MeasureName(b.measure))] = b.ok;
  nlohmann::json c = {
      {"encryptions", counters.encryptions},
      {"decryptions", counters.decryptions},
      {"exponentiations", counters.exponentiations},
      {"multiplications", counters.multiplications},
      {"additions", counters.additions},
      {"inversions", counters.inversions},
      {"values_sent", counters.values_sent},
      {"comparison_decryptions", counters.comparison_decryptions},
  };
  nlohmann::json doc = {{"n", n},           {"places", places},
                        {"statistics", stats}, {"exact", exact_json},
                        {"validation", bits},  {"counters", c}};
  return doc.dump();
}

BenchmarkResult FinalizeStatistics(const std::array<mpz_class, 7>& aggregates,
                                   std::size_t n, unsigned decimal_places,
                                   unsigned result_places) {
  BenchmarkResult r;
  r.n = n;
  r.places = result_places;
  const mpz_class scale = PowerOfTen(decimal_places);
  const mpz_class nn(static_cast<unsigned long>(n));
  for (Measure m : kAllMeasures) {
    const mpz_class& a = aggregates[static_cast<std::size_t>(m)];
    mpz_class den = scale;
    switch (m) {
      case Measure::kMean: den = nn * scale; break;
      case Measure::kVariance: den = nn * nn * nn * scale * scale; break;
      case Measure::kBestInClass:
        den = scale * static_cast<unsigned long>(BestInClassMembers(n));
        break;
      default: break;
    }
    mpq_class q(a, den);
    q.canonicalize();
    r.exact[static_cast<std::size_t>(m)] = q;
  }
  return r;
}

namespace {

[[noreturn]] void Schema(const std::string& field, const std::string& what) {
  throw Error(ErrorCode::kSchemaViolation, field + ": " + what);
}

void ExpectCounts(const WireMessage& msg, std::size_t numbers,
                  std::size_t blobs) {
  if (msg.numbers.size() != numbers) {
    Schema("numbers", "expected " + std::to_string(numbers) + " entries");
  }
  if (msg.blobs.size() != blobs) {
    Schema("blobs", "expected " + std::to_string(blobs) + " entries");
  }
}

void ExpectCiphertexts(const WireMessage& msg, const paillier::PublicKey& pk) {
  for (std::size_t i = 0; i < msg.numbers.size(); ++i) {
    const mpz_class& c = msg.numbers[i];
    if (sgn(c) <= 0 || c >= pk.n_squared) {
      Schema("numbers[" + std::to_string(i) + "]", "ciphertext out of range");
    }
  }
}

void ExpectResidues(const WireMessage& msg, const paillier::PublicKey& pk) {
  for (std::size_t i = 0; i < msg.numbers.size(); ++i) {
    const mpz_class& v = msg.numbers[i];
    if (sgn(v) < 0 || v >= pk.n) {
      Schema("numbers[" + std::to_string(i) + "]", "residue out of range");
    }
  }
}

void ExpectDigest(const WireMessage& msg) {
  if (msg.blobs[0].size() != 32) Schema("blobs[0]", "expected 32 bytes");
}

}  // namespace

void ValidatePayload(const WireMessage& msg, const paillier::PublicKey& pk,
                     std::size_t n) {
  switch (msg.kind) {
    case MessageKind::kInput:
    case MessageKind::kBlindedSum:
    case MessageKind::kRerandomized:
    case MessageKind::kVarianceTerm:
    case MessageKind::kBlindedMeasure:
      ExpectCounts(msg, 1, 0);
      ExpectCiphertexts(msg, pk);
      break;
    case MessageKind::kRankVector:
      ExpectCounts(msg, n - 1, 0);
      ExpectCiphertexts(msg, pk);
      break;
    case MessageKind::kOtAnnounce:
    case MessageKind::kOtResponse: {
      ExpectCounts(msg, 0, 1);
      if (msg.blobs[0].size() != 32) Schema("blobs[0]", "expected 32 bytes");
      ot::GroupElement e;
      std::copy(msg.blobs[0].begin(), msg.blobs[0].end(), e.begin());
      if (!ot::IsValidElement(e)) {
        throw Error(ErrorCode::kInvalidGroupElement, "blobs[0]");
      }
      break;
    }
    case MessageKind::kOtPayloads: {
      ExpectCounts(msg, 0, 2);
      const std::size_t expected = 4 + pk.CiphertextBytes() + ot::kTagBytes;
      for (std::size_t i = 0; i < 2; ++i) {
        if (msg.blobs[i].size() != expected) {
          Schema("blobs[" + std::to_string(i) + "]",
                 "expected " + std::to_string(expected) + " bytes");
        }
      }
      break;
    }
    case MessageKind::kBlindedPlain:
    case MessageKind::kResult:
      ExpectCounts(msg, 1, 0);
      ExpectResidues(msg, pk);
      break;
    case MessageKind::kMacTag:
    case MessageKind::kTagHash:
      ExpectCounts(msg, 0, 1);
      ExpectDigest(msg);
      break;
  }
}

}  // namespace ppbench
