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

#ifndef PPBENCH_TESTS_SUPPORT_HPP_
#define PPBENCH_TESTS_SUPPORT_HPP_

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "ppbench/errors.hpp"
#include "ppbench/numeric.hpp"
#include "ppbench/paillier.hpp"
#include "ppbench/rng.hpp"

namespace ppbench::testing {

// Keys are expensive; every test binary generates each size once.
inline const paillier::KeyPair& CachedKeys(unsigned bits) {
  static std::mutex mu;
  static std::map<unsigned, paillier::KeyPair> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(bits);
  if (it == cache.end()) {
    Drbg rng = Drbg::FromLabel(bits, "test-keys");
    it = cache
             .emplace(bits, paillier::KeyGen(bits, rng,
                                             bits < paillier::kMinSecureBits
                                                 ? paillier::KeyGenMode::kTest
                                                 : paillier::KeyGenMode::kSecure))
             .first;
  }
  return it->second;
}

inline std::vector<KpiValue> Ints(std::initializer_list<long> values,
                                  unsigned places = 0) {
  std::vector<KpiValue> out;
  for (long v : values) out.emplace_back(mpz_class(v) * PowerOfTen(places), places);
  return out;
}

inline mpq_class Q(long num, long den = 1) {
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

template <typename F>
ErrorCode CodeOf(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  throw std::runtime_error("expected a ppbench::Error");
}

}  // namespace ppbench::testing

#endif  // PPBENCH_TESTS_SUPPORT_HPP_
