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

#ifndef PPBENCH_SESSION_LOG_HPP_
#define PPBENCH_SESSION_LOG_HPP_

#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

namespace ppbench::transport {

// Append-only record file. Each record is
//
//   uint32_be length | uint32_be crc32(body) | body
//
// and is flushed to stable storage before Append returns.
class SessionLog {
 public:
  explicit SessionLog(std::filesystem::path path);
  ~SessionLog();
  SessionLog(const SessionLog&) = delete;
  SessionLog& operator=(const SessionLog&) = delete;

  void Append(const std::string& body);
  const std::filesystem::path& path() const { return path_; }

  // All record bodies in order. A missing file reads as empty; a truncated
  // record or checksum mismatch is kCorruptLog.
  static std::vector<std::string> ReadAll(const std::filesystem::path& path);

 private:
  std::filesystem::path path_;
  std::FILE* file_ = nullptr;
};

}  // namespace ppbench::transport

#endif  // PPBENCH_SESSION_LOG_HPP_
