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

#include "ppbench/session_log.hpp"

#include <unistd.h>
#include <zlib.h>

#include <array>
#include <cstdint>
#include <fstream>
#include <iterator>

#include "ppbench/errors.hpp"

namespace ppbench::transport {
namespace {

std::uint32_t Crc(const std::string& body) {
  return static_cast<std::uint32_t>(
      crc32(0L, reinterpret_cast<const Bytef*>(body.data()),
            static_cast<uInt>(body.size())));
}

void PutU32(std::array<unsigned char, 8>& header, std::size_t at,
            std::uint32_t v) {
  header[at] = static_cast<unsigned char>(v >> 24);
  header[at + 1] = static_cast<unsigned char>(v >> 16);
  header[at + 2] = static_cast<unsigned char>(v >> 8);
  header[at + 3] = static_cast<unsigned char>(v);
}

std::uint32_t GetU32(const std::string& data, std::size_t at) {
  return (static_cast<std::uint32_t>(static_cast<unsigned char>(data[at])) << 24) |
         (static_cast<std::uint32_t>(static_cast<unsigned char>(data[at + 1])) << 16) |
         (static_cast<std::uint32_t>(static_cast<unsigned char>(data[at + 2])) << 8) |
         static_cast<std::uint32_t>(static_cast<unsigned char>(data[at + 3]));
}

}  // namespace

SessionLog::SessionLog(std::filesystem::path path) : path_(std::move(path)) {
  file_ = std::fopen(path_.c_str(), "ab");
  if (!file_) throw Error(ErrorCode::kIoError, "cannot open " + path_.string());
}

SessionLog::~SessionLog() {
  if (file_) std::fclose(file_);
}

void SessionLog::Append(const std::string& body) {
  std::array<unsigned char, 8> header{};
  PutU32(header, 0, static_cast<std::uint32_t>(body.size()));
  PutU32(header, 4, Crc(body));
  if (std::fwrite(header.data(), 1, header.size(), file_) != header.size() ||
      std::fwrite(body.data(), 1, body.size(), file_) != body.size() ||
      std::fflush(file_) != 0 || ::fsync(::fileno(file_)) != 0) {
    throw Error(ErrorCode::kIoError, "append to " + path_.string() + " failed");
  }
}

std::vector<std::string> SessionLog::ReadAll(const std::filesystem::path& path) {
  std::vector<std::string> records;
  std::ifstream in(path, std::ios::binary);
  if (!in) return records;
  const std::string data((std::istreambuf_iterator<char>(in)),
                         std::istreambuf_iterator<char>());
  std::size_t at = 0;
  while (at < data.size()) {
    if (data.size() - at < 8) {
      throw Error(ErrorCode::kCorruptLog, "truncated header at " + std::to_string(at));
    }
    const std::uint32_t len = GetU32(data, at);
    const std::uint32_t crc = GetU32(data, at + 4);
    if (data.size() - at - 8 < len) {
      throw Error(ErrorCode::kCorruptLog, "truncated record at " + std::to_string(at));
    }
    std::string body = data.substr(at + 8, len);
    if (Crc(body) != crc) {
      throw Error(ErrorCode::kCorruptLog, "checksum mismatch at " + std::to_string(at));
    }
    records.push_back(std::move(body));
    at += 8 + len;
  }
  return records;
}

}  // namespace ppbench::transport
