// Copyright 2026 The kpx Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "kpx/io.h"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iterator>

#include <openssl/evp.h>

#include "json.hpp"
#include "kpx/errors.h"

namespace kpx {

namespace fs = std::filesystem;

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot read " + path);
  std::string bytes((std::istreambuf_iterator<char>(in)),
                    std::istreambuf_iterator<char>());
  if (in.bad()) throw DataError("error while reading " + path);
  return bytes;
}

std::vector<std::string> ListFiles(const std::string& dir,
                                   std::string_view extension) {
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) throw DataError("not a directory: " + dir);
  std::vector<std::string> files;
  for (const auto& entry : fs::directory_iterator(dir, ec)) {
    if (!entry.is_regular_file()) continue;
    if (entry.path().extension() == extension) {
      files.push_back(entry.path().string());
    }
  }
  if (ec) throw DataError("cannot list " + dir + ": " + ec.message());
  std::sort(files.begin(), files.end());
  return files;
}

std::string DocumentId(const std::string& path) {
  return fs::path(path).stem().string();
}

std::string Sha256Hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(),
                 nullptr) != 1) {
    throw std::runtime_error("SHA-256 failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string hex;
  hex.reserve(2 * length);
  for (unsigned int i = 0; i < length; ++i) {
    hex.push_back(kHex[digest[i] >> 4]);
    hex.push_back(kHex[digest[i] & 0x0F]);
  }
  return hex;
}

std::string UtcTimestamp() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm utc{};
  gmtime_r(&now, &utc);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &utc);
  return buf;
}

std::string RunManifest::ToJson() const {
  using nlohmann::json;
  json inputs_json = json::array();
  for (const InputDigest& d : inputs) {
    inputs_json.push_back(
        {{"role", d.role}, {"path", d.path}, {"sha256", d.sha256}});
  }
  json config_json = {
      {"alpha", config.alpha},
      {"tpos", config.t_pos},
      {"k", config.k},
      {"max_len", config.limits.max_len},
      {"discard_over", config.limits.discard_over},
      {"min_pf", config.min_pf},
      {"sim_floor", config.sim_floor},
      {"normalize", config.normalize},
      {"log_base", log_base},
  };
  json j = {{"command", command},
            {"config", config_json},
            {"inputs", inputs_json},
            {"tool_version", tool_version},
            {"timestamp", timestamp}};
  if (!k_values.empty()) j["k_values"] = k_values;
  return j.dump(2) + "\n";
}

}  // namespace kpx
