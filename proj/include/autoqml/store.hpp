#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "autoqml/errors.hpp"

namespace autoqml {

// Directory-backed blob store with the two guarantees the pipelines lean on:
// puts are all-or-nothing (write to a hidden temp file, then hard-link into
// place), and keys are write-once (the link fails if the key exists).
// Readers polling list()/get() therefore never observe partial blobs.
class ObjectStore {
 public:
  // Opening a store is read-only; directories appear on the first put so
  // that report/inspect style consumers never touch the filesystem.
  explicit ObjectStore(std::filesystem::path root) : root_(std::move(root)) {}

  const std::filesystem::path& root() const { return root_; }

  void put_atomic(const std::string& key, const std::string& bytes) {
    const auto target = resolve(key);
    std::error_code ec;
    std::filesystem::create_directories(root_ / kTempDir, ec);
    if (ec) throw IoError("cannot create store root: " + root_.string());
    std::filesystem::create_directories(target.parent_path(), ec);
    if (ec) throw IoError("cannot create prefix directory for: " + key);

    const auto temp = root_ / kTempDir / unique_temp_name();
    {
      std::ofstream out(temp, std::ios::binary);
      if (!out) throw IoError("cannot open temp file for: " + key);
      out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
      out.flush();
      if (!out) throw IoError("short write for: " + key);
    }
    std::filesystem::create_hard_link(temp, target, ec);
    std::filesystem::remove(temp);
    if (ec) {
      if (std::filesystem::exists(target))
        throw DuplicateKey("key already written: " + key);
      throw IoError("cannot publish key: " + key);
    }
  }

  std::string get(const std::string& key) const {
    const auto target = resolve(key);
    std::ifstream in(target, std::ios::binary);
    if (!in) throw MissingKey("no such key: " + key);
    std::ostringstream buf;
    buf << in.rdbuf();
    return std::move(buf).str();
  }

  bool exists(const std::string& key) const {
    return std::filesystem::exists(resolve(key));
  }

  // Keys under `prefix`, sorted. Prefix matching is on the raw key string,
  // so "raw/" and "raw/node-" both work.
  std::vector<std::string> list(const std::string& prefix) const {
    std::vector<std::string> keys;
    std::error_code ec;
    for (auto it = std::filesystem::recursive_directory_iterator(root_, ec);
         it != std::filesystem::recursive_directory_iterator();
         it.increment(ec)) {
      if (ec) break;
      if (it->path().filename().string().front() == '.') {
        if (it->is_directory()) it.disable_recursion_pending();
        continue;
      }
      if (!it->is_regular_file()) continue;
      const std::string key =
          std::filesystem::relative(it->path(), root_).generic_string();
      if (key.compare(0, prefix.size(), prefix) == 0) keys.push_back(key);
    }
    std::sort(keys.begin(), keys.end());
    return keys;
  }

  bool empty() const { return list("").empty(); }

 private:
  static constexpr const char* kTempDir = ".tmp";

  std::filesystem::path root_;

  std::filesystem::path resolve(const std::string& key) const {
    if (key.empty() || key.front() == '/' || key.back() == '/')
      throw InvalidValue("store key must be a relative path: '" + key + "'");
    std::istringstream parts(key);
    std::string part;
    while (std::getline(parts, part, '/'))
      if (part.empty() || part == ".." || part.front() == '.')
        throw InvalidValue("store key component not allowed: '" + key + "'");
    return root_ / key;
  }

  static std::string unique_temp_name() {
    static std::atomic<std::uint64_t> counter{0};
    const auto tid =
        std::hash<std::thread::id>{}(std::this_thread::get_id()) & 0xFFFF;
    return "put-" + std::to_string(tid) + "-" +
           std::to_string(counter.fetch_add(1));
  }
};

// Blob-count gate between pipelines: fires once list(prefix) holds
// expected_node_count keys.
struct PipelineTrigger {
  std::string prefix;
  int expected_node_count = 1;
};

// Polls every poll_interval until the trigger condition holds; Timeout after
// the ceiling.
inline void await_trigger(
    const PipelineTrigger& trigger, const ObjectStore& store,
    std::chrono::milliseconds ceiling = std::chrono::milliseconds(60'000),
    std::chrono::milliseconds poll_interval = std::chrono::milliseconds(10)) {
  const auto deadline = std::chrono::steady_clock::now() + ceiling;
  while (true) {
    const auto n = store.list(trigger.prefix).size();
    if (n >= static_cast<std::size_t>(trigger.expected_node_count)) return;
    if (std::chrono::steady_clock::now() >= deadline)
      throw Timeout("trigger on '" + trigger.prefix + "' saw " +
                    std::to_string(n) + "/" +
                    std::to_string(trigger.expected_node_count) +
                    " blobs before the ceiling");
    std::this_thread::sleep_for(poll_interval);
  }
}

}  // namespace autoqml
