#include "autoqml/store.hpp"

#include <gtest/gtest.h>

#include <atomic>
#include <chrono>
#include <filesystem>
#include <string>
#include <thread>
#include <vector>

namespace autoqml {
namespace {

namespace fs = std::filesystem;

class StoreTest : public ::testing::Test {
 protected:
  void SetUp() override {
    root_ = fs::temp_directory_path() /
            ("autoqml-store-" +
             std::to_string(
                 std::chrono::steady_clock::now().time_since_epoch().count()));
  }
  void TearDown() override {
    std::error_code ec;
    fs::remove_all(root_, ec);
  }
  fs::path root_;
};

TEST_F(StoreTest, PutGetRoundtrip) {
  ObjectStore store(root_);
  std::string bytes = "line1\nline2\r\n";
  bytes.push_back('\0');
  bytes.push_back('\x7f');
  const std::string key = "raw/node-0.json";
  store.put_atomic(key, bytes);
  EXPECT_EQ(store.get(key), bytes);
  EXPECT_TRUE(store.exists(key));
}

TEST_F(StoreTest, WriteOnceDisciplineRejectsDuplicates) {
  ObjectStore store(root_);
  store.put_atomic("config/grid.json", "{}");
  EXPECT_THROW(store.put_atomic("config/grid.json", "{}"), DuplicateKey);
  EXPECT_EQ(store.get("config/grid.json"), "{}");
}

TEST_F(StoreTest, GetMissingKeyThrows) {
  ObjectStore store(root_);
  EXPECT_THROW(store.get("processed/aggregate.csv"), MissingKey);
}

TEST_F(StoreTest, ListFiltersByPrefixAndSorts) {
  ObjectStore store(root_);
  store.put_atomic("raw/node-2.json", "b");
  store.put_atomic("raw/node-0.json", "a");
  store.put_atomic("raw/node-10.json", "c");
  store.put_atomic("processed/aggregate.csv", "d");

  const auto raw = store.list("raw/");
  ASSERT_EQ(raw.size(), 3u);
  EXPECT_EQ(raw[0], "raw/node-0.json");
  EXPECT_EQ(raw[1], "raw/node-10.json");
  EXPECT_EQ(raw[2], "raw/node-2.json");

  EXPECT_EQ(store.list("").size(), 4u);
  EXPECT_TRUE(store.list("models/").empty());
}

TEST_F(StoreTest, EmptyReflectsContents) {
  ObjectStore store(root_);
  EXPECT_TRUE(store.empty());
  store.put_atomic("config/c.json", "{}");
  EXPECT_FALSE(store.empty());
}

TEST_F(StoreTest, ReopeningSeesExistingKeys) {
  {
    ObjectStore store(root_);
    store.put_atomic("models/best.qmodel", "weights");
  }
  ObjectStore reopened(root_);
  EXPECT_EQ(reopened.get("models/best.qmodel"), "weights");
}

TEST_F(StoreTest, HostileKeysRejected) {
  ObjectStore store(root_);
  EXPECT_THROW(store.put_atomic("", "x"), InvalidValue);
  EXPECT_THROW(store.put_atomic("/etc/passwd", "x"), InvalidValue);
  EXPECT_THROW(store.put_atomic("raw/../escape", "x"), InvalidValue);
  EXPECT_THROW(store.put_atomic("raw/", "x"), InvalidValue);
  EXPECT_THROW(store.put_atomic(".tmp/sneaky", "x"), InvalidValue);
  EXPECT_THROW(store.get("raw/../escape"), InvalidValue);
}

TEST_F(StoreTest, TempFilesNeverAppearInListings) {
  ObjectStore store(root_);
  store.put_atomic("raw/node-0.json", std::string(1 << 16, 'x'));
  for (const auto& key : store.list(""))
    EXPECT_EQ(key.find(".tmp"), std::string::npos) << key;
}

TEST_F(StoreTest, ConcurrentReaderNeverSeesPartialBlob) {
  ObjectStore store(root_);
  const std::string payload = [] {
    std::string s;
    s.reserve(1 << 20);
    while (s.size() < (1 << 20)) s += "0123456789abcdef";
    return s;
  }();

  std::atomic<bool> done{false};
  std::atomic<int> violations{0};
  std::thread reader([&] {
    while (!done.load()) {
      for (const auto& key : store.list("raw/")) {
        const auto bytes = store.get(key);
        if (bytes.size() != payload.size() || bytes != payload)
          violations.fetch_add(1);
      }
    }
  });

  std::vector<std::thread> writers;
  for (int w = 0; w < 4; ++w)
    writers.emplace_back([&, w] {
      for (int i = 0; i < 8; ++i)
        store.put_atomic(
            "raw/node-" + std::to_string(w) + "-" + std::to_string(i) + ".json",
            payload);
    });
  for (auto& t : writers) t.join();
  done.store(true);
  reader.join();

  EXPECT_EQ(violations.load(), 0);
  EXPECT_EQ(store.list("raw/").size(), 32u);
}

TEST_F(StoreTest, RacingWritersOnOneKeyProduceExactlyOneWinner) {
  ObjectStore store(root_);
  std::atomic<int> successes{0}, duplicates{0};
  std::vector<std::thread> threads;
  for (int t = 0; t < 8; ++t)
    threads.emplace_back([&, t] {
      try {
        store.put_atomic("processed/selection.json",
                         std::string(1 << 16, static_cast<char>('a' + t)));
        successes.fetch_add(1);
      } catch (const DuplicateKey&) {
        duplicates.fetch_add(1);
      }
    });
  for (auto& t : threads) t.join();

  EXPECT_EQ(successes.load(), 1);
  EXPECT_EQ(duplicates.load(), 7);
  const auto bytes = store.get("processed/selection.json");
  ASSERT_EQ(bytes.size(), static_cast<std::size_t>(1 << 16));
  for (char c : bytes) EXPECT_EQ(c, bytes.front());
}

TEST_F(StoreTest, TriggerReturnsImmediatelyWhenSatisfied) {
  ObjectStore store(root_);
  store.put_atomic("raw/node-0.json", "[]");
  store.put_atomic("raw/node-1.json", "[]");
  await_trigger({"raw/", 2}, store, std::chrono::milliseconds(100));
}

TEST_F(StoreTest, TriggerWaitsForBlobsArrivingOneByOne) {
  ObjectStore store(root_);
  std::thread producer([&] {
    for (int i = 0; i < 3; ++i) {
      std::this_thread::sleep_for(std::chrono::milliseconds(30));
      store.put_atomic("raw/node-" + std::to_string(i) + ".json", "[]");
    }
  });
  await_trigger({"raw/", 3}, store, std::chrono::milliseconds(5'000));
  producer.join();
  EXPECT_EQ(store.list("raw/").size(), 3u);
}

TEST_F(StoreTest, TriggerTimesOutWhenBlobsNeverArrive) {
  ObjectStore store(root_);
  store.put_atomic("raw/node-0.json", "[]");
  EXPECT_THROW(
      await_trigger({"raw/", 2}, store, std::chrono::milliseconds(120),
                    std::chrono::milliseconds(5)),
      Timeout);
}

}  // namespace
}  // namespace autoqml
