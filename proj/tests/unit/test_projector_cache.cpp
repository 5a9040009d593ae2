#include "pw/projector_cache.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <string_view>

using namespace pw;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("pw_cache_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                        "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

void expect_same(const ProjectorSet& a, const ProjectorSet& b) {
  ASSERT_EQ(a.partitions, b.partitions);
  ASSERT_EQ(a.projectors.size(), b.projectors.size());
  for (std::size_t i = 0; i < a.projectors.size(); ++i)
    EXPECT_EQ(max_abs_diff(a.projectors[i].matrix(), b.projectors[i].matrix()), 0.0);
}

}  // namespace

TEST(Crc64, StandardCheckValue) {
  constexpr std::string_view text = "123456789";
  const auto* bytes = reinterpret_cast<const std::byte*>(text.data());
  EXPECT_EQ(crc64({bytes, text.size()}), 0x995DC9BBDF1939FAULL);
}

TEST(ProjectorCache, MissThenHit) {
  TempDir tmp;
  const CachePolicy policy{CacheMode::ReadWrite, tmp.path};
  const auto first = all_projectors(2, 3, policy);
  EXPECT_EQ(first.status, CacheStatus::Miss);
  EXPECT_TRUE(fs::exists(first.file));
  EXPECT_EQ(first.file, projector_cache_path(tmp.path, 2, 3));
  EXPECT_EQ(first.file.filename(), "proj_d2_n3.bin");
  const auto second = all_projectors(2, 3, policy);
  EXPECT_EQ(second.status, CacheStatus::Hit);
  expect_same(first.set, second.set);
  expect_same(second.set, build_projector_set(2, 3));
}

TEST(ProjectorCache, HeaderLayout) {
  TempDir tmp;
  fs::create_directories(tmp.path);
  const auto file = tmp.path / "p.bin";
  write_projector_file(file, build_projector_set(2, 3));
  std::ifstream in(file, std::ios::binary);
  std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)), {});
  ASSERT_GE(bytes.size(), 17u);
  EXPECT_EQ(std::string(bytes.begin(), bytes.begin() + 5), "YPRJ1");
  auto u32 = [&](std::size_t at) { return bytes[at] | bytes[at + 1] << 8 | bytes[at + 2] << 16 | bytes[at + 3] << 24; };
  EXPECT_EQ(u32(5), 2u);
  EXPECT_EQ(u32(9), 3u);
  EXPECT_EQ(u32(13), 3u);  // (3), (2,1), (1,1,1)
  // header: 3 entries of (len, parts, zero flag); body: two 8x8 complex projectors; crc
  const std::size_t header = 17 + (4 + 4 + 1) + (4 + 8 + 1) + (4 + 12 + 1);
  EXPECT_EQ(bytes.size(), header + 2 * 64 * 16 + 8);
  EXPECT_EQ(bytes[header - 1], 1);  // (1,1,1) vanishes on qubits
}

TEST(ProjectorCache, CorruptFileIsRecomputed) {
  TempDir tmp;
  const CachePolicy policy{CacheMode::ReadWrite, tmp.path};
  const auto file = all_projectors(2, 3, policy).file;
  {
    std::fstream f(file, std::ios::in | std::ios::out | std::ios::binary);
    f.seekp(200);
    f.put('\x5a');
  }
  EXPECT_THROW(read_projector_file(file, 2, 3), std::runtime_error);
  const auto again = all_projectors(2, 3, policy);
  EXPECT_EQ(again.status, CacheStatus::Corrupt);
  expect_same(again.set, build_projector_set(2, 3));
  EXPECT_EQ(all_projectors(2, 3, policy).status, CacheStatus::Hit);
}

TEST(ProjectorCache, TruncatedAndMismatched) {
  TempDir tmp;
  const CachePolicy policy{CacheMode::ReadWrite, tmp.path};
  const auto file = all_projectors(2, 3, policy).file;
  EXPECT_THROW(read_projector_file(file, 3, 3), std::runtime_error);
  fs::resize_file(file, fs::file_size(file) / 2);
  EXPECT_THROW(read_projector_file(file, 2, 3), std::runtime_error);
}

TEST(ProjectorCache, RefreshAndDisabled) {
  TempDir tmp;
  EXPECT_EQ(all_projectors(2, 2, {CacheMode::Disabled, tmp.path}).status, CacheStatus::Disabled);
  EXPECT_FALSE(fs::exists(projector_cache_path(tmp.path, 2, 2)));
  all_projectors(2, 2, {CacheMode::ReadWrite, tmp.path});
  const auto refreshed = all_projectors(2, 2, {CacheMode::Refresh, tmp.path});
  EXPECT_EQ(refreshed.status, CacheStatus::Miss);
  EXPECT_EQ(to_string(CacheStatus::Hit), "hit");
}
