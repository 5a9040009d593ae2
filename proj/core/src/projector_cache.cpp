#include "pw/projector_cache.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <atomic>
#include <bit>
#include <cstring>
#include <fstream>
#include <iterator>
#include <stdexcept>
#include <vector>

#include <boost/crc.hpp>

namespace pw {

namespace {

constexpr char kMagic[5] = {'Y', 'P', 'R', 'J', '1'};

static_assert(std::endian::native == std::endian::little, "cache format assumes a little-endian host");

class ByteWriter {
 public:
  void raw(const void* p, std::size_t n) {
    const auto* b = static_cast<const std::byte*>(p);
    buf_.insert(buf_.end(), b, b + n);
  }
  void u8(std::uint8_t v) { raw(&v, 1); }
  void u32(std::uint32_t v) { raw(&v, 4); }
  void u64(std::uint64_t v) { raw(&v, 8); }
  void f64(double v) { raw(&v, 8); }
  std::vector<std::byte>& bytes() { return buf_; }

 private:
  std::vector<std::byte> buf_;
};

class ByteReader {
 public:
  explicit ByteReader(std::span<const std::byte> data) : data_(data) {}
  void raw(void* p, std::size_t n) {
    if (pos_ + n > data_.size()) throw std::runtime_error("projector cache: truncated file");
    std::memcpy(p, data_.data() + pos_, n);
    pos_ += n;
  }
  std::uint8_t u8() { std::uint8_t v; raw(&v, 1); return v; }
  std::uint32_t u32() { std::uint32_t v; raw(&v, 4); return v; }
  double f64() { double v; raw(&v, 8); return v; }
  std::size_t pos() const { return pos_; }

 private:
  std::span<const std::byte> data_;
  std::size_t pos_ = 0;
};

// flock() on a sidecar file; released on destruction.
class FileLock {
 public:
  explicit FileLock(const std::filesystem::path& path) {
    fd_ = ::open(path.c_str(), O_RDWR | O_CREAT, 0644);
    if (fd_ < 0) throw std::runtime_error("cannot open lock file " + path.string());
    if (::flock(fd_, LOCK_EX) != 0) {
      ::close(fd_);
      throw std::runtime_error("cannot lock " + path.string());
    }
  }
  ~FileLock() {
    ::flock(fd_, LOCK_UN);
    ::close(fd_);
  }
  FileLock(const FileLock&) = delete;
  FileLock& operator=(const FileLock&) = delete;

 private:
  int fd_ = -1;
};

}  // namespace

std::string to_string(CacheStatus s) {
  switch (s) {
    case CacheStatus::Disabled: return "disabled";
    case CacheStatus::Hit: return "hit";
    case CacheStatus::Miss: return "miss";
    case CacheStatus::Corrupt: return "corrupt";
  }
  return "unknown";
}

std::uint64_t crc64(std::span<const std::byte> bytes) {
  boost::crc_optimal<64, 0x42F0E1EBA9EA3693ULL, ~0ULL, ~0ULL, true, true> crc;
  crc.process_bytes(bytes.data(), bytes.size());
  return crc.checksum();
}

std::filesystem::path projector_cache_path(const std::filesystem::path& dir, int d, int n) {
  return dir / ("proj_d" + std::to_string(d) + "_n" + std::to_string(n) + ".bin");
}

void write_projector_file(const std::filesystem::path& file, const ProjectorSet& set) {
  ByteWriter w;
  w.raw(kMagic, sizeof kMagic);
  const auto all = enumerate_partitions(set.n);
  w.u32(static_cast<std::uint32_t>(set.d));
  w.u32(static_cast<std::uint32_t>(set.n));
  w.u32(static_cast<std::uint32_t>(all.size()));
  for (const auto& lambda : all) {
    w.u32(static_cast<std::uint32_t>(lambda.length()));
    for (int p : lambda.parts()) w.u32(static_cast<std::uint32_t>(p));
    w.u8(lambda.length() > set.d ? 1 : 0);
  }
  for (const auto& lambda : all) {
    const DenseOperator* op = set.find(lambda);
    if (!op) continue;
    const auto& m = op->matrix();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      for (Eigen::Index c = 0; c < m.cols(); ++c) {
        w.f64(m(r, c).real());
        w.f64(m(r, c).imag());
      }
    }
  }
  w.u64(crc64(w.bytes()));

  if (file.has_parent_path()) std::filesystem::create_directories(file.parent_path());
  FileLock lock(file.string() + ".lock");
  static std::atomic<unsigned> counter{0};
  const auto tmp = std::filesystem::path(file.string() + ".tmp." + std::to_string(::getpid()) + "." +
                                         std::to_string(counter++));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out.write(reinterpret_cast<const char*>(w.bytes().data()),
              static_cast<std::streamsize>(w.bytes().size()));
    if (!out) throw std::runtime_error("short write to " + tmp.string());
  }
  std::filesystem::rename(tmp, file);
}

ProjectorSet read_projector_file(const std::filesystem::path& file, int d, int n) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + file.string());
  std::vector<char> raw((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  std::span<const std::byte> data(reinterpret_cast<const std::byte*>(raw.data()), raw.size());
  if (data.size() < sizeof kMagic + 8) throw std::runtime_error("projector cache: truncated file");

  std::uint64_t stored;
  std::memcpy(&stored, data.data() + data.size() - 8, 8);
  if (stored != crc64(data.first(data.size() - 8)))
    throw std::runtime_error("projector cache: checksum mismatch in " + file.string());

  ByteReader r(data.first(data.size() - 8));
  char magic[5];
  r.raw(magic, 5);
  if (std::memcmp(magic, kMagic, 5) != 0) throw std::runtime_error("projector cache: bad magic");
  const auto fd = static_cast<int>(r.u32());
  const auto fn = static_cast<int>(r.u32());
  const auto count = r.u32();
  if (fd != d || fn != n) throw std::runtime_error("projector cache: header does not match (d, n)");
  const auto expected = enumerate_partitions(n);
  if (count != expected.size()) throw std::runtime_error("projector cache: partition count mismatch");
  std::vector<bool> zero(count);
  for (std::uint32_t i = 0; i < count; ++i) {
    const auto len = r.u32();
    if (len > static_cast<std::uint32_t>(n)) throw std::runtime_error("projector cache: bad partition");
    std::vector<int> parts(len);
    for (auto& p : parts) p = static_cast<int>(r.u32());
    if (Partition(parts) != expected[i]) throw std::runtime_error("projector cache: partition order mismatch");
    zero[i] = r.u8() != 0;
    if (zero[i] != (expected[i].length() > d)) throw std::runtime_error("projector cache: bad zero flag");
  }
  ProjectorSet set;
  set.d = d;
  set.n = n;
  const auto dim = checked_dimension(d, n);
  for (std::uint32_t i = 0; i < count; ++i) {
    if (zero[i]) continue;
    MatrixXc m(dim, dim);
    for (Eigen::Index row = 0; row < dim; ++row) {
      for (Eigen::Index col = 0; col < dim; ++col) {
        const double re = r.f64();
        const double im = r.f64();
        m(row, col) = Complex(re, im);
      }
    }
    set.partitions.push_back(expected[i]);
    set.projectors.emplace_back(d, n, std::move(m));
  }
  if (r.pos() != data.size() - 8) throw std::runtime_error("projector cache: trailing bytes");
  return set;
}

CachedProjectors all_projectors(int d, int n, const CachePolicy& policy) {
  checked_dimension(d, n);
  if (policy.mode == CacheMode::Disabled)
    return {build_projector_set(d, n), CacheStatus::Disabled, {}};

  const auto file = projector_cache_path(policy.dir, d, n);
  CacheStatus status = CacheStatus::Miss;
  if (policy.mode == CacheMode::ReadWrite && std::filesystem::exists(file)) {
    try {
      return {read_projector_file(file, d, n), CacheStatus::Hit, file};
    } catch (const std::runtime_error&) {
      status = CacheStatus::Corrupt;
    }
  }
  ProjectorSet set = build_projector_set(d, n);
  write_projector_file(file, set);
  return {std::move(set), status, file};
}

}  // namespace pw
