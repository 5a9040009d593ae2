#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>

#include "pw/projectors.hpp"

namespace pw {

// On-disk projector cache, one file per (d, n) named proj_d{d}_n{n}.bin.
//
// Layout (all integers little-endian):
//   "YPRJ1"                                  5 bytes
//   u32 d, u32 n, u32 count                  count = number of lambda |- n
//   count x { u32 len, u32 parts[len], u8 zero }   canonical order; zero = 1 when length > d
//   body: per non-zero lambda, (d^n)^2 x { f64 re, f64 im }, row-major
//   u64 CRC-64/XZ of every preceding byte

enum class CacheMode { Disabled, ReadWrite, Refresh };
enum class CacheStatus { Disabled, Hit, Miss, Corrupt };

struct CachePolicy {
  CacheMode mode = CacheMode::ReadWrite;
  std::filesystem::path dir = "cache";
};

struct CachedProjectors {
  ProjectorSet set;
  CacheStatus status = CacheStatus::Disabled;
  std::filesystem::path file;
};

std::string to_string(CacheStatus s);

std::uint64_t crc64(std::span<const std::byte> bytes);

std::filesystem::path projector_cache_path(const std::filesystem::path& dir, int d, int n);

/// Serializes to a temporary file under an exclusive lock, then renames into place.
void write_projector_file(const std::filesystem::path& file, const ProjectorSet& set);

/// Throws std::runtime_error on a bad magic, header mismatch, truncation, or checksum failure.
ProjectorSet read_projector_file(const std::filesystem::path& file, int d, int n);

/// Projectors served from the cache when valid; recomputed and rewritten otherwise.
CachedProjectors all_projectors(int d, int n, const CachePolicy& policy = {});

}  // namespace pw
