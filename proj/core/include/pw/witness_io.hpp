#pragma once

#include <filesystem>

#include <nlohmann/json.hpp>

#include "pw/witness.hpp"

namespace pw {

// { "n": int, "d": int, "coeffs": [ { "partition": [ints], "c": float } ], "shift": float? }
nlohmann::json witness_to_json(const Witness& w);
Witness witness_from_json(const nlohmann::json& j);

/// Throws std::runtime_error naming the path when it cannot be opened or parsed.
Witness load_witness(const std::filesystem::path& path);
void save_witness(const Witness& w, const std::filesystem::path& path);

nlohmann::json partition_to_json(const Partition& p);

}  // namespace pw
