#pragma once
#include "nh/hecke.hpp"

namespace nh {

// $NH_CACHE_DIR, or "" when unset (caching disabled).
std::string default_cache_dir();

// Stable content hash of a classification table (guards cached walks).
std::string table_hash(const FingerprintTable& table);

// Write via a temporary file and rename, so readers never see partial data.
void write_file_atomic(const std::string& path, const std::string& content);

void save_atlas(const std::string& path, const Atlas& atlas, const std::string& thash);
// False when the file is absent; throws StateError on malformed or
// incompatible content.
bool load_atlas(const std::string& path, Atlas& atlas, const std::string& expect_hash);

}  // namespace nh
