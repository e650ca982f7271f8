#pragma once

// On-disk residue cache: <root>/<family>/<p>_<e>.json holding decimal-string
// values plus a schema version.  Strictly an optimization — a load that fails
// validation (wrong family/p/e/count/schema, unparseable file) returns
// nothing and the caller recomputes.  Writes go through a temp file in the
// same directory followed by a rename, so concurrent writers at worst waste
// work, never corrupt.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace conglab {

class ResidueCache {
public:
  explicit ResidueCache(std::filesystem::path root) : root_(std::move(root)) {}

  std::optional<std::vector<uint64_t>> load(const std::string& family, uint64_t p,
                                            unsigned e, size_t expected_count) const;
  void store(const std::string& family, uint64_t p, unsigned e,
             const std::vector<uint64_t>& values) const;

  const std::filesystem::path& root() const { return root_; }

  static constexpr int kSchemaVersion = 1;

private:
  std::filesystem::path root_;
};

} // namespace conglab
