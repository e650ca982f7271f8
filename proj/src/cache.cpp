#include "conglab/cache.hpp"

#include <atomic>
#include <fstream>

#include <json.hpp>

namespace conglab {

namespace {
std::filesystem::path entry_path(const std::filesystem::path& root,
                                 const std::string& family, uint64_t p, unsigned e) {
  return root / family / (std::to_string(p) + "_" + std::to_string(e) + ".json");
}
} // namespace

std::optional<std::vector<uint64_t>> ResidueCache::load(const std::string& family,
                                                        uint64_t p, unsigned e,
                                                        size_t expected_count) const {
  std::error_code ec;
  std::filesystem::path path = entry_path(root_, family, p, e);
  if (!std::filesystem::exists(path, ec) || ec) return std::nullopt;
  try {
    std::ifstream in(path);
    if (!in) return std::nullopt;
    nlohmann::json doc = nlohmann::json::parse(in, nullptr, false);
    if (doc.is_discarded()) return std::nullopt;
    if (doc.value("schema", -1) != kSchemaVersion) return std::nullopt;
    if (doc.value("family", std::string()) != family) return std::nullopt;
    if (doc.value("p", uint64_t(0)) != p || doc.value("e", 0u) != e) return std::nullopt;
    const auto& vals = doc.at("values");
    if (!vals.is_array() || doc.value("count", size_t(0)) != vals.size()) return std::nullopt;
    if (vals.size() != expected_count) return std::nullopt;
    std::vector<uint64_t> out;
    out.reserve(vals.size());
    for (const auto& v : vals) out.push_back(std::stoull(v.get<std::string>()));
    return out;
  } catch (...) {
    return std::nullopt;
  }
}

void ResidueCache::store(const std::string& family, uint64_t p, unsigned e,
                         const std::vector<uint64_t>& values) const {
  try {
    std::filesystem::path path = entry_path(root_, family, p, e);
    std::filesystem::create_directories(path.parent_path());
    nlohmann::ordered_json doc;
    doc["schema"] = kSchemaVersion;
    doc["family"] = family;
    doc["p"] = p;
    doc["e"] = e;
    doc["count"] = values.size();
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (uint64_t v : values) arr.push_back(std::to_string(v));
    doc["values"] = std::move(arr);

    static std::atomic<unsigned> counter{0};
    std::filesystem::path tmp =
        path.parent_path() / (path.filename().string() + ".tmp" +
                              std::to_string(counter.fetch_add(1)));
    {
      std::ofstream out(tmp);
      if (!out) return;
      out << doc.dump(2) << '\n';
    }
    std::filesystem::rename(tmp, path);
  } catch (...) {
    // cache writes are best-effort; computation already succeeded
  }
}

} // namespace conglab
