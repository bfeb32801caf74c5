#include "gammafield/cache.hpp"

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include "gammafield/report.hpp"

namespace gammafield {

namespace fs = std::filesystem;

AnalysisCache::AnalysisCache(fs::path dir) : dir_(std::move(dir)) {}

std::string AnalysisCache::key(const IntPoly& f) {
  return "schema=" + std::to_string(kSchemaVersion) + ";coeffs=" + f.to_coeff_list();
}

fs::path AnalysisCache::entry_path(const IntPoly& f) const {
  char name[32];
  std::snprintf(name, sizeof name, "%016llx.json", static_cast<unsigned long long>(fnv1a(key(f))));
  return *dir_ / name;
}

AnalysisCache::Lookup AnalysisCache::load(const IntPoly& f) const {
  Lookup out;
  if (!dir_) return out;
  const fs::path path = entry_path(f);
  std::error_code ec;
  if (!fs::exists(path, ec)) return out;
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  auto entry = nlohmann::json::parse(buf.str(), nullptr, false);
  if (entry.is_discarded() || !entry.is_object() || !entry.contains("key") || !entry.contains("analysis")) {
    out.status = Status::corrupt;
    return out;
  }
  // Hash collision or an entry from another schema version: an ordinary miss.
  if (entry["key"] != key(f)) return out;
  out.status = Status::hit;
  out.document = std::move(entry["analysis"]);
  return out;
}

bool AnalysisCache::store(const IntPoly& f, const nlohmann::json& document) const {
  if (!dir_) return false;
  std::error_code ec;
  fs::create_directories(*dir_, ec);
  if (ec) return false;
  static std::atomic<unsigned long> counter{0};
  const fs::path path = entry_path(f);
  std::ostringstream tmp_name;
  tmp_name << path.filename().string() << ".tmp." << std::hash<std::thread::id>{}(std::this_thread::get_id()) << "."
           << counter++;
  const fs::path tmp = *dir_ / tmp_name.str();
  {
    std::ofstream out(tmp);
    if (!out) return false;
    out << nlohmann::json{{"key", key(f)}, {"analysis", document}}.dump();
    if (!out) return false;
  }
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    return false;
  }
  return true;
}

std::optional<fs::path> default_cache_dir() {
  if (const char* env = std::getenv("GAMMAFIELD_CACHE_DIR"); env && *env) return fs::path(env);
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return fs::path(xdg) / "gammafield";
  if (const char* home = std::getenv("HOME"); home && *home) return fs::path(home) / ".cache" / "gammafield";
  return std::nullopt;
}

}  // namespace gammafield
