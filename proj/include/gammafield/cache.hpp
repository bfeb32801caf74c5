#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "json.hpp"

#include "gammafield/poly.hpp"

namespace gammafield {

/// On-disk store of analysis documents keyed by (schema version, coefficients).
/// Writes go through a temporary file and a rename, so concurrent readers never
/// observe a partial entry.
class AnalysisCache {
 public:
  enum class Status { miss, hit, corrupt };

  struct Lookup {
    Status status = Status::miss;
    nlohmann::json document;
  };

  /// Disabled cache: every lookup misses and stores are dropped.
  AnalysisCache() = default;
  explicit AnalysisCache(std::filesystem::path dir);

  bool enabled() const { return dir_.has_value(); }
  const std::optional<std::filesystem::path>& dir() const { return dir_; }

  static std::string key(const IntPoly& f);
  std::filesystem::path entry_path(const IntPoly& f) const;

  Lookup load(const IntPoly& f) const;
  /// Returns false (and leaves the cache untouched) when the directory is not writable.
  bool store(const IntPoly& f, const nlohmann::json& document) const;

 private:
  std::optional<std::filesystem::path> dir_;
};

/// --cache-dir, else $GAMMAFIELD_CACHE_DIR, else $XDG_CACHE_HOME/gammafield or ~/.cache/gammafield.
std::optional<std::filesystem::path> default_cache_dir();

}  // namespace gammafield
