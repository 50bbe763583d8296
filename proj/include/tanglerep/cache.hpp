#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tanglerep/linalg.hpp"

namespace tanglerep {

/// On-disk store for expensive closures, keyed by a canonical description
/// string and addressed by its hash. Entries are plain text carrying the
/// key and a payload checksum; a missing, mismatched or corrupt entry is
/// reported through a warning and treated as a miss, so callers recompute
/// and overwrite. Writes go to a temporary file and are renamed into place,
/// which keeps concurrent readers safe without locks.
class Cache {
public:
  /// An empty directory disables the cache: every load misses, stores are
  /// dropped.
  explicit Cache(std::string dir);

  /// Directory named by the TANGLEREP_CACHE_DIR environment variable, or
  /// empty when unset.
  static std::string default_dir();

  /// Canonical key for one algebra closure.
  static std::string algebra_key(long m, long n, const Field& field);

  bool enabled() const { return !dir_.empty(); }
  std::optional<AlgebraSpan> load_algebra(const std::string& key,
                                          const Field& field);
  void store_algebra(const std::string& key, const AlgebraSpan& algebra);

  long hits() const { return hits_; }
  long misses() const { return misses_; }
  /// Messages about entries that had to be discarded.
  const std::vector<std::string>& warnings() const { return warnings_; }

private:
  std::string path_for(const std::string& key) const;

  std::string dir_;
  long hits_ = 0;
  long misses_ = 0;
  std::vector<std::string> warnings_;
};

} // namespace tanglerep
