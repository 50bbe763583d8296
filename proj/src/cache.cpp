#include "tanglerep/cache.hpp"

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "tanglerep/errors.hpp"

namespace tanglerep {

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::string serialize_algebra(const AlgebraSpan& a) {
  std::ostringstream out;
  out << "d " << a.d << "\n";
  out << "count " << a.basis.size() << "\n";
  for (const Mat& m : a.basis) {
    out << "mat " << m.rows() << " " << m.cols() << " " << m.nnz() << "\n";
    for (long i = 0; i < m.rows(); ++i)
      for (const auto& [j, v] : m.row(i))
        out << i << " " << j << " " << v.str() << "\n";
  }
  return out.str();
}

AlgebraSpan parse_algebra(const std::string& payload, const Field& field) {
  std::istringstream in(payload);
  std::string tag;
  long d = 0;
  std::size_t count = 0;
  if (!(in >> tag >> d) || tag != "d" || d <= 0)
    throw usage_error("bad dimension line");
  if (!(in >> tag >> count) || tag != "count")
    throw usage_error("bad count line");
  AlgebraSpan out;
  out.d = d;
  out.span = Subspace(d * d, field);
  for (std::size_t k = 0; k < count; ++k) {
    long rows = 0, cols = 0, nnz = 0;
    if (!(in >> tag >> rows >> cols >> nnz) || tag != "mat" || rows != d ||
        cols != d || nnz < 0)
      throw usage_error("bad matrix header");
    Mat m(rows, cols, field);
    for (long e = 0; e < nnz; ++e) {
      long i = 0, j = 0;
      if (!(in >> i >> j) || i < 0 || i >= rows || j < 0 || j >= cols)
        throw usage_error("bad entry position");
      std::string text;
      std::getline(in, text);
      std::size_t at = text.find_first_not_of(' ');
      if (at == std::string::npos) throw usage_error("missing entry value");
      m.set(i, j, parse_scalar(field, text.substr(at)));
    }
    out.span.insert(m.flatten());
    out.basis.push_back(std::move(m));
  }
  if (in >> tag) throw usage_error("trailing content");
  return out;
}

} // namespace

Cache::Cache(std::string dir) : dir_(std::move(dir)) {}

std::string Cache::default_dir() {
  const char* env = std::getenv("TANGLEREP_CACHE_DIR");
  return env ? env : "";
}

std::string Cache::algebra_key(long m, long n, const Field& field) {
  return "algebra-closure m" + std::to_string(m) + " n" + std::to_string(n) +
         " field " + field->label();
}

std::string Cache::path_for(const std::string& key) const {
  return dir_ + "/alg-" + hex64(fnv1a(key)) + ".txt";
}

std::optional<AlgebraSpan> Cache::load_algebra(const std::string& key,
                                               const Field& field) {
  if (!enabled()) return std::nullopt;
  std::string path = path_for(key);
  std::ifstream in(path);
  if (!in) {
    ++misses_;
    return std::nullopt;
  }
  try {
    std::string header, stored_key, checksum_line;
    if (!std::getline(in, header) || header != "tanglerep-cache 1")
      throw usage_error("unknown format");
    if (!std::getline(in, stored_key) || stored_key != "key " + key)
      throw usage_error("key mismatch");
    if (!std::getline(in, checksum_line) ||
        checksum_line.rfind("checksum ", 0) != 0)
      throw usage_error("missing checksum");
    std::ostringstream rest;
    rest << in.rdbuf();
    std::string payload = rest.str();
    if (checksum_line.substr(9) != hex64(fnv1a(payload)))
      throw usage_error("checksum mismatch");
    AlgebraSpan out = parse_algebra(payload, field);
    ++hits_;
    return out;
  } catch (const std::exception& e) {
    warnings_.push_back("discarding cache entry " + path + " for \"" + key +
                        "\": " + e.what());
    ++misses_;
    return std::nullopt;
  }
}

void Cache::store_algebra(const std::string& key, const AlgebraSpan& algebra) {
  if (!enabled()) return;
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) {
    warnings_.push_back("cannot create cache directory " + dir_ + ": " +
                        ec.message());
    return;
  }
  std::string payload = serialize_algebra(algebra);
  std::string path = path_for(key);
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) {
      warnings_.push_back("cannot write cache file " + tmp);
      return;
    }
    out << "tanglerep-cache 1\n";
    out << "key " << key << "\n";
    out << "checksum " << hex64(fnv1a(payload)) << "\n";
    out << payload;
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec)
    warnings_.push_back("cannot move cache file into place: " + ec.message());
}

} // namespace tanglerep
