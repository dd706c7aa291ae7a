#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace rkit {

/// SHA-256 of a byte buffer, lowercase hex.
std::string sha256_hex(const void* data, size_t len);
std::string sha256_hex(const std::string& s);

/// SHA-256 of a file's contents. Throws IoError if unreadable.
std::string sha256_file(const std::filesystem::path& p);

/// Incremental SHA-256 for digesting parameter groups without concatenation.
class Sha256 {
 public:
  Sha256();
  ~Sha256();
  Sha256(const Sha256&) = delete;
  Sha256& operator=(const Sha256&) = delete;
  void update(const void* data, size_t len);
  void update(const std::string& s) { update(s.data(), s.size()); }
  std::string hex();  // finalizes; object unusable afterwards

 private:
  void* ctx_;
};

std::string read_text_file(const std::filesystem::path& p);
void write_text_file(const std::filesystem::path& p, const std::string& content);

/// Sorted list of regular files in a directory with one of the given
/// extensions (e.g. {".png"}). Deterministic order.
std::vector<std::filesystem::path> list_files(const std::filesystem::path& dir,
                                              const std::vector<std::string>& exts);

std::string lowercase(std::string s);
std::vector<std::string> split(const std::string& s, char sep);
std::string trim(const std::string& s);

/// Fixed-format double for reports: shortest round-trip representation.
std::string format_double(double v);

}  // namespace rkit
