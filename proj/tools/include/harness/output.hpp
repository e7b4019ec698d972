#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace harness {

// All numbers serialize with 12 significant digits; the byte-for-byte
// determinism contract is stated at that precision.
std::string fmt12(double x);

std::uint64_t fnv1a64(std::string_view data);
std::string hash_hex(std::uint64_t h);

// Accumulates CSV text in memory so the bytes can be hashed and written
// atomically.
class CsvBuilder {
 public:
  void comment(const std::string& text);  // "# text"
  void header(const std::vector<std::string>& cols);
  void row(const std::vector<std::string>& cells);
  const std::string& str() const { return buf_; }

 private:
  void line(const std::vector<std::string>& cells);
  std::string buf_;
};

struct OutputRecord {
  std::string filename;
  std::uint64_t hash;
};

// Run manifest: what was run, with which resolved configuration, and which
// output files (with content hashes) the run produced.
struct Manifest {
  std::string command;
  std::vector<std::string> config_lines;
  std::vector<OutputRecord> outputs;
  double elapsed_seconds = 0.0;
};

// Writes `content` to out_dir/filename and records it in the manifest.
void emit_file(const std::filesystem::path& out_dir, const std::string& filename,
               const std::string& content, Manifest& manifest);

// Serializes the manifest (format-version, command, wall clock, config hash,
// [config] echo, [outputs] file = fnv1a64:hex) into out_dir/manifest.txt.
void write_manifest(const std::filesystem::path& out_dir, const Manifest& manifest);

}  // namespace harness
