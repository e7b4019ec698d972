#include "harness/output.hpp"

#include <cstdio>
#include <ctime>
#include <fstream>
#include <stdexcept>

namespace harness {

std::string fmt12(double x) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hash_hex(std::uint64_t h) {
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

void CsvBuilder::comment(const std::string& text) {
  buf_ += "# ";
  buf_ += text;
  buf_ += '\n';
}

void CsvBuilder::line(const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) buf_ += ',';
    buf_ += cells[i];
  }
  buf_ += '\n';
}

void CsvBuilder::header(const std::vector<std::string>& cols) { line(cols); }
void CsvBuilder::row(const std::vector<std::string>& cells) { line(cells); }

void emit_file(const std::filesystem::path& out_dir, const std::string& filename,
               const std::string& content, Manifest& manifest) {
  std::filesystem::create_directories(out_dir);
  const auto path = out_dir / filename;
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open output file: " + path.string());
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw std::runtime_error("failed writing output file: " + path.string());
  manifest.outputs.push_back({filename, fnv1a64(content)});
}

void write_manifest(const std::filesystem::path& out_dir, const Manifest& manifest) {
  std::string echo;
  for (const auto& line : manifest.config_lines) {
    echo += line;
    echo += '\n';
  }

  char stamp[64] = "unknown";
  const std::time_t now = std::time(nullptr);
  std::tm tm_utc{};
  if (gmtime_r(&now, &tm_utc) != nullptr)
    std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", &tm_utc);

  std::string text;
  text += "format-version = expvote/1\n";
  text += "command = " + manifest.command + "\n";
  text += "generated-utc = " + std::string(stamp) + "\n";
  char secs[32];
  std::snprintf(secs, sizeof secs, "%.3f", manifest.elapsed_seconds);
  text += "elapsed-seconds = " + std::string(secs) + "\n";
  text += "config-hash = fnv1a64:" + hash_hex(fnv1a64(echo)) + "\n";
  text += "[config]\n";
  text += echo;
  text += "[outputs]\n";
  for (const auto& rec : manifest.outputs)
    text += rec.filename + " = fnv1a64:" + hash_hex(rec.hash) + "\n";

  std::filesystem::create_directories(out_dir);
  const auto path = out_dir / "manifest.txt";
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open manifest: " + path.string());
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
}

}  // namespace harness
