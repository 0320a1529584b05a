#include "thompson/ball_cache.hpp"

#include <zlib.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>

#include "thompson/errors.hpp"
#include "thompson/version.hpp"

#include "json.hpp"

namespace thompson::ball_cache {

namespace {

using nlohmann::json;

std::string gz_read_line(gzFile f) {
  std::string line;
  char buf[4096];
  while (gzgets(f, buf, sizeof(buf)) != nullptr) {
    line += buf;
    if (!line.empty() && line.back() == '\n') {
      line.pop_back();
      return line;
    }
  }
  return line;
}

}  // namespace

std::string engine_hash() {
  // FNV-1a of the engine version string.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const char* p = kEngineVersion; *p; ++p) {
    h ^= static_cast<unsigned char>(*p);
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string file_name(int radius) {
  return "ball_r" + std::to_string(radius) + "_" + engine_hash() + ".txt.gz";
}

std::optional<Ball> load(const std::string& dir, int radius) {
  std::filesystem::path path = std::filesystem::path(dir) / file_name(radius);
  gzFile f = gzopen(path.string().c_str(), "rb");
  if (!f) return std::nullopt;
  std::optional<Ball> result;
  try {
    json header = json::parse(gz_read_line(f));
    if (header.value("format", "") != "ball-cache-v1" ||
        header.value("generators", "") != "x0,x1" ||
        header.value("radius", -1) != radius ||
        header.value("engine_hash", "") != engine_hash())
      throw StructuralError("cache header mismatch");
    std::size_t count = header.at("count").get<std::size_t>();
    Ball b;
    b.radius = radius;
    b.layers.assign(radius + 1, {});
    for (std::size_t i = 0; i < count; ++i) {
      std::string line = gz_read_line(f);
      std::size_t tab = line.find('\t');
      if (tab == std::string::npos)
        throw StructuralError("cache line missing depth");
      int depth = std::stoi(line.substr(tab + 1));
      if (depth < 0 || depth > radius)
        throw StructuralError("cache depth out of range");
      ForestDiagram v = parse_diagram(line.substr(0, tab));
      b.layers[depth].push_back(v);
      b.depth.emplace(line.substr(0, tab), depth);
    }
    if (b.size() != count) throw StructuralError("cache count mismatch");
    result = std::move(b);
  } catch (const std::exception&) {
    result = std::nullopt;  // unreadable caches are recomputed
  }
  gzclose(f);
  return result;
}

void save(const std::string& dir, const Ball& ball) {
  std::filesystem::create_directories(dir);
  std::filesystem::path path = std::filesystem::path(dir) / file_name(ball.radius);
  gzFile f = gzopen(path.string().c_str(), "wb9");
  if (!f) throw std::runtime_error("cannot open cache file for writing");
  json header = {{"format", "ball-cache-v1"},
                 {"generators", "x0,x1"},
                 {"radius", ball.radius},
                 {"count", ball.size()},
                 {"engine_hash", engine_hash()}};
  std::string line = header.dump() + "\n";
  gzwrite(f, line.data(), static_cast<unsigned>(line.size()));
  for (int d = 0; d < static_cast<int>(ball.layers.size()); ++d) {
    for (const ForestDiagram& v : ball.layers[d]) {
      line = format_diagram(v) + "\t" + std::to_string(d) + "\n";
      gzwrite(f, line.data(), static_cast<unsigned>(line.size()));
    }
  }
  gzclose(f);
}

Ball load_or_compute(const std::string& dir, int radius,
                     const SearchLimits& limits) {
  if (!dir.empty()) {
    if (std::optional<Ball> cached = load(dir, radius)) return std::move(*cached);
  }
  Ball b = ball(radius, limits);
  if (!dir.empty()) save(dir, b);
  return b;
}

}  // namespace thompson::ball_cache
