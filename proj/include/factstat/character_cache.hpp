#pragma once

#include <factstat/json_io.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

namespace factstat {

/// Directory named by FACTSTAT_CACHE_DIR, if set and nonempty.
inline std::optional<std::filesystem::path> cache_dir_from_env() {
    if (const char* v = std::getenv("FACTSTAT_CACHE_DIR"); v != nullptr && *v != '\0') return std::filesystem::path(v);
    return std::nullopt;
}

inline std::filesystem::path cache_file(const std::filesystem::path& dir, unsigned d, CharacterKind kind) {
    return dir / ("characters-v" + std::to_string(json::kCacheVersion) + "-" + std::string(to_string(kind)) + "-d" +
                  std::to_string(d) + ".json");
}

/// Writes via a temporary file in the same directory and an atomic rename.
inline void write_file_atomically(const std::filesystem::path& path, const std::string& contents) {
    std::filesystem::create_directories(path.parent_path());
    std::random_device rd;
    const auto tmp = path.parent_path() / (path.filename().string() + ".tmp" + std::to_string(rd()));
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out << contents;
        if (!out.flush()) throw std::runtime_error("cannot write " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

/// Character family for (d, kind), read from and written to `cache_dir` when
/// one is given. A missing, stale, or corrupt cache file is recomputed and
/// overwritten; the cache never changes results.
inline CharacterFamily character_family(unsigned d, CharacterKind kind,
                                        const std::optional<std::filesystem::path>& cache_dir = std::nullopt) {
    if (!cache_dir) return compute_character_family(d, kind);
    const auto path = cache_file(*cache_dir, d, kind);
    if (std::ifstream in(path, std::ios::binary); in) {
        try {
            std::stringstream buf;
            buf << in.rdbuf();
            return json::parse_character_family(json::Json::parse(buf.str()), d, kind);
        } catch (const std::exception&) {
            // fall through and rebuild
        }
    }
    CharacterFamily fam = compute_character_family(d, kind);
    try {
        write_file_atomically(path, json::character_family(fam).dump() + "\n");
    } catch (const std::exception&) {
        // write failures leave the cache cold
    }
    return fam;
}

}  // namespace factstat
