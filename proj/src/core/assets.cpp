#include "staterep/core/assets.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>

#include "staterep/core/error.hpp"

#ifndef STATEREP_DEFAULT_ASSET_DIR
#define STATEREP_DEFAULT_ASSET_DIR "assets"
#endif

namespace staterep {

std::string asset_root() {
    if (const char* env = std::getenv("STATEREP_ASSETS"); env && *env) return env;
    return STATEREP_DEFAULT_ASSET_DIR;
}

const std::string& load_asset(std::string_view relative_path) {
    static std::map<std::string, std::string, std::less<>> cache;
    static std::mutex mutex;

    std::lock_guard<std::mutex> lock(mutex);
    if (auto it = cache.find(relative_path); it != cache.end()) return it->second;

    const std::string path = asset_root() + "/" + std::string(relative_path);
    std::ifstream in(path, std::ios::binary);
    if (!in) throw config_error("asset not found: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    auto [it, inserted] = cache.emplace(std::string(relative_path), ss.str());
    return it->second;
}

}  // namespace staterep
