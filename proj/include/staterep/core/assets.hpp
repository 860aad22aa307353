#pragma once

#include <string>
#include <string_view>

namespace staterep {

// Loads a text asset (prompt template, environment manual) by path relative
// to the asset root. The root resolves to $STATEREP_ASSETS when set,
// otherwise to the source-tree assets/ directory baked in at build time.
// Contents are cached; assets are immutable at runtime.
const std::string& load_asset(std::string_view relative_path);

std::string asset_root();

}  // namespace staterep
