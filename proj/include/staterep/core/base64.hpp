#pragma once

#include <string>
#include <vector>

namespace staterep {

std::string base64_encode(const std::vector<unsigned char>& data);

}  // namespace staterep
