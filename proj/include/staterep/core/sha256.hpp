#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace staterep {

// Standalone SHA-256 (FIPS 180-4). Used for prompt hashes and the run
// manifest; vendored libraries provide no digest, and the hash must be
// stable across platforms.
class Sha256 {
public:
    Sha256();
    void update(const void* data, std::size_t len);
    // Finalizes and returns the lowercase hex digest. The object must not be
    // reused afterwards.
    std::string hex_digest();

private:
    void process_block(const std::uint8_t* block);

    std::uint32_t h_[8];
    std::uint8_t buffer_[64];
    std::size_t buffer_len_ = 0;
    std::uint64_t total_len_ = 0;
};

std::string sha256_hex(std::string_view data);
std::string sha256_hex(const std::vector<unsigned char>& data);

}  // namespace staterep
