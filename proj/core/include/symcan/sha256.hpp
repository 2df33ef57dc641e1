#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace symcan {

// Hex-encoded SHA-256 digest of a byte string. Used for canonical-form
// signatures; self-contained so the library carries no crypto dependency.
std::string sha256_hex(std::string_view data);

}  // namespace symcan
