#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace safemail {

using Bytes = std::vector<std::uint8_t>;
using ByteView = std::span<const std::uint8_t>;

struct CryptoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Authentication failure when opening a sealed box. Deliberately carries no
// detail: wrong key and tampered ciphertext are indistinguishable.
struct TamperError : CryptoError {
    TamperError() : CryptoError("sealed box open failed") {}
};

struct EntropyError : CryptoError {
    using CryptoError::CryptoError;
};

std::string to_hex(ByteView data);
Bytes from_hex(std::string_view hex);  // throws std::invalid_argument

// RFC 4648 base32, lowercase alphabet, no padding.
std::string base32_lower(ByteView data);

Bytes sha256(ByteView data);

// Constant-time comparison; false if lengths differ.
bool ct_equal(ByteView a, ByteView b);

inline Bytes to_bytes(std::string_view s) {
    return Bytes(s.begin(), s.end());
}

inline ByteView view(const Bytes& b) {
    return ByteView(b.data(), b.size());
}

}  // namespace safemail
