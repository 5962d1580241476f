#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "safemail/bytes.hpp"
#include "safemail/entropy.hpp"

namespace safemail {

// ECDSA over NIST P-256 with RFC 6979 deterministic nonces. Signatures are
// 64 bytes (r || s, fixed-width big-endian) with s canonicalized to the low
// half of the group order; the verifier rejects high-s encodings.
inline constexpr std::size_t kPrivateKeyBytes = 32;
inline constexpr std::size_t kPublicKeyBytes = 33;  // compressed point
inline constexpr std::size_t kSignatureBytes = 64;
inline constexpr std::size_t kDefaultMaxBodyBytes = 10 * 1024 * 1024;

struct KeyPair {
    Bytes private_key;  // 32-byte scalar, big-endian, 0 < d < n
    Bytes public_key;   // 33-byte compressed point
};

// One user's keys: the major pair authenticates against the home provider,
// the minor pair is the pseudonymous communication identity.
struct KeyPairSet {
    KeyPair major;
    KeyPair minor;
};

struct Signature {
    std::array<std::uint8_t, kSignatureBytes> bytes{};

    bool operator==(const Signature&) const = default;
    std::string hex() const { return to_hex(ByteView(bytes.data(), bytes.size())); }
    static Signature from_bytes(ByteView raw);
};

struct Address {
    std::string local_part;
    std::string domain;

    bool operator==(const Address&) const = default;
    std::string render() const { return local_part + "@" + domain; }
    static Address parse(std::string_view rendered);  // throws std::invalid_argument
};

// Hybrid encryption to a recipient public key: ephemeral P-256 ECDH,
// HKDF-SHA256 key derivation, AES-256-GCM.
struct SealedBox {
    Bytes ephemeral_pubkey;  // 33 bytes
    Bytes nonce;             // 12 bytes
    Bytes ciphertext;
    Bytes tag;               // 16 bytes
};

KeyPair generate_keypair(EntropySource& entropy);
KeyPairSet generate_keypair_set(EntropySource& entropy);

// Recomputes the compressed public key for a private scalar.
Bytes derive_public_key(ByteView private_key);

bool is_valid_public_key(ByteView public_key) noexcept;

// Deterministic: the same (key, message) always produces identical bytes.
// Throws CryptoError on an invalid private key.
Signature sign(ByteView private_key, ByteView message);

// Accepts iff sig is the canonical signature of message under public_key.
// Malformed inputs of any kind yield false, never an exception.
bool verify(ByteView public_key, ByteView message, const Signature& sig) noexcept;

// local part = base32(sha256(public_key)[0..20)), lowercase, unpadded.
Address derive_address(ByteView major_public_key, const std::string& domain);

SealedBox seal(EntropySource& entropy, ByteView recipient_public_key,
               ByteView plaintext, std::size_t max_body_bytes = kDefaultMaxBodyBytes);

// Throws TamperError on any failure (wrong key and corruption look alike).
Bytes open_box(ByteView recipient_private_key, const SealedBox& box);

// Flat key-value key file, hex-encoded fields, owner-only permissions.
void save_keypair_set(const KeyPairSet& keys, const std::filesystem::path& path);
KeyPairSet load_keypair_set(const std::filesystem::path& path);

}  // namespace safemail
