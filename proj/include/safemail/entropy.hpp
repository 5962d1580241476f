#pragma once

#include <cstdint>
#include <span>

#include "safemail/bytes.hpp"

namespace safemail {

// All randomness in the system flows through this interface so that tests
// and the simulator can replace it with a deterministic stream.
class EntropySource {
public:
    virtual ~EntropySource() = default;
    virtual void fill(std::span<std::uint8_t> out) = 0;

    Bytes bytes(std::size_t n) {
        Bytes out(n);
        fill(out);
        return out;
    }
};

// OS randomness via libcrypto. Throws EntropyError if the RNG fails.
class SystemEntropy final : public EntropySource {
public:
    void fill(std::span<std::uint8_t> out) override;
};

// Deterministic stream: block i = SHA-256(seed || be64(i)). Reproducible
// across platforms; not for production keys.
class SeededEntropy final : public EntropySource {
public:
    explicit SeededEntropy(std::uint64_t seed);
    explicit SeededEntropy(ByteView seed);
    void fill(std::span<std::uint8_t> out) override;

private:
    Bytes seed_;
    std::uint64_t counter_ = 0;
    Bytes block_;
    std::size_t pos_ = 0;
};

}  // namespace safemail
