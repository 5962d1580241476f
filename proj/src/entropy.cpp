#include "safemail/entropy.hpp"

#include <openssl/rand.h>

namespace safemail {

void SystemEntropy::fill(std::span<std::uint8_t> out) {
    if (out.empty()) return;
    if (RAND_bytes(out.data(), static_cast<int>(out.size())) != 1) {
        throw EntropyError("system RNG failure");
    }
}

SeededEntropy::SeededEntropy(std::uint64_t seed) {
    seed_.resize(8);
    for (int i = 0; i < 8; ++i) {
        seed_[i] = static_cast<std::uint8_t>(seed >> (56 - 8 * i));
    }
}

SeededEntropy::SeededEntropy(ByteView seed) : seed_(seed.begin(), seed.end()) {}

void SeededEntropy::fill(std::span<std::uint8_t> out) {
    std::size_t written = 0;
    while (written < out.size()) {
        if (pos_ == block_.size()) {
            Bytes input = seed_;
            for (int i = 0; i < 8; ++i) {
                input.push_back(static_cast<std::uint8_t>(counter_ >> (56 - 8 * i)));
            }
            block_ = sha256(input);
            pos_ = 0;
            ++counter_;
        }
        std::size_t n = std::min(out.size() - written, block_.size() - pos_);
        std::copy(block_.begin() + static_cast<std::ptrdiff_t>(pos_),
                  block_.begin() + static_cast<std::ptrdiff_t>(pos_ + n),
                  out.begin() + static_cast<std::ptrdiff_t>(written));
        pos_ += n;
        written += n;
    }
}

}  // namespace safemail
