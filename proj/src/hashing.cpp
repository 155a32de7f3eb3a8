#include "goldbach/hashing.hpp"

#include <openssl/evp.h>

#include <stdexcept>

namespace goldbach {

std::vector<std::uint8_t> sha256(std::span<const std::uint8_t> data) {
    std::vector<std::uint8_t> digest(EVP_MAX_MD_SIZE);
    unsigned int length = 0;
    if (EVP_Digest(data.data(), data.size(), digest.data(), &length, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("sha256: EVP_Digest failed");
    digest.resize(length);
    return digest;
}

KeyHasher default_key_hasher() {
    return [](std::span<const std::uint8_t> data) { return sha256(data); };
}

} // namespace goldbach
