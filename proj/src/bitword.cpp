#include "codescout/bitword.hpp"

#include <bit>

#include "codescout/error.hpp"

namespace codescout {

BitWord::BitWord(std::size_t length) : length_(length), limbs_(limb_count(length), 0) {}

BitWord BitWord::from_uint(std::uint64_t bits, std::size_t length) {
    if (length > 64) throw InvalidArgument("BitWord::from_uint: length exceeds 64");
    BitWord w(length);
    if (length == 0) return w;
    if (length < 64) bits &= (std::uint64_t{1} << length) - 1;
    w.limbs_[0] = bits;
    return w;
}

bool BitWord::get(std::size_t i) const {
    if (i >= length_) throw InvalidArgument("BitWord: index out of range");
    return (limbs_[i / 64] >> (i % 64)) & 1U;
}

void BitWord::set(std::size_t i, bool value) {
    if (i >= length_) throw InvalidArgument("BitWord: index out of range");
    const std::uint64_t mask = std::uint64_t{1} << (i % 64);
    if (value)
        limbs_[i / 64] |= mask;
    else
        limbs_[i / 64] &= ~mask;
}

void BitWord::flip(std::size_t i) {
    if (i >= length_) throw InvalidArgument("BitWord: index out of range");
    limbs_[i / 64] ^= std::uint64_t{1} << (i % 64);
}

std::size_t BitWord::weight() const noexcept {
    std::size_t w = 0;
    for (auto limb : limbs_) w += static_cast<std::size_t>(std::popcount(limb));
    return w;
}

bool BitWord::is_zero() const noexcept {
    for (auto limb : limbs_)
        if (limb != 0) return false;
    return true;
}

void BitWord::check_same_length(const BitWord& other) const {
    if (other.length_ != length_)
        throw InvalidArgument("BitWord: length mismatch (" + std::to_string(length_) + " vs " +
                              std::to_string(other.length_) + ")");
}

BitWord& BitWord::operator^=(const BitWord& other) {
    check_same_length(other);
    for (std::size_t i = 0; i < limbs_.size(); ++i) limbs_[i] ^= other.limbs_[i];
    return *this;
}

bool BitWord::dot(const BitWord& other) const {
    check_same_length(other);
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) acc ^= limbs_[i] & other.limbs_[i];
    return std::popcount(acc) & 1;
}

std::string BitWord::to_string() const {
    std::string s(length_, '0');
    for (std::size_t i = 0; i < length_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

}  // namespace codescout
