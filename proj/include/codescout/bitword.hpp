#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace codescout {

// Fixed-length binary vector packed into 64-bit limbs. Bit i lives in
// limb i/64 at position i%64. Unused high bits of the last limb are kept zero.
class BitWord {
public:
    BitWord() = default;
    explicit BitWord(std::size_t length);

    // Low `length` bits of `bits`; length must be <= 64.
    static BitWord from_uint(std::uint64_t bits, std::size_t length);

    std::size_t size() const noexcept { return length_; }
    bool empty() const noexcept { return length_ == 0; }

    bool get(std::size_t i) const;
    void set(std::size_t i, bool value);
    void flip(std::size_t i);

    std::size_t weight() const noexcept;
    bool is_zero() const noexcept;

    // Low 64 bits as an integer (bit i -> 2^i).
    std::uint64_t low_bits() const noexcept { return limbs_.empty() ? 0 : limbs_[0]; }

    BitWord& operator^=(const BitWord& other);
    friend BitWord operator^(BitWord a, const BitWord& b) { return a ^= b; }

    // Parity of the bitwise AND.
    bool dot(const BitWord& other) const;

    std::span<const std::uint64_t> limbs() const noexcept { return limbs_; }
    std::span<std::uint64_t> limbs() noexcept { return limbs_; }

    // "0110..." with bit 0 first.
    std::string to_string() const;

    friend bool operator==(const BitWord&, const BitWord&) = default;

private:
    void check_same_length(const BitWord& other) const;

    std::size_t length_ = 0;
    std::vector<std::uint64_t> limbs_;
};

constexpr std::size_t limb_count(std::size_t bits) noexcept { return (bits + 63) / 64; }

}  // namespace codescout
