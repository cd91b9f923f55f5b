#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gbs/errors.hpp"
#include "gbs/kernels.hpp"

namespace gbs {

inline constexpr std::size_t npos = static_cast<std::size_t>(-1);

inline std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

/// Dense bit vector over GF(2). Unused bits of the last word are kept zero,
/// so equality is a plain word comparison.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t len) : len_(len), words_(words_for(len), 0) {}

    /// Parse from a string of '0'/'1' characters, e.g. "0110".
    static BitVector from_string(std::string_view bits);
    /// Length-len vector with the single bit i set.
    static BitVector unit(std::size_t len, std::size_t i);

    std::size_t size() const { return len_; }

    bool get(std::size_t i) const {
        return (words_[i / kWordBits] >> (i % kWordBits)) & 1u;
    }
    bool operator[](std::size_t i) const { return get(i); }

    void set(std::size_t i, bool v) {
        Word mask = Word(1) << (i % kWordBits);
        if (v)
            words_[i / kWordBits] |= mask;
        else
            words_[i / kWordBits] &= ~mask;
    }

    BitVector& operator^=(const BitVector& o);
    friend BitVector operator^(BitVector a, const BitVector& b) {
        a ^= b;
        return a;
    }

    std::size_t weight() const;
    bool is_zero() const;
    /// Parity of the overlap <a,b> over GF(2).
    bool dot(const BitVector& o) const;
    /// Index of the first set bit, npos if zero.
    std::size_t leading_bit() const;

    /// Copy into a longer vector, new bits zero.
    BitVector extended(std::size_t new_len) const;

    bool operator==(const BitVector&) const = default;

    std::string to_string() const;

    Word* word_data() { return words_.data(); }
    const Word* word_data() const { return words_.data(); }
    std::size_t word_count() const { return words_.size(); }

private:
    std::size_t len_ = 0;
    std::vector<Word> words_;
};

/// Dense GF(2) matrix stored as packed row vectors.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows, BitVector(cols)) {}

    static BitMatrix identity(std::size_t n);
    static BitMatrix ones(std::size_t rows, std::size_t cols);
    static BitMatrix from_rows(std::vector<BitVector> rows);
    static BitMatrix from_strings(std::initializer_list<std::string_view> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const { return data_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool v) { data_[r].set(c, v); }

    const BitVector& row(std::size_t r) const { return data_[r]; }
    BitVector& row(std::size_t r) { return data_[r]; }
    std::span<const BitVector> row_span() const { return data_; }

    BitMatrix transposed() const;
    /// Total number of set entries.
    std::size_t weight() const;
    /// Matrix-vector product A*v over GF(2); v has length cols().
    BitVector mul(const BitVector& v) const;
    /// Matrix product A*B over GF(2).
    BitMatrix mul(const BitMatrix& b) const;

    bool operator==(const BitMatrix&) const = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<BitVector> data_;
};

}  // namespace gbs
