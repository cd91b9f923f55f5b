#include "gbs/bitvec.hpp"

#include <bit>

namespace gbs {

BitVector BitVector::from_string(std::string_view bits) {
    BitVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1')
            v.set(i, true);
        else if (bits[i] != '0')
            throw ParseError("bit vector literal must contain only '0'/'1'");
    }
    return v;
}

BitVector BitVector::unit(std::size_t len, std::size_t i) {
    if (i >= len) throw IndexOutOfRange("unit bit index out of range");
    BitVector v(len);
    v.set(i, true);
    return v;
}

BitVector& BitVector::operator^=(const BitVector& o) {
    if (len_ != o.len_) throw DimensionMismatch("bit vector length mismatch in xor");
    kernels::active().xor_words(words_.data(), o.words_.data(), words_.size());
    return *this;
}

std::size_t BitVector::weight() const {
    return kernels::active().popcount(words_.data(), words_.size());
}

bool BitVector::is_zero() const {
    for (Word w : words_)
        if (w) return false;
    return true;
}

bool BitVector::dot(const BitVector& o) const {
    if (len_ != o.len_) throw DimensionMismatch("bit vector length mismatch in dot");
    return kernels::active().and_popcount(words_.data(), o.words_.data(), words_.size()) & 1u;
}

std::size_t BitVector::leading_bit() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i]) return i * kWordBits + std::countr_zero(words_[i]);
    return npos;
}

BitVector BitVector::extended(std::size_t new_len) const {
    if (new_len < len_) throw DimensionMismatch("extended() cannot shrink a bit vector");
    BitVector v(new_len);
    for (std::size_t i = 0; i < words_.size(); ++i) v.words_[i] = words_[i];
    return v;
}

std::string BitVector::to_string() const {
    std::string s(len_, '0');
    for (std::size_t i = 0; i < len_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

BitMatrix BitMatrix::ones(std::size_t rows, std::size_t cols) {
    BitMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, true);
    return m;
}

BitMatrix BitMatrix::from_rows(std::vector<BitVector> rows) {
    BitMatrix m;
    m.rows_ = rows.size();
    m.cols_ = rows.empty() ? 0 : rows[0].size();
    for (const auto& r : rows)
        if (r.size() != m.cols_) throw DimensionMismatch("ragged rows in from_rows");
    m.data_ = std::move(rows);
    return m;
}

BitMatrix BitMatrix::from_strings(std::initializer_list<std::string_view> rows) {
    std::vector<BitVector> v;
    v.reserve(rows.size());
    for (auto s : rows) v.push_back(BitVector::from_string(s));
    return from_rows(std::move(v));
}

BitMatrix BitMatrix::transposed() const {
    BitMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (get(r, c)) t.set(c, r, true);
    return t;
}

std::size_t BitMatrix::weight() const {
    std::size_t w = 0;
    for (const auto& r : data_) w += r.weight();
    return w;
}

BitVector BitMatrix::mul(const BitVector& v) const {
    if (v.size() != cols_) throw DimensionMismatch("matrix-vector size mismatch");
    BitVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.set(r, data_[r].dot(v));
    return out;
}

BitMatrix BitMatrix::mul(const BitMatrix& b) const {
    if (cols_ != b.rows_) throw DimensionMismatch("matrix-matrix size mismatch");
    BitMatrix out(rows_, b.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t t = 0; t < cols_; ++t)
            if (get(r, t)) out.row(r) ^= b.row(t);
    return out;
}

}  // namespace gbs
