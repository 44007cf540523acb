#pragma once
// Bit-packed dense GF(2) vectors and matrices with word-level XOR
// elimination. Dimensions up to a few thousand bits are the target;
// rows are packed into 64-bit words, trailing bits beyond the logical
// length are kept zero so whole-word operations stay valid.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wiretap::gf2 {

inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t bits) {
    return (bits + kWordBits - 1) / kWordBits;
}

class BitVector {
  public:
    BitVector() = default;
    explicit BitVector(std::size_t length)
        : length_(length), words_(words_for(length), 0) {}

    std::size_t size() const { return length_; }
    bool empty() const { return length_ == 0; }

    bool get(std::size_t i) const {
        return (words_[i / kWordBits] >> (i % kWordBits)) & 1u;
    }
    void set(std::size_t i, bool v) {
        const std::uint64_t mask = std::uint64_t(1) << (i % kWordBits);
        if (v)
            words_[i / kWordBits] |= mask;
        else
            words_[i / kWordBits] &= ~mask;
    }
    void flip(std::size_t i) {
        words_[i / kWordBits] ^= std::uint64_t(1) << (i % kWordBits);
    }

    std::size_t weight() const;

    // XOR-accumulate; lengths must match.
    BitVector& operator^=(const BitVector& other);
    friend BitVector operator^(BitVector a, const BitVector& b) {
        a ^= b;
        return a;
    }

    bool operator==(const BitVector&) const = default;

    std::span<const std::uint64_t> words() const { return words_; }
    std::span<std::uint64_t> words() { return words_; }

    // First `count` bits (the c_l part of a codeword split).
    BitVector prefix(std::size_t count) const;

    std::string to_string() const;
    static BitVector from_string(std::string_view bits);

  private:
    std::size_t length_ = 0;
    std::vector<std::uint64_t> words_;
};

// Row-major packed bit matrix.
class BitMatrix {
  public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), wpr_(words_for(cols)),
          words_(rows * wpr_, 0) {}

    static BitMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const {
        return (words_[r * wpr_ + c / kWordBits] >> (c % kWordBits)) & 1u;
    }
    void set(std::size_t r, std::size_t c, bool v) {
        const std::uint64_t mask = std::uint64_t(1) << (c % kWordBits);
        if (v)
            words_[r * wpr_ + c / kWordBits] |= mask;
        else
            words_[r * wpr_ + c / kWordBits] &= ~mask;
    }

    std::span<const std::uint64_t> row(std::size_t r) const {
        return {words_.data() + r * wpr_, wpr_};
    }
    std::span<std::uint64_t> row(std::size_t r) {
        return {words_.data() + r * wpr_, wpr_};
    }

    void xor_row_into(std::size_t src, std::size_t dst);
    void swap_rows(std::size_t a, std::size_t b);

    // Hamming weight of column i; throws std::out_of_range for bad i.
    std::size_t column_weight(std::size_t i) const;

    // Density of 1 entries over rows*cols.
    double density() const;

    bool operator==(const BitMatrix&) const = default;

  private:
    std::size_t rows_ = 0, cols_ = 0, wpr_ = 0;
    std::vector<std::uint64_t> words_;
};

// v (1 x k) times M (k x n); throws std::invalid_argument on mismatch.
BitVector mat_vec_mul(const BitVector& v, const BitMatrix& m);

// a (r x k) times b (k x c).
BitMatrix mat_mul(const BitMatrix& a, const BitMatrix& b);

// Gauss-Jordan inverse; nullopt means the matrix is singular.
std::optional<BitMatrix> invert(const BitMatrix& m);

std::size_t rank(const BitMatrix& m);

// Textual format: header "rows cols", then one 0/1 string per row.
void write_matrix(std::ostream& os, const BitMatrix& m);
BitMatrix read_matrix(std::istream& is);  // throws std::runtime_error

}  // namespace wiretap::gf2
