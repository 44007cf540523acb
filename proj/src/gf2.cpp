#include "wiretap/gf2.hpp"

#include <bit>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace wiretap::gf2 {

std::size_t BitVector::weight() const {
    std::size_t w = 0;
    for (auto word : words_) w += std::popcount(word);
    return w;
}

BitVector& BitVector::operator^=(const BitVector& other) {
    if (length_ != other.length_)
        throw std::invalid_argument("BitVector xor: length mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] ^= other.words_[i];
    return *this;
}

BitVector BitVector::prefix(std::size_t count) const {
    if (count > length_)
        throw std::invalid_argument("BitVector::prefix: count exceeds length");
    BitVector out(count);
    const std::size_t nw = out.words_.size();
    for (std::size_t i = 0; i < nw; ++i) out.words_[i] = words_[i];
    const std::size_t rem = count % kWordBits;
    if (rem != 0 && nw > 0)
        out.words_[nw - 1] &= (std::uint64_t(1) << rem) - 1;
    return out;
}

std::string BitVector::to_string() const {
    std::string s(length_, '0');
    for (std::size_t i = 0; i < length_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

BitVector BitVector::from_string(std::string_view bits) {
    BitVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1')
            v.set(i, true);
        else if (bits[i] != '0')
            throw std::runtime_error("BitVector::from_string: invalid digit");
    }
    return v;
}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

void BitMatrix::xor_row_into(std::size_t src, std::size_t dst) {
    std::uint64_t* d = words_.data() + dst * wpr_;
    const std::uint64_t* s = words_.data() + src * wpr_;
    for (std::size_t i = 0; i < wpr_; ++i) d[i] ^= s[i];
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::uint64_t* pa = words_.data() + a * wpr_;
    std::uint64_t* pb = words_.data() + b * wpr_;
    for (std::size_t i = 0; i < wpr_; ++i) std::swap(pa[i], pb[i]);
}

std::size_t BitMatrix::column_weight(std::size_t i) const {
    if (i >= cols_)
        throw std::out_of_range("BitMatrix::column_weight: column out of range");
    std::size_t w = 0;
    for (std::size_t r = 0; r < rows_; ++r) w += get(r, i);
    return w;
}

double BitMatrix::density() const {
    if (rows_ == 0 || cols_ == 0) return 0.0;
    std::size_t ones = 0;
    for (auto word : words_) ones += std::popcount(word);
    return double(ones) / (double(rows_) * double(cols_));
}

BitVector mat_vec_mul(const BitVector& v, const BitMatrix& m) {
    if (v.size() != m.rows())
        throw std::invalid_argument("mat_vec_mul: v.length != M.rows");
    BitVector out(m.cols());
    auto acc = out.words();
    const auto vw = v.words();
    for (std::size_t wi = 0; wi < vw.size(); ++wi) {
        std::uint64_t word = vw[wi];
        while (word != 0) {
            const int bit = std::countr_zero(word);
            word &= word - 1;
            const auto row = m.row(wi * kWordBits + bit);
            for (std::size_t j = 0; j < row.size(); ++j) acc[j] ^= row[j];
        }
    }
    return out;
}

BitMatrix mat_mul(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("mat_mul: inner dimensions differ");
    BitMatrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        auto acc = out.row(r);
        const auto arow = a.row(r);
        for (std::size_t wi = 0; wi < arow.size(); ++wi) {
            std::uint64_t word = arow[wi];
            while (word != 0) {
                const int bit = std::countr_zero(word);
                word &= word - 1;
                const auto brow = b.row(wi * kWordBits + bit);
                for (std::size_t j = 0; j < brow.size(); ++j) acc[j] ^= brow[j];
            }
        }
    }
    return out;
}

std::optional<BitMatrix> invert(const BitMatrix& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("invert: matrix not square");
    const std::size_t k = m.rows();
    BitMatrix work = m;
    BitMatrix inv = BitMatrix::identity(k);
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t pivot = col;
        while (pivot < k && !work.get(pivot, col)) ++pivot;
        if (pivot == k) return std::nullopt;
        work.swap_rows(col, pivot);
        inv.swap_rows(col, pivot);
        for (std::size_t r = 0; r < k; ++r) {
            if (r != col && work.get(r, col)) {
                work.xor_row_into(col, r);
                inv.xor_row_into(col, r);
            }
        }
    }
    return inv;
}

std::size_t rank(const BitMatrix& m) {
    BitMatrix work = m;
    const std::size_t rows = work.rows(), cols = work.cols();
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t pivot = r;
        while (pivot < rows && !work.get(pivot, col)) ++pivot;
        if (pivot == rows) continue;
        work.swap_rows(r, pivot);
        for (std::size_t i = r + 1; i < rows; ++i)
            if (work.get(i, col)) work.xor_row_into(r, i);
        ++r;
    }
    return r;
}

void write_matrix(std::ostream& os, const BitMatrix& m) {
    os << m.rows() << ' ' << m.cols() << '\n';
    std::string line;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        line.assign(m.cols(), '0');
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (m.get(r, c)) line[c] = '1';
        os << line << '\n';
    }
}

BitMatrix read_matrix(std::istream& is) {
    std::size_t rows = 0, cols = 0;
    if (!(is >> rows >> cols))
        throw std::runtime_error("matrix read: missing 'rows cols' header");
    BitMatrix m(rows, cols);
    std::string line;
    for (std::size_t r = 0; r < rows; ++r) {
        if (!(is >> line))
            throw std::runtime_error("matrix read: truncated at row " +
                                     std::to_string(r));
        if (line.size() != cols)
            throw std::runtime_error("matrix read: row " + std::to_string(r) +
                                     " has wrong length");
        for (std::size_t c = 0; c < cols; ++c) {
            if (line[c] == '1')
                m.set(r, c, true);
            else if (line[c] != '0')
                throw std::runtime_error("matrix read: invalid digit in row " +
                                         std::to_string(r));
        }
    }
    return m;
}

}  // namespace wiretap::gf2
