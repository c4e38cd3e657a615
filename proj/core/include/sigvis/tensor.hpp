#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace sigvis {

/// An ordered multi-index (i1,...,ik), letters in 1..d. The empty word
/// indexes the constant term of a series.
class Word {
public:
    Word() = default;
    Word(std::initializer_list<int> letters) : letters_(letters) {}
    explicit Word(std::vector<int> letters) : letters_(std::move(letters)) {}

    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    int operator[](std::size_t i) const { return letters_[i]; }
    const std::vector<int>& letters() const { return letters_; }

    auto begin() const { return letters_.begin(); }
    auto end() const { return letters_.end(); }

    bool contains(int letter) const;

    /// First `len` letters.
    Word prefix(std::size_t len) const;
    /// Letters from position `start` to the end.
    Word suffix(std::size_t start) const;
    /// This word followed by `tail`.
    Word concat(const Word& tail) const;

    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word&, const Word&) = default;

private:
    std::vector<int> letters_;
};

/// Number of words of length 1..depth over an alphabet of size d, i.e. the
/// feature count of a depth-truncated series without its constant term:
/// d(d^p-1)/(d-1) for d >= 2, and p for d = 1.
/// Throws std::overflow_error if the count does not fit in 64 bits.
std::uint64_t word_count(int alphabet, int depth);

/// A truncated element of the tensor algebra over R^d: one real coefficient
/// per word of length <= depth, stored dense and level-major (level k is a
/// contiguous block of d^k coefficients, lexicographic by letters).
class TensorSeries {
public:
    /// Zero series of the given shape.
    TensorSeries(int alphabet, int depth);

    /// Multiplicative unit (1, 0, 0, ...).
    static TensorSeries unit(int alphabet, int depth);

    int alphabet() const { return alphabet_; }
    int depth() const { return depth_; }

    /// Total coefficient count, constant term included.
    std::size_t size() const { return coeffs_.size(); }

    double constant() const { return coeffs_[0]; }

    /// Coefficient on `w`; throws std::out_of_range for words longer than
    /// the depth or with letters outside 1..alphabet.
    double coeff(const Word& w) const;
    void set_coeff(const Word& w, double value);

    /// Contiguous block of level-k coefficients (d^k of them).
    std::span<const double> level(int k) const;
    std::span<double> level(int k);

    std::size_t level_size(int k) const;

    /// Level-major, lexicographic coefficient vector. The order is total and
    /// deterministic: level 1 first, letters compared as base-d digits.
    std::vector<double> flatten(bool include_constant) const;

    /// Inverse of flatten for the same shape and flag.
    static TensorSeries unflatten(int alphabet, int depth,
                                  std::span<const double> values,
                                  bool includes_constant);

    /// Raw level-major storage, constant term first.
    const std::vector<double>& data() const { return coeffs_; }
    std::vector<double>& data() { return coeffs_; }

    TensorSeries& operator+=(const TensorSeries& rhs);
    TensorSeries& operator-=(const TensorSeries& rhs);
    TensorSeries& operator*=(double scalar);

    friend bool operator==(const TensorSeries&, const TensorSeries&) = default;

private:
    int alphabet_ = 1;
    int depth_ = 0;
    std::vector<std::size_t> offsets_;  // offsets_[k] = start of level k; size depth+2
    std::vector<double> coeffs_;

    std::size_t flat_index(const Word& w) const;
};

inline TensorSeries operator+(TensorSeries lhs, const TensorSeries& rhs) { return lhs += rhs; }
inline TensorSeries operator-(TensorSeries lhs, const TensorSeries& rhs) { return lhs -= rhs; }
inline TensorSeries operator*(double scalar, TensorSeries s) { return s *= scalar; }

/// Truncated tensor product: coefficient of w in the result is the sum of
/// a[u]*b[v] over all splits w = (u|v); words longer than the depth are
/// dropped. Throws ShapeError if the operands disagree on shape.
TensorSeries tensor_mul(const TensorSeries& a, const TensorSeries& b);

/// sum_{k=0..p} x^k / k! for x with zero constant term.
TensorSeries tensor_exp(const TensorSeries& x);

/// sum_{k=1..p} (-1)^(k+1) (x-1)^k / k for x with unit constant term.
TensorSeries tensor_log(const TensorSeries& x);

/// Index of `w` within its level block (base-d digits of the letters).
std::size_t word_offset_in_level(int alphabet, const Word& w);

/// The index-th word of the given length, in canonical order.
Word nth_word(int alphabet, int length, std::size_t index);

/// Compact display form: letters concatenated for alphabets up to 9
/// ("12"), dash-separated above that ("1-10"). Empty word gives "".
std::string word_name(const Word& w, int alphabet);

}  // namespace sigvis
