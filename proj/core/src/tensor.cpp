#include "sigvis/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "sigvis/errors.hpp"

namespace sigvis {

bool Word::contains(int letter) const {
    return std::find(letters_.begin(), letters_.end(), letter) != letters_.end();
}

Word Word::prefix(std::size_t len) const {
    return Word(std::vector<int>(letters_.begin(), letters_.begin() + len));
}

Word Word::suffix(std::size_t start) const {
    return Word(std::vector<int>(letters_.begin() + start, letters_.end()));
}

Word Word::concat(const Word& tail) const {
    std::vector<int> out = letters_;
    out.insert(out.end(), tail.letters_.begin(), tail.letters_.end());
    return Word(std::move(out));
}

std::uint64_t word_count(int alphabet, int depth) {
    if (alphabet < 1) throw ShapeError("word_count: alphabet must be positive");
    if (depth < 0) throw ShapeError("word_count: depth must be non-negative");
    const auto d = static_cast<std::uint64_t>(alphabet);
    const auto max = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t total = 0;
    std::uint64_t power = 1;
    for (int k = 1; k <= depth; ++k) {
        if (d != 0 && power > max / d)
            throw std::overflow_error("word_count: level size exceeds 64 bits");
        power *= d;
        if (total > max - power)
            throw std::overflow_error("word_count: total exceeds 64 bits");
        total += power;
    }
    return total;
}

namespace {

std::vector<std::size_t> level_offsets(int alphabet, int depth) {
    std::vector<std::size_t> offsets(static_cast<std::size_t>(depth) + 2);
    offsets[0] = 0;
    std::size_t power = 1;
    for (int k = 0; k <= depth; ++k) {
        offsets[static_cast<std::size_t>(k) + 1] =
            offsets[static_cast<std::size_t>(k)] + power;
        if (k < depth) power *= static_cast<std::size_t>(alphabet);
    }
    return offsets;
}

}  // namespace

TensorSeries::TensorSeries(int alphabet, int depth)
    : alphabet_(alphabet), depth_(depth) {
    if (alphabet < 1) throw ShapeError("TensorSeries: alphabet must be positive");
    if (depth < 0) throw ShapeError("TensorSeries: depth must be non-negative");
    word_count(alphabet, depth);  // reject shapes whose size overflows
    offsets_ = level_offsets(alphabet, depth);
    coeffs_.assign(offsets_.back(), 0.0);
}

TensorSeries TensorSeries::unit(int alphabet, int depth) {
    TensorSeries s(alphabet, depth);
    s.coeffs_[0] = 1.0;
    return s;
}

std::size_t TensorSeries::flat_index(const Word& w) const {
    if (w.size() > static_cast<std::size_t>(depth_))
        throw std::out_of_range("TensorSeries: word longer than depth");
    std::size_t idx = 0;
    for (int letter : w) {
        if (letter < 1 || letter > alphabet_)
            throw std::out_of_range("TensorSeries: letter outside alphabet");
        idx = idx * static_cast<std::size_t>(alphabet_) +
              static_cast<std::size_t>(letter - 1);
    }
    return offsets_[w.size()] + idx;
}

double TensorSeries::coeff(const Word& w) const { return coeffs_[flat_index(w)]; }

void TensorSeries::set_coeff(const Word& w, double value) {
    coeffs_[flat_index(w)] = value;
}

std::span<const double> TensorSeries::level(int k) const {
    if (k < 0 || k > depth_) throw std::out_of_range("TensorSeries: bad level");
    const auto u = static_cast<std::size_t>(k);
    return {coeffs_.data() + offsets_[u], offsets_[u + 1] - offsets_[u]};
}

std::span<double> TensorSeries::level(int k) {
    if (k < 0 || k > depth_) throw std::out_of_range("TensorSeries: bad level");
    const auto u = static_cast<std::size_t>(k);
    return {coeffs_.data() + offsets_[u], offsets_[u + 1] - offsets_[u]};
}

std::size_t TensorSeries::level_size(int k) const {
    if (k < 0 || k > depth_) throw std::out_of_range("TensorSeries: bad level");
    const auto u = static_cast<std::size_t>(k);
    return offsets_[u + 1] - offsets_[u];
}

std::vector<double> TensorSeries::flatten(bool include_constant) const {
    if (include_constant) return coeffs_;
    return std::vector<double>(coeffs_.begin() + 1, coeffs_.end());
}

TensorSeries TensorSeries::unflatten(int alphabet, int depth,
                                     std::span<const double> values,
                                     bool includes_constant) {
    TensorSeries s(alphabet, depth);
    const std::size_t expected = s.size() - (includes_constant ? 0 : 1);
    if (values.size() != expected)
        throw ShapeError("unflatten: value count does not match shape");
    double* dst = s.coeffs_.data() + (includes_constant ? 0 : 1);
    std::copy(values.begin(), values.end(), dst);
    return s;
}

namespace {

void require_same_shape(const TensorSeries& a, const TensorSeries& b,
                        const char* op) {
    if (a.alphabet() != b.alphabet() || a.depth() != b.depth())
        throw ShapeError(std::string(op) + ": operands have different shapes");
}

}  // namespace

TensorSeries& TensorSeries::operator+=(const TensorSeries& rhs) {
    require_same_shape(*this, rhs, "operator+=");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

TensorSeries& TensorSeries::operator-=(const TensorSeries& rhs) {
    require_same_shape(*this, rhs, "operator-=");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

TensorSeries& TensorSeries::operator*=(double scalar) {
    for (double& c : coeffs_) c *= scalar;
    return *this;
}

TensorSeries tensor_mul(const TensorSeries& a, const TensorSeries& b) {
    require_same_shape(a, b, "tensor_mul");
    const int p = a.depth();
    TensorSeries out(a.alphabet(), p);
    std::size_t power = 1;  // alphabet^j tracked alongside j
    for (int k = 0; k <= p; ++k) {
        auto dst = out.level(k);
        for (int j = 0; j <= k; ++j) {
            auto lhs = a.level(j);
            auto rhs = b.level(k - j);
            for (std::size_t ia = 0; ia < lhs.size(); ++ia) {
                const double av = lhs[ia];
                if (av == 0.0) continue;
                double* row = dst.data() + ia * rhs.size();
                for (std::size_t ib = 0; ib < rhs.size(); ++ib)
                    row[ib] += av * rhs[ib];
            }
        }
        power *= static_cast<std::size_t>(a.alphabet());
        (void)power;
    }
    return out;
}

TensorSeries tensor_exp(const TensorSeries& x) {
    if (x.constant() != 0.0)
        throw ShapeError("tensor_exp: argument must have zero constant term");
    const TensorSeries one = TensorSeries::unit(x.alphabet(), x.depth());
    TensorSeries acc = one;
    for (int k = x.depth(); k >= 1; --k) {
        TensorSeries scaled = x;
        scaled *= 1.0 / static_cast<double>(k);
        acc = one + tensor_mul(scaled, acc);
    }
    return acc;
}

TensorSeries tensor_log(const TensorSeries& x) {
    if (x.constant() != 1.0)
        throw ShapeError("tensor_log: argument must have unit constant term");
    TensorSeries y = x;
    y.data()[0] = 0.0;
    TensorSeries acc(x.alphabet(), x.depth());
    TensorSeries power = y;
    for (int k = 1; k <= x.depth(); ++k) {
        if (k > 1) power = tensor_mul(power, y);
        TensorSeries term = power;
        term *= (k % 2 == 1 ? 1.0 : -1.0) / static_cast<double>(k);
        acc += term;
    }
    return acc;
}

std::size_t word_offset_in_level(int alphabet, const Word& w) {
    std::size_t idx = 0;
    for (int letter : w) {
        if (letter < 1 || letter > alphabet)
            throw std::out_of_range("word_offset_in_level: letter outside alphabet");
        idx = idx * static_cast<std::size_t>(alphabet) +
              static_cast<std::size_t>(letter - 1);
    }
    return idx;
}

Word nth_word(int alphabet, int length, std::size_t index) {
    std::vector<int> letters(static_cast<std::size_t>(length));
    for (int pos = length - 1; pos >= 0; --pos) {
        letters[static_cast<std::size_t>(pos)] =
            static_cast<int>(index % static_cast<std::size_t>(alphabet)) + 1;
        index /= static_cast<std::size_t>(alphabet);
    }
    if (index != 0) throw std::out_of_range("nth_word: index outside level");
    return Word(std::move(letters));
}

std::string word_name(const Word& w, int alphabet) {
    std::string out;
    bool first = true;
    for (int letter : w) {
        if (alphabet > 9 && !first) out += '-';
        out += std::to_string(letter);
        first = false;
    }
    return out;
}

}  // namespace sigvis
