#pragma once

// Exact 2x2 matrices over the naturals and the free monoid <L_u, R_v>.
//
//   L_u = [1 0]    R_v = [1 v]
//         [u 1]          [0 1]
//
// Every element of the monoid is a unique word over {L, R}; the word length
// is the element's depth.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace matmonoid {

using Natural = mpz_class;

/// Generator weights of the monoid. s = min(u,v), t = max(u,v).
class MonoidParams {
public:
    MonoidParams(std::uint64_t u, std::uint64_t v);

    std::uint64_t u() const noexcept { return u_; }
    std::uint64_t v() const noexcept { return v_; }
    std::uint64_t s() const noexcept { return u_ < v_ ? u_ : v_; }
    std::uint64_t t() const noexcept { return u_ < v_ ? v_ : u_; }

    /// The parameters of the mirrored tree, (v,u).
    MonoidParams swapped() const { return MonoidParams(v_, u_); }

    bool operator==(MonoidParams const&) const = default;

private:
    std::uint64_t u_;
    std::uint64_t v_;
};

/// Row-major [[a, b], [c, d]].
struct Mat2 {
    Natural a{1}, b{0}, c{0}, d{1};

    static Mat2 identity() { return {}; }

    Natural det() const { return a * d - b * c; }

    bool operator==(Mat2 const& o) const {
        return a == o.a && b == o.b && c == o.c && d == o.d;
    }
};

Mat2 operator*(Mat2 const& m, Mat2 const& n);

/// Entry position, 1-based as in the usual (row, column) notation.
struct EntryPos {
    int row;
    int col;
    bool operator==(EntryPos const&) const = default;
};

Natural const& entry(Mat2 const& m, EntryPos pos);

enum class Letter : std::uint8_t { L, R };

/// A word over {L, R}; its depth is its length.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

    /// Parses an ASCII string over {L, R}. Throws std::invalid_argument.
    static Word parse(std::string_view text);

    std::size_t depth() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    std::vector<Letter> const& letters() const noexcept { return letters_; }

    void push_back(Letter x) { letters_.push_back(x); }
    Word& operator+=(Word const& w);
    friend Word operator+(Word lhs, Word const& rhs) { return lhs += rhs; }
    /// Concatenation power.
    Word repeat(std::size_t k) const;

    std::string str() const;

    bool operator==(Word const&) const = default;
    auto operator<=>(Word const&) const = default;

private:
    std::vector<Letter> letters_;
};

Mat2 lmat(MonoidParams const& p);
Mat2 rmat(MonoidParams const& p);
Mat2 generator(Letter x, MonoidParams const& p);

Mat2 mul(Mat2 const& m, Mat2 const& n);

/// Maximum entry.
Natural const& mu(Mat2 const& m);

/// Left-to-right product of the generators; the empty word maps to I2.
Mat2 word_to_matrix(Word const& w, MonoidParams const& p);

/// In-place left multiplications, the tree's child maps.
void apply_left_l(Mat2& m, MonoidParams const& p);
void apply_left_r(Mat2& m, MonoidParams const& p);

/// Inverse of word_to_matrix. Throws NotInMonoid if m is not reachable.
Word factor(Mat2 const& m, MonoidParams const& p);

} // namespace matmonoid
