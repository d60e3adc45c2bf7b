#include "matmonoid/matrix.hpp"

#include "matmonoid/error.hpp"

#include <stdexcept>

namespace matmonoid {

MonoidParams::MonoidParams(std::uint64_t u, std::uint64_t v) : u_(u), v_(v) {
    if (u == 0 || v == 0)
        throw InvalidParams("generator weights u and v must be positive");
}

Mat2 operator*(Mat2 const& m, Mat2 const& n) {
    return Mat2{m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
                m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
}

Mat2 mul(Mat2 const& m, Mat2 const& n) { return m * n; }

Natural const& entry(Mat2 const& m, EntryPos pos) {
    if (pos.row == 1 && pos.col == 1) return m.a;
    if (pos.row == 1 && pos.col == 2) return m.b;
    if (pos.row == 2 && pos.col == 1) return m.c;
    if (pos.row == 2 && pos.col == 2) return m.d;
    throw std::out_of_range("entry position must be in {1,2}x{1,2}");
}

Word Word::parse(std::string_view text) {
    std::vector<Letter> out;
    out.reserve(text.size());
    for (char ch : text) {
        switch (ch) {
        case 'L': out.push_back(Letter::L); break;
        case 'R': out.push_back(Letter::R); break;
        default:
            throw std::invalid_argument(std::string("word contains a letter outside {L,R}: '") + ch + "'");
        }
    }
    return Word(std::move(out));
}

Word& Word::operator+=(Word const& w) {
    letters_.insert(letters_.end(), w.letters_.begin(), w.letters_.end());
    return *this;
}

Word Word::repeat(std::size_t k) const {
    Word out;
    out.letters_.reserve(letters_.size() * k);
    for (std::size_t i = 0; i < k; ++i) out += *this;
    return out;
}

std::string Word::str() const {
    std::string s;
    s.reserve(letters_.size());
    for (Letter x : letters_) s.push_back(x == Letter::L ? 'L' : 'R');
    return s;
}

Mat2 lmat(MonoidParams const& p) { return Mat2{1, 0, Natural(p.u()), 1}; }

Mat2 rmat(MonoidParams const& p) { return Mat2{1, Natural(p.v()), 0, 1}; }

Mat2 generator(Letter x, MonoidParams const& p) {
    return x == Letter::L ? lmat(p) : rmat(p);
}

Natural const& mu(Mat2 const& m) {
    Natural const* best = &m.a;
    for (Natural const* x : {&m.b, &m.c, &m.d})
        if (*x > *best) best = x;
    return *best;
}

void apply_left_l(Mat2& m, MonoidParams const& p) {
    // [a b; ua+c ub+d]
    mpz_addmul_ui(m.c.get_mpz_t(), m.a.get_mpz_t(), p.u());
    mpz_addmul_ui(m.d.get_mpz_t(), m.b.get_mpz_t(), p.u());
}

void apply_left_r(Mat2& m, MonoidParams const& p) {
    // [a+vc b+vd; c d]
    mpz_addmul_ui(m.a.get_mpz_t(), m.c.get_mpz_t(), p.v());
    mpz_addmul_ui(m.b.get_mpz_t(), m.d.get_mpz_t(), p.v());
}

Mat2 word_to_matrix(Word const& w, MonoidParams const& p) {
    // Right-multiplying by a shear only touches one column, so walk the word
    // left to right with column updates instead of general products.
    Mat2 m = Mat2::identity();
    for (Letter x : w.letters()) {
        if (x == Letter::L) {
            // M L_u: first column += u * second column
            mpz_addmul_ui(m.a.get_mpz_t(), m.b.get_mpz_t(), p.u());
            mpz_addmul_ui(m.c.get_mpz_t(), m.d.get_mpz_t(), p.u());
        } else {
            // M R_v: second column += v * first column
            mpz_addmul_ui(m.b.get_mpz_t(), m.a.get_mpz_t(), p.v());
            mpz_addmul_ui(m.d.get_mpz_t(), m.c.get_mpz_t(), p.v());
        }
    }
    return m;
}

Word factor(Mat2 const& m, MonoidParams const& p) {
    if (sgn(m.a) < 0 || sgn(m.b) < 0 || sgn(m.c) < 0 || sgn(m.d) < 0)
        throw NotInMonoid("matrix has a negative entry");
    if (m.det() != 1)
        throw NotInMonoid("matrix does not have determinant one");

    Mat2 cur = m;
    Word w;
    Natural const u(p.u());
    Natural const v(p.v());
    Mat2 const id = Mat2::identity();
    while (!(cur == id)) {
        bool const lower = cur.c >= u * cur.a && cur.d >= u * cur.b;
        bool const upper = cur.a >= v * cur.c && cur.b >= v * cur.d;
        if (lower == upper)
            throw NotInMonoid(lower ? "matrix is both u-lower- and v-upper-dominant"
                                    : "matrix is neither u-lower- nor v-upper-dominant");
        if (lower) {
            mpz_submul_ui(cur.c.get_mpz_t(), cur.a.get_mpz_t(), p.u());
            mpz_submul_ui(cur.d.get_mpz_t(), cur.b.get_mpz_t(), p.u());
            w.push_back(Letter::L);
        } else {
            mpz_submul_ui(cur.a.get_mpz_t(), cur.c.get_mpz_t(), p.v());
            mpz_submul_ui(cur.b.get_mpz_t(), cur.d.get_mpz_t(), p.v());
            w.push_back(Letter::R);
        }
    }
    return w;
}

} // namespace matmonoid
