#include "matmonoid/tree.hpp"

#include "matmonoid/error.hpp"

#include <cstdlib>
#include <string>

namespace matmonoid {

EnumerationLimits EnumerationLimits::from_env() {
    EnumerationLimits limits;
    if (char const* env = std::getenv("MATMONOID_ENUM_LIMIT")) {
        char* end = nullptr;
        unsigned long long const value = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && value > 0) {
            limits.tree_cells = value;
            limits.hash_strings = value;
        }
    }
    return limits;
}

char const* to_string(DominanceClass c) {
    switch (c) {
    case DominanceClass::ULowerDominant: return "U_LOWER_DOMINANT";
    case DominanceClass::VUpperDominant: return "V_UPPER_DOMINANT";
    case DominanceClass::Both: return "BOTH";
    case DominanceClass::Neither: return "NEITHER";
    }
    return "?";
}

std::pair<Mat2, Mat2> children(Mat2 const& m, MonoidParams const& p) {
    std::pair<Mat2, Mat2> out{m, m};
    apply_left_l(out.first, p);
    apply_left_r(out.second, p);
    return out;
}

namespace {

void check_row_limit(std::size_t n, EnumerationLimits const& limits) {
    if (n >= 64 || (std::uint64_t{1} << n) > limits.tree_cells)
        throw LimitExceeded("row " + std::to_string(n) + " has more than " +
                            std::to_string(limits.tree_cells) + " cells");
}

} // namespace

TreeRow row(Mat2 const& root, MonoidParams const& p, std::size_t n, EnumerationLimits const& limits) {
    check_row_limit(n, limits);
    std::vector<Mat2> cur{root};
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<Mat2> next;
        next.reserve(cur.size() * 2);
        for (auto const& m : cur) {
            auto [left, right] = children(m, p);
            next.push_back(std::move(left));
            next.push_back(std::move(right));
        }
        cur = std::move(next);
    }
    return TreeRow{n, std::move(cur)};
}

namespace {

void check_cell_index(std::size_t n, std::uint64_t i) {
    if (n >= 64) throw IndexOutOfRange("cell depth must be below 64");
    if (i < 1 || i > (std::uint64_t{1} << n))
        throw IndexOutOfRange("cell index " + std::to_string(i) + " outside 1.." +
                              std::to_string(std::uint64_t{1} << n));
}

} // namespace

Mat2 cell(std::size_t n, std::uint64_t i, MonoidParams const& p) {
    check_cell_index(n, i);
    Mat2 m = Mat2::identity();
    std::uint64_t const path = i - 1;
    for (std::size_t k = n; k-- > 0;) {
        if ((path >> k) & 1U)
            apply_left_r(m, p);
        else
            apply_left_l(m, p);
    }
    return m;
}

Word cell_word(std::size_t n, std::uint64_t i) {
    check_cell_index(n, i);
    std::uint64_t const path = i - 1;
    Word w;
    for (std::size_t k = 0; k < n; ++k) w.push_back(((path >> k) & 1U) ? Letter::R : Letter::L);
    return w;
}

DominanceClass classify(Mat2 const& m, MonoidParams const& p) {
    bool const lower = m.c >= p.u() * m.a && m.d >= p.u() * m.b;
    bool const upper = m.a >= p.v() * m.c && m.b >= p.v() * m.d;
    if (lower && upper) return DominanceClass::Both;
    if (lower) return DominanceClass::ULowerDominant;
    if (upper) return DominanceClass::VUpperDominant;
    return DominanceClass::Neither;
}

namespace {

struct RowScan {
    MonoidParams const& p;
    Natural best = 0;
    std::uint64_t best_index = 0;
    Mat2 best_matrix{};

    // Visits leaves left to right; index is the 0-based leaf position.
    void visit(Mat2 const& m, std::size_t remaining, std::uint64_t index) {
        if (remaining == 0) {
            Natural const& x = mu(m);
            if (best_index == 0 || x > best) {
                best = x;
                best_index = index + 1;
                best_matrix = m;
            }
            return;
        }
        auto [left, right] = children(m, p);
        visit(left, remaining - 1, index << 1);
        visit(right, remaining - 1, (index << 1) | 1U);
    }
};

} // namespace

Natural mu_row_bruteforce(MonoidParams const& p, std::size_t n, EnumerationLimits const& limits) {
    return mu(argmax_row_bruteforce(p, n, limits).second);
}

std::pair<std::uint64_t, Mat2> argmax_row_bruteforce(MonoidParams const& p, std::size_t n,
                                                     EnumerationLimits const& limits) {
    check_row_limit(n, limits);
    RowScan scan{p};
    scan.visit(Mat2::identity(), n, 0);
    return {scan.best_index, scan.best_matrix};
}

Mat2 antitranspose(Mat2 const& m) { return Mat2{m.d, m.c, m.b, m.a}; }

BiMat2 entry_polys(Word const& w) {
    BiMat2 f{BiPolyN::constant(1), BiPolyN{}, BiPolyN{}, BiPolyN::constant(1)};
    for (Letter x : w.letters()) {
        if (x == Letter::L) {
            // first column += X * second column
            f[0] += f[1].times_x();
            f[2] += f[3].times_x();
        } else {
            // second column += Y * first column
            f[1] += f[0].times_y();
            f[3] += f[2].times_y();
        }
    }
    return f;
}

BiMat2 flip(BiMat2 const& f) {
    return {f[3].swapped(), f[2].swapped(), f[1].swapped(), f[0].swapped()};
}

Mat2 evaluate(BiMat2 const& f, MonoidParams const& p) {
    Natural const x(p.u());
    Natural const y(p.v());
    return Mat2{f[0].eval(x, y), f[1].eval(x, y), f[2].eval(x, y), f[3].eval(x, y)};
}

} // namespace matmonoid
