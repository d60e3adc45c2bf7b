#include "matmonoid/hash.hpp"

#include "matmonoid/error.hpp"
#include "matmonoid/extremal.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <unordered_map>

namespace matmonoid {

HashParams::HashParams(std::uint64_t u, std::uint64_t v, Natural p)
    : u_(u), v_(v), p_(std::move(p)), width_(1) {
    if (u == 0 || v == 0) throw InvalidParams("generator weights u and v must be positive");
    if (!is_prime(p_)) throw InvalidParams("modulus " + p_.get_str() + " is not prime");
    Natural const top = p_ - 1;
    width_ = std::max<std::size_t>(1, (mpz_sizeinbase(top.get_mpz_t(), 2) + 7) / 8);
}

HashState::HashState(HashParams params)
    : params_(std::move(params)), u_mod_(params_.u()), v_mod_(params_.v()) {
    u_mod_ %= params_.p();
    v_mod_ %= params_.p();
}

HashState init(HashParams const& params) { return HashState(params); }

namespace {

// acc <- acc * f(bit) mod p, with u and v already reduced.
void step(Digest& acc, bool bit, Natural const& u, Natural const& v, Natural const& p) {
    if (!bit) {
        // acc * L_u: first column += u * second column
        acc.a += u * acc.b;
        acc.c += u * acc.d;
        mpz_mod(acc.a.get_mpz_t(), acc.a.get_mpz_t(), p.get_mpz_t());
        mpz_mod(acc.c.get_mpz_t(), acc.c.get_mpz_t(), p.get_mpz_t());
    } else {
        // acc * R_v: second column += v * first column
        acc.b += v * acc.a;
        acc.d += v * acc.c;
        mpz_mod(acc.b.get_mpz_t(), acc.b.get_mpz_t(), p.get_mpz_t());
        mpz_mod(acc.d.get_mpz_t(), acc.d.get_mpz_t(), p.get_mpz_t());
    }
}

} // namespace

HashState& HashState::update_bit(bool bit) {
    step(acc_, bit, u_mod_, v_mod_, params_.p());
    ++bits_;
    return *this;
}

HashState& HashState::update_ascii(std::string_view bits) {
    for (char ch : bits) {
        if (ch == '0' || ch == '1')
            update_bit(ch == '1');
        else if (!std::isspace(static_cast<unsigned char>(ch)))
            throw std::invalid_argument(std::string("bit string contains '") + ch + "'");
    }
    return *this;
}

HashState& HashState::update_bytes(std::span<std::uint8_t const> bytes) {
    for (std::uint8_t byte : bytes)
        for (int k = 7; k >= 0; --k) update_bit((byte >> k) & 1U);
    return *this;
}

Digest hash_string(HashParams const& params, std::string_view bits) {
    HashState st(params);
    st.update_ascii(bits);
    return st.digest();
}

Natural det_mod(Digest const& d, Natural const& p) {
    Natural r = d.a * d.d - d.b * d.c;
    mpz_mod(r.get_mpz_t(), r.get_mpz_t(), p.get_mpz_t());
    return r;
}

std::uint64_t bound_n0(HashParams const& params) {
    return collision_horizon(params.monoid(), params.p());
}

std::vector<std::uint8_t> serialize(Digest const& d, HashParams const& params) {
    std::size_t const w = params.field_width();
    std::vector<std::uint8_t> out(4 * w, 0);
    std::size_t field = 0;
    for (Natural const* x : {&d.a, &d.b, &d.c, &d.d}) {
        if (sgn(*x) < 0 || *x >= params.p())
            throw std::invalid_argument("digest entry is not a residue mod p");
        std::size_t count = 0;
        std::vector<std::uint8_t> buf(w, 0);
        mpz_export(buf.data(), &count, 1, 1, 1, 0, x->get_mpz_t());
        // mpz_export writes count bytes most significant first; right-align in the field.
        std::copy(buf.begin(), buf.begin() + count, out.begin() + field * w + (w - count));
        ++field;
    }
    return out;
}

Digest parse_digest(std::span<std::uint8_t const> bytes, HashParams const& params) {
    std::size_t const w = params.field_width();
    if (bytes.size() != 4 * w)
        throw std::invalid_argument("serialized digest must be exactly " + std::to_string(4 * w) + " bytes");
    Digest d;
    std::size_t field = 0;
    for (Natural* x : {&d.a, &d.b, &d.c, &d.d}) {
        mpz_import(x->get_mpz_t(), w, 1, 1, 1, 0, bytes.data() + field * w);
        if (*x >= params.p()) throw std::invalid_argument("serialized field is not a residue mod p");
        ++field;
    }
    return d;
}

std::string to_hex(std::span<std::uint8_t const> bytes) {
    static constexpr char kDigits[] = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (std::uint8_t b : bytes) {
        out.push_back(kDigits[b >> 4]);
        out.push_back(kDigits[b & 0xF]);
    }
    return out;
}

namespace {

std::string bit_string(std::size_t length, std::uint64_t value) {
    std::string s(length, '0');
    for (std::size_t k = 0; k < length; ++k)
        if ((value >> (length - 1 - k)) & 1U) s[k] = '1';
    return s;
}

std::string digest_key(Digest const& d, HashParams const& params) {
    auto const bytes = serialize(d, params);
    return std::string(bytes.begin(), bytes.end());
}

} // namespace

std::optional<std::pair<std::string, std::string>>
exhaustive_collision_check(HashParams const& params, std::size_t max_len, EnumerationLimits const& limits) {
    if (max_len >= 63 || (std::uint64_t{1} << (max_len + 1)) > limits.hash_strings)
        throw LimitExceeded("collision search over lengths 0.." + std::to_string(max_len) + " exceeds " +
                            std::to_string(limits.hash_strings) + " strings");

    Natural const u = Natural(params.u()) % params.p();
    Natural const v = Natural(params.v()) % params.p();

    // seen: digest -> (length, value) of the first string producing it.
    std::unordered_map<std::string, std::pair<std::size_t, std::uint64_t>> seen;
    std::vector<Digest> level{Digest{1, 0, 0, 1}};
    seen.emplace(digest_key(level.front(), params), std::pair{std::size_t{0}, std::uint64_t{0}});

    for (std::size_t len = 1; len <= max_len; ++len) {
        std::vector<Digest> next;
        next.reserve(level.size() * 2);
        for (std::uint64_t j = 0; j < level.size() * 2; ++j) {
            Digest d = level[j >> 1];
            step(d, j & 1U, u, v, params.p());
            auto [it, fresh] = seen.emplace(digest_key(d, params), std::pair{len, j});
            if (!fresh)
                return std::pair{bit_string(it->second.first, it->second.second), bit_string(len, j)};
            next.push_back(std::move(d));
        }
        level = std::move(next);
    }
    return std::nullopt;
}

} // namespace matmonoid
