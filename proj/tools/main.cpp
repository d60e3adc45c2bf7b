#include "matmonoid/error.hpp"
#include "matmonoid/extremal.hpp"
#include "matmonoid/hash.hpp"
#include "matmonoid/serialize.hpp"
#include "matmonoid/tree.hpp"
#include "matmonoid/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <string>
#include <vector>

namespace mm = matmonoid;

namespace {

constexpr char kVerifyGrids[] =
    "Suites and their fixed grids:\n"
    "  formulas  (u,v) in [1..4]^2, depth 0..max-depth (default 16) vs brute force;\n"
    "            closed forms on (u,v) in [1..3]^2, n = 0..10, rel. error < 1e-9\n"
    "  symmetry  (u,v) in [1..3]^2, depth 1..max-depth (default 12); symbolic checks\n"
    "            on all words of depth <= 10; odd-depth column bound, (u,v) in [1..4]^2\n"
    "  polydom   10^4 random pairs (seed 0x5eedf00d), r = 1..10, n = 1..12, n <= 20\n"
    "  hash      (u,v) in {(1,1),(2,3),(3,2),(2,2)} x p in {101,257,1009}\n";

// Parses a decimal natural; CLI11 reports the message with the flag name.
std::string check_natural(std::string const& s) {
    mm::Natural x;
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || x.set_str(s, 10) != 0)
        return "expected a decimal integer, got '" + s + "'";
    return {};
}

std::string check_prime(std::string const& s) {
    if (auto err = check_natural(s); !err.empty()) return err;
    if (!mm::is_prime(mm::Natural(s))) return s + " is not prime";
    return {};
}

std::string read_input(std::string const& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path, std::ios::binary);
    if (!in) throw mm::Error("cannot open input file '" + path + "'");
    return {std::istreambuf_iterator<char>(in), {}};
}

std::string mat_str(mm::Mat2 const& m) {
    return "[[" + m.a.get_str() + "," + m.b.get_str() + "],[" + m.c.get_str() + "," + m.d.get_str() + "]]";
}

struct Options {
    std::uint64_t u = 0, v = 0;
    std::string p;
    std::uint64_t depth = 0;
    std::optional<std::uint64_t> rows;
    std::string input = "-";
    std::string bits = "ascii01";
    std::string format = "hex";
    std::string method = "lucas";
    std::string suite = "all";
    std::optional<std::size_t> max_depth;
};

void add_uv(CLI::App* cmd, Options& o) {
    cmd->add_option("--u", o.u, "weight of L_u = [[1,0],[u,1]]")->required()->check(CLI::PositiveNumber);
    cmd->add_option("--v", o.v, "weight of R_v = [[1,v],[0,1]]")->required()->check(CLI::PositiveNumber);
}

int run_hash(Options const& o) {
    mm::HashParams const params(o.u, o.v, mm::Natural(o.p));
    mm::HashState st(params);
    std::string const data = read_input(o.input);
    if (o.bits == "ascii01") {
        st.update_ascii(data);
    } else {
        std::vector<std::uint8_t> bytes(data.begin(), data.end());
        st.update_bytes(bytes);
    }
    if (o.format == "json") {
        nlohmann::json j{{"u", o.u}, {"v", o.v}, {"p", params.p().get_str()},
                         {"bits", st.bits_consumed()}, {"digest", mm::to_json(st.digest())}};
        std::cout << j.dump() << '\n';
    } else {
        std::cout << mm::to_hex(mm::serialize(st.digest(), params)) << '\n';
    }
    return 0;
}

int run_mu(Options const& o) {
    mm::MonoidParams const p(o.u, o.v);
    if (o.method == "lucas") {
        std::cout << mm::mu_depth(p, o.depth).get_str() << '\n';
    } else if (o.method == "witness") {
        std::cout << (o.depth == 0 ? mm::Natural(1) : mm::mu(mm::witness(p, o.depth).matrix)).get_str() << '\n';
    } else {
        std::cout << mm::mu_row_bruteforce(p, o.depth, mm::EnumerationLimits::from_env()).get_str() << '\n';
    }
    return 0;
}

int run_witness(Options const& o) {
    if (o.depth == 0) throw mm::InvalidParams("witness needs --depth >= 1");
    auto const w = mm::witness(mm::MonoidParams(o.u, o.v), o.depth);
    if (o.format == "json") {
        std::cout << mm::to_json(w).dump() << '\n';
        return 0;
    }
    std::cout << "word:   " << w.word.str() << '\n'
              << "matrix: " << mat_str(w.matrix) << '\n'
              << "entry:  (" << w.position.row << "," << w.position.col << ") = "
              << mm::entry(w.matrix, w.position).get_str() << '\n';
    return 0;
}

int run_tree(Options const& o) {
    mm::MonoidParams const p(o.u, o.v);
    auto const limits = mm::EnumerationLimits::from_env();
    if (!o.rows) {
        std::cout << mm::to_json(mm::row(mm::Mat2::identity(), p, o.depth, limits)).dump() << '\n';
        return 0;
    }
    nlohmann::json all = nlohmann::json::array();
    for (std::uint64_t n = 0; n < *o.rows; ++n) all.push_back(mm::to_json(mm::row(mm::Mat2::identity(), p, n, limits)));
    std::cout << all.dump() << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact maxima, witnesses and matrix hashing for the monoid generated by "
                 "L_u = [[1,0],[u,1]] and R_v = [[1,v],[0,1]]"};
    app.require_subcommand(1);
    Options o;

    auto* hash = app.add_subcommand("hash", "hash a bit string over SL2(F_p): bit 0 -> L_u, bit 1 -> R_v");
    add_uv(hash, o);
    hash->add_option("--p", o.p, "prime modulus (decimal, any size)")->required()->check(CLI::Validator(check_prime, "PRIME"));
    hash->add_option("--input", o.input, "input file, or - for stdin")->capture_default_str();
    hash->add_option("--bits", o.bits, "ascii01: '0'/'1' characters, whitespace ignored; bytes-msb: raw bytes, MSB first")
        ->check(CLI::IsMember({"ascii01", "bytes-msb"}))
        ->capture_default_str();
    hash->add_option("--format", o.format, "hex: serialized digest; json: residue matrix")
        ->check(CLI::IsMember({"hex", "json"}))
        ->capture_default_str();

    auto* bound = app.add_subcommand("bound", "largest n such that strings of length <= n cannot collide");
    add_uv(bound, o);
    bound->add_option("--p", o.p, "prime modulus")->required()->check(CLI::Validator(check_prime, "PRIME"));

    auto* mu = app.add_subcommand("mu", "largest entry over all depth-n monoid elements");
    add_uv(mu, o);
    mu->add_option("--depth", o.depth, "word length n")->required();
    mu->add_option("--method", o.method, "lucas: O(log n) exact; witness: extremal word; brute: enumerate the row")
        ->check(CLI::IsMember({"lucas", "witness", "brute"}))
        ->capture_default_str();

    auto* wit = app.add_subcommand("witness", "a depth-n word attaining the maximum and the attaining entry");
    add_uv(wit, o);
    wit->add_option("--depth", o.depth, "word length n >= 1")->required();
    wit->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}))->default_val("text");

    auto* tree = app.add_subcommand("tree", "rows of the tree rooted at I2 as JSON");
    add_uv(tree, o);
    auto* depth_opt = tree->add_option("--depth", o.depth, "emit the single row at this depth");
    tree->add_option("--rows", o.rows, "emit rows 0..rows-1 as a JSON array")->excludes(depth_opt);

    auto* verify = app.add_subcommand("verify", "run the property suites and print a pass/fail table");
    verify->footer(kVerifyGrids);
    verify->add_option("--suite", o.suite, "formulas, symmetry, polydom, hash or all")
        ->check(CLI::IsMember({"formulas", "symmetry", "polydom", "hash", "all"}))
        ->capture_default_str();
    verify->add_option("--max-depth", o.max_depth, "depth bound for formulas and symmetry");

    try {
        app.parse(argc, argv);
    } catch (CLI::CallForHelp const& e) {
        return app.exit(e);
    } catch (CLI::CallForAllHelp const& e) {
        return app.exit(e);
    } catch (CLI::ParseError const& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*hash) return run_hash(o);
        if (*bound) {
            std::cout << mm::bound_n0(mm::HashParams(o.u, o.v, mm::Natural(o.p))) << '\n';
            return 0;
        }
        if (*mu) return run_mu(o);
        if (*wit) return run_witness(o);
        if (*tree) return run_tree(o);
        auto const reports = mm::run_suites(o.suite, o.max_depth);
        std::cout << mm::format_report(reports);
        for (auto const& r : reports)
            if (!r.passed()) return 1;
        return 0;
    } catch (std::exception const& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
