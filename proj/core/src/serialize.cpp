#include "matmonoid/serialize.hpp"

#include <stdexcept>

namespace matmonoid {

namespace {

nlohmann::json square(Natural const& a, Natural const& b, Natural const& c, Natural const& d) {
    return nlohmann::json::array({nlohmann::json::array({a.get_str(), b.get_str()}),
                                  nlohmann::json::array({c.get_str(), d.get_str()})});
}

Natural parse_natural(nlohmann::json const& j) {
    if (!j.is_string()) throw std::invalid_argument("matrix entries must be decimal strings");
    auto const& s = j.get_ref<std::string const&>();
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("matrix entry is not a natural number: " + s);
    return Natural(s);
}

} // namespace

nlohmann::json to_json(Mat2 const& m) { return square(m.a, m.b, m.c, m.d); }

Mat2 mat2_from_json(nlohmann::json const& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_array() || j[0].size() != 2 || !j[1].is_array() ||
        j[1].size() != 2)
        throw std::invalid_argument("matrix must be a 2x2 nested array");
    return Mat2{parse_natural(j[0][0]), parse_natural(j[0][1]), parse_natural(j[1][0]),
                parse_natural(j[1][1])};
}

nlohmann::json to_json(TreeRow const& r) {
    nlohmann::json cells = nlohmann::json::array();
    for (auto const& m : r.cells) cells.push_back(to_json(m));
    return {{"depth", r.depth}, {"cells", std::move(cells)}};
}

nlohmann::json to_json(Digest const& d) { return square(d.a, d.b, d.c, d.d); }

nlohmann::json to_json(Witness const& w) {
    return {{"word", w.word.str()},
            {"depth", w.word.depth()},
            {"matrix", to_json(w.matrix)},
            {"entry", {w.position.row, w.position.col}},
            {"value", entry(w.matrix, w.position).get_str()}};
}

} // namespace matmonoid
