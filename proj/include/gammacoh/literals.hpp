#pragma once

// Text literals for cohomology classes, used by the CLI and its tests:
//   alpha:n=<k>;edges=i-j,...     basis class with trivial coefficients
//   alphasgn:n=<k>;edges=i-j,...  basis class with sign coefficients

#include <string>
#include <utility>
#include <vector>

#include "cup.hpp"
#include "graph.hpp"

namespace gcoh {

inline CohomClass parse_class_literal(const std::string& text) {
    Sector sector;
    std::string enc;
    if (text.rfind("alpha:", 0) == 0) {
        sector = Sector::trivial;
        enc = text.substr(6);
    } else if (text.rfind("alphasgn:", 0) == 0) {
        sector = Sector::sign;
        enc = text.substr(9);
    } else {
        throw std::invalid_argument("class literal must start with alpha: or alphasgn:");
    }
    return alpha_class(parse_graph(enc), sector);
}

inline std::string format_class_literal(Sector sector, const Graph& g) {
    return (sector == Sector::trivial ? "alpha:" : "alphasgn:") + format_graph(g);
}

// (class literal, exact rational coefficient) pairs, in key order
inline std::vector<std::pair<std::string, std::string>>
class_terms(const CohomClass& c) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& [key, coef] : c.coeff)
        out.emplace_back(format_class_literal(c.sector, Graph(c.n, key)),
                         coef.get_str());
    return out;
}

} // namespace gcoh
