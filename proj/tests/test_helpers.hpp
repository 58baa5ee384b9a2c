#pragma once

#include <string>
#include <vector>

#include "mmorder/rational.hpp"
#include "mmorder/space.hpp"

namespace mmtest {

inline mm::Rat Q(const std::string& s) { return mm::parse_rational(s); }

// A line space with the absolute-value metric at the given coordinates.
inline mm::FiniteMMSpace line_space(const std::string& label,
                                    const std::vector<mm::Rat>& coords,
                                    const std::vector<mm::Rat>& mass) {
    mm::FiniteMMSpace X;
    X.label = label;
    const int n = static_cast<int>(coords.size());
    X.dist.assign(n, std::vector<mm::Rat>(n, mm::Rat(0)));
    for (int i = 0; i < n; ++i) {
        X.points.push_back(mm::format_rational(coords[i]));
        X.mass.push_back(mass[i]);
        for (int j = 0; j < n; ++j) X.dist[i][j] = mm::rat_abs(coords[i] - coords[j]);
    }
    return X;
}

// Two points at the given distance.
inline mm::FiniteMMSpace two_point_space(const std::string& label, const mm::Rat& d,
                                         const mm::Rat& mass0) {
    mm::FiniteMMSpace X;
    X.label = label;
    X.points = {"a", "b"};
    X.dist = {{mm::Rat(0), d}, {d, mm::Rat(0)}};
    X.mass = {mass0, mm::Rat(1) - mass0};
    return X;
}

inline mm::FiniteMMSpace point_space(const std::string& label = "pt") {
    mm::FiniteMMSpace X;
    X.label = label;
    X.points = {"*"};
    X.dist = {{mm::Rat(0)}};
    X.mass = {mm::Rat(1)};
    return X;
}

}  // namespace mmtest
