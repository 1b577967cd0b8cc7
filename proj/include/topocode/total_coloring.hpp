#pragma once

#include <cstdint>
#include <vector>

#include "topocode/linform.hpp"

namespace topocode {

// Colors indexed by vertex id and by position in Graph::edges.
struct TotalColoring {
    std::vector<LinForm> v;
    std::vector<LinForm> e;

    static TotalColoring plain(const std::vector<std::int64_t>& vv, const std::vector<std::int64_t>& ee) {
        TotalColoring c;
        for (auto x : vv) c.v.push_back(LinForm::plain(x));
        for (auto x : ee) c.e.push_back(LinForm::plain(x));
        return c;
    }

    // True when every color is a plain integer (no k part).
    bool integral() const {
        for (const auto& x : v)
            if (x.k != 0) return false;
        for (const auto& x : e)
            if (x.k != 0) return false;
        return true;
    }

    TotalColoring eval(std::int64_t k0, std::int64_t d0) const {
        TotalColoring c;
        for (const auto& x : v) c.v.push_back(LinForm::plain(x.eval(k0, d0)));
        for (const auto& x : e) c.e.push_back(LinForm::plain(x.eval(k0, d0)));
        return c;
    }

    friend bool operator==(const TotalColoring&, const TotalColoring&) = default;
    friend auto operator<=>(const TotalColoring&, const TotalColoring&) = default;
};

}  // namespace topocode
