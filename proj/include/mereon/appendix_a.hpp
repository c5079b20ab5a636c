#pragma once

#include <array>

namespace mereon {

// The 74 integer vertex triples of the M144p, by FCC shell:
// 6 at r^2=16, 8 at r^2=12, 12 at r^2=8, 48 at r^2=14.
inline constexpr std::array<std::array<int, 3>, 74> kM144pVertices = {{
    {-4, 0, 0}, {0, -4, 0}, {0, 0, -4}, {0, 0, 4}, {0, 4, 0}, {4, 0, 0},
    {-2, -2, -2}, {-2, -2, 2}, {-2, 2, -2}, {-2, 2, 2}, {2, -2, -2}, {2, -2, 2},
    {2, 2, -2}, {2, 2, 2}, {-2, -2, 0}, {-2, 0, -2}, {-2, 0, 2}, {-2, 2, 0},
    {0, -2, -2}, {0, -2, 2}, {0, 2, -2}, {0, 2, 2}, {2, -2, 0}, {2, 0, -2},
    {2, 0, 2}, {2, 2, 0}, {-3, -2, -1}, {-3, -2, 1}, {-3, -1, -2}, {-3, -1, 2},
    {-3, 1, -2}, {-3, 1, 2}, {-3, 2, -1}, {-3, 2, 1}, {-2, -3, -1}, {-2, -3, 1},
    {-2, -1, -3}, {-2, -1, 3}, {-2, 1, -3}, {-2, 1, 3}, {-2, 3, -1}, {-2, 3, 1},
    {-1, -3, -2}, {-1, -3, 2}, {-1, -2, -3}, {-1, -2, 3}, {-1, 2, -3}, {-1, 2, 3},
    {-1, 3, -2}, {-1, 3, 2}, {1, -3, -2}, {1, -3, 2}, {1, -2, -3}, {1, -2, 3},
    {1, 2, -3}, {1, 2, 3}, {1, 3, -2}, {1, 3, 2}, {2, -3, -1}, {2, -3, 1},
    {2, -1, -3}, {2, -1, 3}, {2, 1, -3}, {2, 1, 3}, {2, 3, -1}, {2, 3, 1},
    {3, -2, -1}, {3, -2, 1}, {3, -1, -2}, {3, -1, 2}, {3, 1, -2}, {3, 1, 2},
    {3, 2, -1}, {3, 2, 1},
}};

}  // namespace mereon
