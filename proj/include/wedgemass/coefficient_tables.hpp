#pragma once

#include <array>

namespace wedgemass::tables {

// Integer coefficient tables of the closed-form mass rules. Each rule is a
// weighted sum of sampled metric values against one table per sample point,
// scaled by the divisor; keeping entries as exact integers lets the
// regeneration suite compare them bit for bit against analytic integration.

using Mat6i = std::array<std::array<int, 6>, 6>;
using Vec6i = std::array<int, 6>;

// --- constant metric (one sample, the centroid) ---

inline constexpr int kCmDivisor = 72;
inline constexpr Mat6i kCmConsistent = {{
    {4, 2, 2, 2, 1, 1},
    {2, 4, 2, 1, 2, 1},
    {2, 2, 4, 1, 1, 2},
    {2, 1, 1, 4, 2, 2},
    {1, 2, 1, 2, 4, 2},
    {1, 1, 2, 2, 2, 4},
}};

inline constexpr int kCmLumpedDivisor = 6;
inline constexpr Vec6i kCmLumped = {1, 1, 1, 1, 1, 1};

// --- linear metric (four samples) ---

inline constexpr int kLmDivisor = 4320;
inline constexpr std::array<Mat6i, 4> kLmConsistent = {{
    {{
        {244, 98, 98, 62, 19, 19},
        {98, 148, 74, 19, 14, 7},
        {98, 74, 148, 19, 7, 14},
        {62, 19, 19, 4, -22, -22},
        {19, 14, 7, -22, -92, -46},
        {19, 7, 14, -22, -46, -92},
    }},
    {{
        {28, 38, 14, 14, 19, 7},
        {38, 124, 38, 19, 62, 19},
        {14, 38, 28, 7, 19, 14},
        {14, 19, 7, 28, 38, 14},
        {19, 62, 19, 38, 124, 38},
        {7, 19, 14, 14, 38, 28},
    }},
    {{
        {28, 14, 38, 14, 7, 19},
        {14, 28, 38, 7, 14, 19},
        {38, 38, 124, 19, 19, 62},
        {14, 7, 19, 28, 14, 38},
        {7, 14, 19, 14, 28, 38},
        {19, 19, 62, 38, 38, 124},
    }},
    {{
        {-60, -30, -30, 30, 15, 15},
        {-30, -60, -30, 15, 30, 15},
        {-30, -30, -60, 15, 15, 30},
        {30, 15, 15, 180, 90, 90},
        {15, 30, 15, 90, 180, 90},
        {15, 15, 30, 90, 90, 180},
    }},
}};

inline constexpr int kLmLumpedDivisor = 72;
inline constexpr std::array<Vec6i, 4> kLmLumped = {{
    {9, 6, 6, 1, -2, -2},
    {2, 5, 2, 2, 5, 2},
    {2, 2, 5, 2, 2, 5},
    {-1, -1, -1, 7, 7, 7},
}};

// --- exact metric (seven samples: six nodes plus the centroid) ---
//
// Tables of the exact seven-point rule, whose coefficient functions are the
// cardinal interpolants phi_k - (1 - zeta^2)/6 at the nodes and 1 - zeta^2
// at the centroid. The weighted sum reproduces the metric polynomial
// identically, so these mass matrices are exact for every straight-edged
// wedge.

inline constexpr int kExDivisor = 2160;
inline constexpr std::array<Mat6i, 7> kExConsistent = {{
    {{
        {42, 12, 12, 10, 2, 2},
        {12, 6, 3, 2, -2, -1},
        {12, 3, 6, 2, -1, -2},
        {10, 2, 2, 6, 0, 0},
        {2, -2, -1, 0, -6, -3},
        {2, -1, -2, 0, -3, -6},
    }},
    {{
        {6, 12, 3, -2, 2, -1},
        {12, 42, 12, 2, 10, 2},
        {3, 12, 6, -1, 2, -2},
        {-2, 2, -1, -6, 0, -3},
        {2, 10, 2, 0, 6, 0},
        {-1, 2, -2, -3, 0, -6},
    }},
    {{
        {6, 3, 12, -2, -1, 2},
        {3, 6, 12, -1, -2, 2},
        {12, 12, 42, 2, 2, 10},
        {-2, -1, 2, -6, -3, 0},
        {-1, -2, 2, -3, -6, 0},
        {2, 2, 10, 0, 0, 6},
    }},
    {{
        {6, 0, 0, 10, 2, 2},
        {0, -6, -3, 2, -2, -1},
        {0, -3, -6, 2, -1, -2},
        {10, 2, 2, 42, 12, 12},
        {2, -2, -1, 12, 6, 3},
        {2, -1, -2, 12, 3, 6},
    }},
    {{
        {-6, 0, -3, -2, 2, -1},
        {0, 6, 0, 2, 10, 2},
        {-3, 0, -6, -1, 2, -2},
        {-2, 2, -1, 6, 12, 3},
        {2, 10, 2, 12, 42, 12},
        {-1, 2, -2, 3, 12, 6},
    }},
    {{
        {-6, -3, 0, -2, -1, 2},
        {-3, -6, 0, -1, -2, 2},
        {0, 0, 6, 2, 2, 10},
        {-2, -1, 2, 6, 3, 12},
        {-1, -2, 2, 3, 6, 12},
        {2, 2, 10, 12, 12, 42},
    }},
    {{
        {72, 36, 36, 48, 24, 24},
        {36, 72, 36, 24, 48, 24},
        {36, 36, 72, 24, 24, 48},
        {48, 24, 24, 72, 36, 36},
        {24, 48, 24, 36, 72, 36},
        {24, 24, 48, 36, 36, 72},
    }},
}};

inline constexpr int kExLumpedDivisor = 216;
inline constexpr std::array<Vec6i, 7> kExLumped = {{
    {8, 2, 2, 2, -1, -1},
    {2, 8, 2, -1, 2, -1},
    {2, 2, 8, -1, -1, 2},
    {2, -1, -1, 8, 2, 2},
    {-1, 2, -1, 2, 8, 2},
    {-1, -1, 2, 2, 2, 8},
    {24, 24, 24, 24, 24, 24},
}};

// --- legacy seven-point tables ---
//
// An earlier tabulation of the seven-point rule puts the whole centroid
// correction -(1 - zeta^2) on the two apex-node functions instead of
// spreading -(1 - zeta^2)/6 over all six. That variant reproduces constant
// and purely zeta-dependent metrics but misses the xi and eta slopes, so
// it is not exact. The tables are retained for the regeneration audit,
// which certifies them as the exact integrals of that variant's
// coefficient functions.

inline constexpr int kLegacyExDivisor = 720;
inline constexpr std::array<Mat6i, 7> kLegacyExConsistent = {{
    {{
        {6, 0, 0, -2, -2, -2},
        {0, -6, -3, -2, -6, -3},
        {0, -3, -6, -2, -3, -6},
        {-2, -2, -2, -6, -4, -4},
        {-2, -6, -3, -4, -10, -5},
        {-2, -3, -6, -4, -5, -10},
    }},
    {{
        {6, 6, 3, 2, 2, 1},
        {6, 18, 6, 2, 6, 2},
        {3, 6, 6, 1, 2, 2},
        {2, 2, 1, 2, 2, 1},
        {2, 6, 2, 2, 6, 2},
        {1, 2, 2, 1, 2, 2},
    }},
    {{
        {6, 3, 6, 2, 1, 2},
        {3, 6, 6, 1, 2, 2},
        {6, 6, 18, 2, 2, 6},
        {2, 1, 2, 2, 1, 2},
        {1, 2, 2, 1, 2, 2},
        {2, 2, 6, 2, 2, 6},
    }},
    {{
        {-6, -4, -4, -2, -2, -2},
        {-4, -10, -5, -2, -6, -3},
        {-4, -5, -10, -2, -3, -6},
        {-2, -2, -2, 6, 0, 0},
        {-2, -6, -3, 0, -6, -3},
        {-2, -3, -6, 0, -3, -6},
    }},
    {{
        {2, 2, 1, 2, 2, 1},
        {2, 6, 2, 2, 6, 2},
        {1, 2, 2, 1, 2, 2},
        {2, 2, 1, 6, 6, 3},
        {2, 6, 2, 6, 18, 6},
        {1, 2, 2, 3, 6, 6},
    }},
    {{
        {2, 1, 2, 2, 1, 2},
        {1, 2, 2, 1, 2, 2},
        {2, 2, 6, 2, 2, 6},
        {2, 1, 2, 6, 3, 6},
        {1, 2, 2, 3, 6, 6},
        {2, 2, 6, 6, 6, 18},
    }},
    {{
        {24, 12, 12, 16, 8, 8},
        {12, 24, 12, 8, 16, 8},
        {12, 12, 24, 8, 8, 16},
        {16, 8, 8, 24, 12, 12},
        {8, 16, 8, 12, 24, 12},
        {8, 8, 16, 12, 12, 24},
    }},
}};

inline constexpr int kLegacyExLumpedDivisor = 72;
inline constexpr std::array<Vec6i, 7> kLegacyExLumped = {{
    {0, -2, -2, -2, -3, -3},
    {2, 4, 2, 1, 2, 1},
    {2, 2, 4, 1, 1, 2},
    {-2, -3, -3, 0, -2, -2},
    {1, 2, 1, 2, 4, 2},
    {1, 1, 2, 2, 2, 4},
    {8, 8, 8, 8, 8, 8},
}};

}  // namespace wedgemass::tables
