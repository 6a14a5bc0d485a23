// Generated by tools/gen_factor_terms.py -- do not edit by hand.
// Term tables for the abstract-factor derivative bounds of F(x,u):
// each row is coeff = num/den * 3^(pow3/3), an x-monomial degree,
// and the multiset of bounded factors (powers indexed by factor_id).
#pragma once

#include <array>
#include <cstdint>

namespace hillconv {

enum class factor_id : int {
    a0 = 0,
    a0_x = 1,
    a0_u = 2,
    a0_xx = 3,
    a0_xu = 4,
    a1 = 5,
    a1_u = 6,
    a2 = 7,
    a2_u = 8,
    a3 = 9,
    a3_x = 10,
    a3_xx = 11,
    a4 = 12,
    a4_x = 13,
    a4_xx = 14,
};

inline constexpr int factor_id_count = 15;

struct factor_term {
    long long num;
    long long den;
    int pow3;   // extra 3^(pow3/3), pow3 in {0,1,2}
    int xdeg;   // monomial degree in x, always <= 0 here
    std::array<std::uint8_t, factor_id_count> powers;
};

inline constexpr std::array<factor_term, 67> du_F_terms{{
    {-4, 1, 0, 0, {{0, 1, 1, 0, 0, 1, 0, 1, 0, 2, 0, 0, 1, 0, 0}}},
    {8, 1, 0, 0, {{0, 1, 1, 0, 0, 2, 0, 0, 0, 2, 0, 0, 0, 0, 0}}},
    {-4, 1, 0, 0, {{1, 0, 0, 0, 1, 1, 0, 1, 0, 2, 0, 0, 1, 0, 0}}},
    {8, 1, 0, 0, {{1, 0, 0, 0, 1, 2, 0, 0, 0, 2, 0, 0, 0, 0, 0}}},
    {-8, 1, 0, 0, {{1, 0, 1, 0, 0, 1, 0, 1, 0, 1, 1, 0, 1, 0, 0}}},
    {-4, 1, 0, 0, {{1, 0, 1, 0, 0, 1, 0, 1, 0, 2, 0, 0, 0, 1, 0}}},
    {16, 1, 0, 0, {{1, 0, 1, 0, 0, 2, 0, 0, 0, 1, 1, 0, 0, 0, 0}}},
    {-4, 1, 0, 0, {{1, 1, 0, 0, 0, 0, 1, 1, 0, 2, 0, 0, 1, 0, 0}}},
    {-4, 1, 0, 0, {{1, 1, 0, 0, 0, 1, 0, 0, 1, 2, 0, 0, 1, 0, 0}}},
    {16, 1, 0, 0, {{1, 1, 0, 0, 0, 1, 1, 0, 0, 2, 0, 0, 0, 0, 0}}},
    {-4, 1, 0, 0, {{2, 0, 0, 0, 0, 0, 1, 1, 0, 1, 1, 0, 1, 0, 0}}},
    {-2, 1, 0, 0, {{2, 0, 0, 0, 0, 0, 1, 1, 0, 2, 0, 0, 0, 1, 0}}},
    {-4, 1, 0, 0, {{2, 0, 0, 0, 0, 1, 0, 0, 1, 1, 1, 0, 1, 0, 0}}},
    {-2, 1, 0, 0, {{2, 0, 0, 0, 0, 1, 0, 0, 1, 2, 0, 0, 0, 1, 0}}},
    {16, 1, 0, 0, {{2, 0, 0, 0, 0, 1, 1, 0, 0, 1, 1, 0, 0, 0, 0}}},
    {-6, 1, 1, -2, {{0, 0, 0, 0, 1, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0}}},
    {-6, 1, 1, -2, {{0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0}}},
    {-6, 1, 1, -2, {{0, 1, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0}}},
    {-6, 1, 1, -2, {{0, 1, 1, 0, 0, 2, 0, 0, 0, 2, 0, 0, 0, 0, 0}}},
    {-6, 1, 1, -2, {{1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0}}},
    {-6, 1, 1, -2, {{1, 0, 0, 0, 1, 2, 0, 0, 0, 2, 0, 0, 0, 0, 0}}},
    {-12, 1, 1, -2, {{1, 0, 1, 0, 0, 2, 0, 0, 0, 1, 1, 0, 0, 0, 0}}},
    {-12, 1, 1, -2, {{1, 1, 0, 0, 0, 1, 1, 0, 0, 2, 0, 0, 0, 0, 0}}},
    {-12, 1, 1, -2, {{2, 0, 0, 0, 0, 1, 1, 0, 0, 1, 1, 0, 0, 0, 0}}},
    {-6, 1, 0, -3, {{0, 0, 0, 0, 1, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0}}},
    {-6, 1, 0, -3, {{0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0}}},
    {12, 1, 1, -3, {{0, 0, 1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0}}},
    {-6, 1, 0, -3, {{0, 1, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0}}},
    {-16, 1, 0, -3, {{0, 1, 1, 0, 0, 2, 0, 0, 0, 2, 0, 0, 0, 0, 0}}},
    {-6, 1, 0, -3, {{1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0}}},
    {12, 1, 1, -3, {{1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0}}},
    {-16, 1, 0, -3, {{1, 0, 0, 0, 1, 2, 0, 0, 0, 2, 0, 0, 0, 0, 0}}},
    {-32, 1, 0, -3, {{1, 0, 1, 0, 0, 2, 0, 0, 0, 1, 1, 0, 0, 0, 0}}},
    {12, 1, 1, -3, {{1, 0, 1, 0, 0, 2, 0, 0, 0, 2, 0, 0, 0, 0, 0}}},
    {-32, 1, 0, -3, {{1, 1, 0, 0, 0, 1, 1, 0, 0, 2, 0, 0, 0, 0, 0}}},
    {-32, 1, 0, -3, {{2, 0, 0, 0, 0, 1, 1, 0, 0, 1, 1, 0, 0, 0, 0}}},
    {12, 1, 1, -3, {{2, 0, 0, 0, 0, 1, 1, 0, 0, 2, 0, 0, 0, 0, 0}}},
    {-2, 1, 2, -4, {{0, 0, 0, 0, 1, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0}}},
    {-2, 1, 2, -4, {{0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0}}},
    {18, 1, 0, -4, {{0, 0, 1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0}}},
    {-2, 1, 2, -4, {{0, 1, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0}}},
    {-2, 1, 2, -4, {{1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0}}},
    {18, 1, 0, -4, {{1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0}}},
    {48, 1, 0, -4, {{1, 0, 1, 0, 0, 2, 0, 0, 0, 2, 0, 0, 0, 0, 0}}},
    {48, 1, 0, -4, {{2, 0, 0, 0, 0, 1, 1, 0, 0, 2, 0, 0, 0, 0, 0}}},
    {-2, 1, 1, -5, {{0, 0, 0, 0, 1, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0}}},
    {-2, 1, 1, -5, {{0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0}}},
    {8, 1, 2, -5, {{0, 0, 1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0}}},
    {-2, 1, 1, -5, {{0, 1, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0}}},
    {36, 1, 1, -5, {{0, 1, 1, 0, 0, 2, 0, 0, 0, 2, 0, 0, 0, 0, 0}}},
    {-2, 1, 1, -5, {{1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0}}},
    {8, 1, 2, -5, {{1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0}}},
    {36, 1, 1, -5, {{1, 0, 0, 0, 1, 2, 0, 0, 0, 2, 0, 0, 0, 0, 0}}},
    {72, 1, 1, -5, {{1, 0, 1, 0, 0, 2, 0, 0, 0, 1, 1, 0, 0, 0, 0}}},
    {72, 1, 1, -5, {{1, 1, 0, 0, 0, 1, 1, 0, 0, 2, 0, 0, 0, 0, 0}}},
    {72, 1, 1, -5, {{2, 0, 0, 0, 0, 1, 1, 0, 0, 1, 1, 0, 0, 0, 0}}},
    {10, 1, 1, -6, {{0, 0, 1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0}}},
    {-26, 1, 0, -6, {{0, 1, 1, 0, 0, 2, 0, 0, 0, 2, 0, 0, 0, 0, 0}}},
    {10, 1, 1, -6, {{1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0}}},
    {-26, 1, 0, -6, {{1, 0, 0, 0, 1, 2, 0, 0, 0, 2, 0, 0, 0, 0, 0}}},
    {-52, 1, 0, -6, {{1, 0, 1, 0, 0, 2, 0, 0, 0, 1, 1, 0, 0, 0, 0}}},
    {-180, 1, 1, -6, {{1, 0, 1, 0, 0, 2, 0, 0, 0, 2, 0, 0, 0, 0, 0}}},
    {-52, 1, 0, -6, {{1, 1, 0, 0, 0, 1, 1, 0, 0, 2, 0, 0, 0, 0, 0}}},
    {-52, 1, 0, -6, {{2, 0, 0, 0, 0, 1, 1, 0, 0, 1, 1, 0, 0, 0, 0}}},
    {-180, 1, 1, -6, {{2, 0, 0, 0, 0, 1, 1, 0, 0, 2, 0, 0, 0, 0, 0}}},
    {156, 1, 0, -7, {{1, 0, 1, 0, 0, 2, 0, 0, 0, 2, 0, 0, 0, 0, 0}}},
    {156, 1, 0, -7, {{2, 0, 0, 0, 0, 1, 1, 0, 0, 2, 0, 0, 0, 0, 0}}},
}};

inline constexpr std::array<factor_term, 75> dx_F_terms{{
    {-4, 1, 0, 0, {{0, 2, 0, 0, 0, 1, 0, 1, 0, 2, 0, 0, 1, 0, 0}}},
    {8, 1, 0, 0, {{0, 2, 0, 0, 0, 2, 0, 0, 0, 2, 0, 0, 0, 0, 0}}},
    {-4, 1, 0, 0, {{1, 0, 0, 1, 0, 1, 0, 1, 0, 2, 0, 0, 1, 0, 0}}},
    {8, 1, 0, 0, {{1, 0, 0, 1, 0, 2, 0, 0, 0, 2, 0, 0, 0, 0, 0}}},
    {-16, 1, 0, 0, {{1, 1, 0, 0, 0, 1, 0, 1, 0, 1, 1, 0, 1, 0, 0}}},
    {-8, 1, 0, 0, {{1, 1, 0, 0, 0, 1, 0, 1, 0, 2, 0, 0, 0, 1, 0}}},
    {32, 1, 0, 0, {{1, 1, 0, 0, 0, 2, 0, 0, 0, 1, 1, 0, 0, 0, 0}}},
    {-4, 1, 0, 0, {{2, 0, 0, 0, 0, 1, 0, 1, 0, 0, 2, 0, 1, 0, 0}}},
    {-4, 1, 0, 0, {{2, 0, 0, 0, 0, 1, 0, 1, 0, 1, 0, 1, 1, 0, 0}}},
    {-8, 1, 0, 0, {{2, 0, 0, 0, 0, 1, 0, 1, 0, 1, 1, 0, 0, 1, 0}}},
    {-2, 1, 0, 0, {{2, 0, 0, 0, 0, 1, 0, 1, 0, 2, 0, 0, 0, 0, 1}}},
    {8, 1, 0, 0, {{2, 0, 0, 0, 0, 2, 0, 0, 0, 0, 2, 0, 0, 0, 0}}},
    {8, 1, 0, 0, {{2, 0, 0, 0, 0, 2, 0, 0, 0, 1, 0, 1, 0, 0, 0}}},
    {-6, 1, 1, -2, {{0, 0, 0, 1, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0}}},
    {-12, 1, 1, -2, {{0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0}}},
    {-6, 1, 1, -2, {{0, 2, 0, 0, 0, 2, 0, 0, 0, 2, 0, 0, 0, 0, 0}}},
    {-6, 1, 1, -2, {{1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0}}},
    {-6, 1, 1, -2, {{1, 0, 0, 1, 0, 2, 0, 0, 0, 2, 0, 0, 0, 0, 0}}},
    {-24, 1, 1, -2, {{1, 1, 0, 0, 0, 2, 0, 0, 0, 1, 1, 0, 0, 0, 0}}},
    {-6, 1, 1, -2, {{2, 0, 0, 0, 0, 2, 0, 0, 0, 0, 2, 0, 0, 0, 0}}},
    {-6, 1, 1, -2, {{2, 0, 0, 0, 0, 2, 0, 0, 0, 1, 0, 1, 0, 0, 0}}},
    {-6, 1, 0, -3, {{0, 0, 0, 1, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0}}},
    {-12, 1, 0, -3, {{0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0}}},
    {24, 1, 1, -3, {{0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0}}},
    {-16, 1, 0, -3, {{0, 2, 0, 0, 0, 2, 0, 0, 0, 2, 0, 0, 0, 0, 0}}},
    {-6, 1, 0, -3, {{1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0}}},
    {24, 1, 1, -3, {{1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0}}},
    {-16, 1, 0, -3, {{1, 0, 0, 1, 0, 2, 0, 0, 0, 2, 0, 0, 0, 0, 0}}},
    {-64, 1, 0, -3, {{1, 1, 0, 0, 0, 2, 0, 0, 0, 1, 1, 0, 0, 0, 0}}},
    {24, 1, 1, -3, {{1, 1, 0, 0, 0, 2, 0, 0, 0, 2, 0, 0, 0, 0, 0}}},
    {-16, 1, 0, -3, {{2, 0, 0, 0, 0, 2, 0, 0, 0, 0, 2, 0, 0, 0, 0}}},
    {-16, 1, 0, -3, {{2, 0, 0, 0, 0, 2, 0, 0, 0, 1, 0, 1, 0, 0, 0}}},
    {24, 1, 1, -3, {{2, 0, 0, 0, 0, 2, 0, 0, 0, 1, 1, 0, 0, 0, 0}}},
    {54, 1, 1, -4, {{0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}}},
    {-2, 1, 2, -4, {{0, 0, 0, 1, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0}}},
    {-4, 1, 2, -4, {{0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0}}},
    {36, 1, 0, -4, {{0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0}}},
    {-2, 1, 2, -4, {{1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0}}},
    {36, 1, 0, -4, {{1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0}}},
    {-36, 1, 1, -4, {{1, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0}}},
    {96, 1, 0, -4, {{1, 1, 0, 0, 0, 2, 0, 0, 0, 2, 0, 0, 0, 0, 0}}},
    {96, 1, 0, -4, {{2, 0, 0, 0, 0, 2, 0, 0, 0, 1, 1, 0, 0, 0, 0}}},
    {-18, 1, 1, -4, {{2, 0, 0, 0, 0, 2, 0, 0, 0, 2, 0, 0, 0, 0, 0}}},
    {144, 1, 0, -5, {{0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}}},
    {-2, 1, 1, -5, {{0, 0, 0, 1, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0}}},
    {-4, 1, 1, -5, {{0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0}}},
    {16, 1, 2, -5, {{0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0}}},
    {36, 1, 1, -5, {{0, 2, 0, 0, 0, 2, 0, 0, 0, 2, 0, 0, 0, 0, 0}}},
    {-2, 1, 1, -5, {{1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0}}},
    {16, 1, 2, -5, {{1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0}}},
    {-72, 1, 0, -5, {{1, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0}}},
    {36, 1, 1, -5, {{1, 0, 0, 1, 0, 2, 0, 0, 0, 2, 0, 0, 0, 0, 0}}},
    {144, 1, 1, -5, {{1, 1, 0, 0, 0, 2, 0, 0, 0, 1, 1, 0, 0, 0, 0}}},
    {36, 1, 1, -5, {{2, 0, 0, 0, 0, 2, 0, 0, 0, 0, 2, 0, 0, 0, 0}}},
    {36, 1, 1, -5, {{2, 0, 0, 0, 0, 2, 0, 0, 0, 1, 0, 1, 0, 0, 0}}},
    {-96, 1, 0, -5, {{2, 0, 0, 0, 0, 2, 0, 0, 0, 2, 0, 0, 0, 0, 0}}},
    {100, 1, 2, -6, {{0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}}},
    {20, 1, 1, -6, {{0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0}}},
    {-26, 1, 0, -6, {{0, 2, 0, 0, 0, 2, 0, 0, 0, 2, 0, 0, 0, 0, 0}}},
    {20, 1, 1, -6, {{1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0}}},
    {-40, 1, 2, -6, {{1, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0}}},
    {-26, 1, 0, -6, {{1, 0, 0, 1, 0, 2, 0, 0, 0, 2, 0, 0, 0, 0, 0}}},
    {-104, 1, 0, -6, {{1, 1, 0, 0, 0, 2, 0, 0, 0, 1, 1, 0, 0, 0, 0}}},
    {-360, 1, 1, -6, {{1, 1, 0, 0, 0, 2, 0, 0, 0, 2, 0, 0, 0, 0, 0}}},
    {-26, 1, 0, -6, {{2, 0, 0, 0, 0, 2, 0, 0, 0, 0, 2, 0, 0, 0, 0}}},
    {-26, 1, 0, -6, {{2, 0, 0, 0, 0, 2, 0, 0, 0, 1, 0, 1, 0, 0, 0}}},
    {-360, 1, 1, -6, {{2, 0, 0, 0, 0, 2, 0, 0, 0, 1, 1, 0, 0, 0, 0}}},
    {-540, 1, 1, -7, {{0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}}},
    {-60, 1, 1, -7, {{1, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0}}},
    {312, 1, 0, -7, {{1, 1, 0, 0, 0, 2, 0, 0, 0, 2, 0, 0, 0, 0, 0}}},
    {312, 1, 0, -7, {{2, 0, 0, 0, 0, 2, 0, 0, 0, 1, 1, 0, 0, 0, 0}}},
    {540, 1, 1, -7, {{2, 0, 0, 0, 0, 2, 0, 0, 0, 2, 0, 0, 0, 0, 0}}},
    {-1134, 1, 0, -8, {{0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}}},
    {-546, 1, 0, -8, {{2, 0, 0, 0, 0, 2, 0, 0, 0, 2, 0, 0, 0, 0, 0}}},
    {840, 1, 2, -9, {{0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}}},
}};

}  // namespace hillconv
