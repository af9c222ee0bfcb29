#pragma once

// Reference values computed offline with 50-digit arithmetic (mpmath):
// the Matsubara sum was summed term by term until the terms fell below
// 1e-40, and the closed form was evaluated independently; the two agree to
// at least 30 digits at every point listed.

namespace thermgrav::oracle {

// Ratio-convention correction factor G(y).
inline constexpr double g_1e_6 = 0.99999999999936000000000060;
inline constexpr double g_1e_4 = 0.99999999360000005999999903;
inline constexpr double g_1e_3 = 0.99999936000059999964272482;
inline constexpr double g_0_01 = 0.99993600599964276602184776;
inline constexpr double g_0_1 = 0.99365964421693929609705470;
inline constexpr double g_0_5 = 0.87244996364360294168537283;
inline constexpr double g_1 = 0.71332143552482420895806113;
inline constexpr double g_2 = 0.59986966201617464577557721;
inline constexpr double g_3 = 0.65045036175670575363937346;
inline constexpr double g_4_75 = 0.52328147138899898449276443;
inline constexpr double g_5 = 0.45844076268301681100816216;
inline constexpr double g_10 = 0.0023443728214801203723533485;
inline constexpr double g_30 = 1.0347717558909357823265730e-17;
inline constexpr double g_100 = 2.5269030519517163870958947e-75;

// Interior extrema of G.
inline constexpr double g_min_y = 2.2863987571682343;
inline constexpr double g_min = 0.58802998158544524948;
inline constexpr double g_max_y = 3.6098211951605727;
inline constexpr double g_max = 0.69798446540340217346;

// Largest y with G(y) = threshold.
inline constexpr double y_star_0_5 = 4.8407061025754504319;
inline constexpr double y_star_0_65 = 4.1692416766480591771;
inline constexpr double y_star_0_3 = 5.6359685975103427416;
inline constexpr double y_star_0_1 = 6.8705229667096750862;
inline constexpr double y_star_0_9 = 0.43020824503789391509;

// CODATA 2018 derived quantities.
inline constexpr double thermal_length_2_7K = 1.34980163089448205e-4;  // m
inline constexpr double polarizability_1kg = 92137060.1887742953;

}  // namespace thermgrav::oracle
