// Reference values for n = 1..23, entered twice from the source tables: once
// row-wise and once column-wise. The static_asserts below compare the two
// transcriptions entry by entry at compile time, so a typo in either copy
// stops the build.
#pragma once

#include <cstdint>

namespace golden {

inline constexpr int kMaxN = 23;

struct DimsRow {          // D, U, n(n-1)/2 + 1, P
    int n;
    std::int64_t D, U, eq2, P;
};

struct LowerBoundsRow {   // D, E, G, H
    int n;
    std::int64_t D, E, G, H;
};

// transcription one: row-wise
inline constexpr DimsRow kTable1[kMaxN] = {
    {1, 1, 1, 1, 1},        {2, 2, 2, 2, 2},        {3, 3, 3, 4, 3},
    {4, 5, 5, 7, 5},        {5, 7, 7, 11, 7},       {6, 11, 11, 16, 11},
    {7, 13, 13, 22, 15},    {8, 19, 19, 29, 22},    {9, 23, 23, 37, 30},
    {10, 29, 29, 46, 42},   {11, 35, 35, 56, 56},   {12, 45, 45, 67, 77},
    {13, 51, 51, 79, 101},  {14, 62, 62, 92, 135},  {15, 69, 69, 106, 176},
    {16, 79, 79, 121, 231}, {17, 90, 90, 137, 297}, {18, 106, 106, 154, 385},
    {19, 118, 119, 172, 490}, {20, 134, 135, 191, 627}, {21, 146, 146, 211, 792},
    {22, 161, 161, 232, 1002}, {23, 176, 176, 254, 1255},
};

inline constexpr LowerBoundsRow kTable2[kMaxN] = {
    {1, 1, 1, 0, 0},       {2, 2, 2, 1, 1},       {3, 3, 3, 1, 1},
    {4, 5, 5, 3, 3},       {5, 7, 7, 4, 4},       {6, 11, 9, 4, 4},
    {7, 13, 13, 7, 7},     {8, 19, 18, 13, 11},   {9, 23, 21, 13, 13},
    {10, 29, 27, 18, 18},  {11, 35, 34, 25, 19},  {12, 45, 39, 32, 19},
    {13, 51, 46, 32, 25},  {14, 62, 54, 32, 32},  {15, 69, 61, 40, 40},
    {16, 79, 72, 49, 43},  {17, 90, 83, 52, 52},  {18, 106, 92, 62, 62},
    {19, 118, 106, 73, 73}, {20, 134, 118, 85, 85}, {21, 146, 130, 102, 89},
    {22, 161, 145, 112, 102}, {23, 176, 162, 127, 116},
};

// transcription two: column-wise
namespace second_transcription {

inline constexpr std::int64_t kD[kMaxN] = {
    1, 2, 3, 5, 7, 11, 13, 19, 23, 29, 35, 45, 51, 62,
    69, 79, 90, 106, 118, 134, 146, 161, 176};
inline constexpr std::int64_t kU[kMaxN] = {
    1, 2, 3, 5, 7, 11, 13, 19, 23, 29, 35, 45, 51, 62,
    69, 79, 90, 106, 119, 135, 146, 161, 176};
inline constexpr std::int64_t kEq2[kMaxN] = {
    1, 2, 4, 7, 11, 16, 22, 29, 37, 46, 56, 67, 79, 92,
    106, 121, 137, 154, 172, 191, 211, 232, 254};
inline constexpr std::int64_t kP[kMaxN] = {
    1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135,
    176, 231, 297, 385, 490, 627, 792, 1002, 1255};
inline constexpr std::int64_t kE[kMaxN] = {
    1, 2, 3, 5, 7, 9, 13, 18, 21, 27, 34, 39, 46, 54,
    61, 72, 83, 92, 106, 118, 130, 145, 162};
inline constexpr std::int64_t kG[kMaxN] = {
    0, 1, 1, 3, 4, 4, 7, 13, 13, 18, 25, 32, 32, 32,
    40, 49, 52, 62, 73, 85, 102, 112, 127};
inline constexpr std::int64_t kH[kMaxN] = {
    0, 1, 1, 3, 4, 4, 7, 11, 13, 18, 19, 19, 25, 32,
    40, 43, 52, 62, 73, 85, 89, 102, 116};

}  // namespace second_transcription

namespace detail {

constexpr bool transcriptions_agree()
{
    namespace second = second_transcription;
    for (int i = 0; i < kMaxN; ++i) {
        if (kTable1[i].n != i + 1 || kTable2[i].n != i + 1) return false;
        if (kTable1[i].D != second::kD[i]) return false;
        if (kTable1[i].U != second::kU[i]) return false;
        if (kTable1[i].eq2 != second::kEq2[i]) return false;
        if (kTable1[i].P != second::kP[i]) return false;
        if (kTable2[i].D != second::kD[i]) return false;
        if (kTable2[i].E != second::kE[i]) return false;
        if (kTable2[i].G != second::kG[i]) return false;
        if (kTable2[i].H != second::kH[i]) return false;
        // eq2 really is n(n-1)/2 + 1
        std::int64_t n = i + 1;
        if (kTable1[i].eq2 != n * (n - 1) / 2 + 1) return false;
    }
    return true;
}

}  // namespace detail

static_assert(detail::transcriptions_agree(),
              "golden table transcriptions disagree");

}  // namespace golden
