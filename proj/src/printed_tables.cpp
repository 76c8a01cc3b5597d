#include "higher_jones/fixtures.hpp"

// Transcription of the six published tables. Blank cells are omitted; where a
// small-r row repeats a label across columns the repeat is kept as its own cell.

namespace hj {

namespace {

constexpr PrintedCell kCells[] = {
    {Table::T1, 1, 1, "r", "1", 1},
    {Table::T1, 2, 1, "lambda2", "1", 1},
    {Table::T1, 3, 1, "mu1", "1", 1},
    {Table::T1, 4, 1, "nu1", "1", 1},
    {Table::T1, 1, 2, "r", "2", 1},
    {Table::T1, 2, 2, "lambda1", "2", 1},
    {Table::T1, 2, 2, "lambda2", "1.1", 1},
    {Table::T1, 3, 2, "mu1", "2", 1},
    {Table::T1, 3, 2, "mu2", "1.1", 1},
    {Table::T1, 4, 2, "nu1", "1.1", 1},
    {Table::T1, 1, 3, "r", "3", 1},
    {Table::T1, 2, 3, "lambda1", "3", 1},
    {Table::T1, 2, 3, "lambda2", "2.1", 2},
    {Table::T1, 3, 3, "mu1", "2.1", 2},
    {Table::T1, 3, 3, "mu2", "1.1.1", 1},
    {Table::T1, 4, 3, "nu1", "1.1.1", 1},
    {Table::T1, 1, 4, "r", "4", 1},
    {Table::T1, 2, 4, "lambda1", "3.1", 3},
    {Table::T1, 2, 4, "lambda2", "2.2", 2},
    {Table::T1, 3, 4, "mu1", "2.2", 2},
    {Table::T1, 3, 4, "mu2", "2.1.1", 3},
    {Table::T1, 4, 4, "nu1", "1.1.1.1", 1},
    {Table::T1, 1, 5, "r", "5", 1},
    {Table::T1, 2, 5, "lambda1", "4.1", 3},
    {Table::T1, 2, 5, "lambda2", "3.2", 5},
    {Table::T1, 3, 5, "mu1", "3.1.1", 3},
    {Table::T1, 3, 5, "mu2", "2.2.1", 5},
    {Table::T1, 4, 5, "nu1", "2.1.1.1", 1},
    {Table::T1, 1, 6, "r", "6", 1},
    {Table::T1, 2, 6, "lambda1", "4.2", 8},
    {Table::T1, 2, 6, "lambda2", "3.3", 5},
    {Table::T1, 3, 6, "mu1", "3.2.1", 8},
    {Table::T1, 3, 6, "mu2", "2.2.2", 5},
    {Table::T1, 4, 6, "nu1", "2.2.1.1", 1},
    {Table::T1, 1, 7, "r", "7", 1},
    {Table::T1, 2, 7, "lambda1", "5.2", 8},
    {Table::T1, 2, 7, "lambda2", "4.3", 13},
    {Table::T1, 3, 7, "mu1", "3.3.1", 8},
    {Table::T1, 3, 7, "mu2", "3.2.2", 13},
    {Table::T1, 4, 7, "nu1", "2.2.2.1", 1},
    {Table::T1, 1, 8, "r", "8", 1},
    {Table::T1, 2, 8, "lambda1", "5.3", 21},
    {Table::T1, 2, 8, "lambda2", "4.4", 13},
    {Table::T1, 3, 8, "mu1", "4.2.2", 13},
    {Table::T1, 3, 8, "mu2", "3.3.2", 21},
    {Table::T1, 4, 8, "nu1", "2.2.2.2", 1},
    {Table::T1, 1, 9, "r", "9", 1},
    {Table::T1, 2, 9, "lambda1", "6.3", 21},
    {Table::T1, 2, 9, "lambda2", "5.4", 34},
    {Table::T1, 3, 9, "mu1", "4.3.2", 34},
    {Table::T1, 3, 9, "mu2", "3.3.3", 21},
    {Table::T1, 4, 9, "nu1", "3.2.2.2", 1},
    {Table::T1, 1, 10, "r", "10", 1},
    {Table::T1, 2, 10, "lambda1", "6.4", 55},
    {Table::T1, 2, 10, "lambda2", "5.5", 34},
    {Table::T1, 3, 10, "mu1", "4.4.2", 34},
    {Table::T1, 3, 10, "mu2", "4.3.3", 55},
    {Table::T1, 4, 10, "nu1", "3.3.2.2", 1},
    {Table::T2, 1, 1, "lambda3", "1", 1},
    {Table::T2, 2, 1, "mu3", "1.0", 1},
    {Table::T2, 3, 1, "nu", "1.0.0", 1},
    {Table::T2, 1, 2, "lambda2", "2", 1},
    {Table::T2, 1, 2, "lambda3", "0", 1},
    {Table::T2, 2, 2, "mu1", "2.0", 1},
    {Table::T2, 2, 2, "mu2", "1.1", 1},
    {Table::T2, 2, 2, "mu3", "0.0", 1},
    {Table::T2, 3, 2, "nu", "0.0.0", 1},
    {Table::T2, 1, 3, "lambda2", "3", 1},
    {Table::T2, 1, 3, "lambda3", "1", 2},
    {Table::T2, 2, 3, "mu1", "3.0", 1},
    {Table::T2, 2, 3, "mu2", "2.1", 2},
    {Table::T2, 2, 3, "mu3", "1.0", 3},
    {Table::T2, 3, 3, "nu", "1.0.0", 1},
    {Table::T2, 1, 4, "lambda1", "4", 1},
    {Table::T2, 1, 4, "lambda2", "2", 3},
    {Table::T2, 1, 4, "lambda3", "0", 2},
    {Table::T2, 2, 4, "mu1", "2.0", 6},
    {Table::T2, 2, 4, "mu2", "1.1", 5},
    {Table::T2, 2, 4, "mu3", "0.0", 3},
    {Table::T2, 3, 4, "nu", "0.0.0", 1},
    {Table::T2, 1, 5, "lambda1", "5", 1},
    {Table::T2, 1, 5, "lambda2", "3", 4},
    {Table::T2, 1, 5, "lambda3", "1", 5},
    {Table::T2, 2, 5, "mu1", "3.0", 6},
    {Table::T2, 2, 5, "mu2", "2.1", 11},
    {Table::T2, 2, 5, "mu3", "1.0", 14},
    {Table::T2, 3, 5, "nu", "1.0.0", 1},
    {Table::T2, 1, 6, "lambda1", "4", 5},
    {Table::T2, 1, 6, "lambda2", "2", 9},
    {Table::T2, 1, 6, "lambda3", "0", 5},
    {Table::T2, 2, 6, "mu1", "2.0", 31},
    {Table::T2, 2, 6, "mu2", "1.1", 25},
    {Table::T2, 2, 6, "mu3", "0.0", 14},
    {Table::T2, 3, 6, "nu", "0.0.0", 1},
    {Table::T2, 1, 7, "lambda1", "5", 5},
    {Table::T2, 1, 7, "lambda2", "3", 14},
    {Table::T2, 1, 7, "lambda3", "1", 14},
    {Table::T2, 2, 7, "mu1", "3.0", 31},
    {Table::T2, 2, 7, "mu2", "2.1", 56},
    {Table::T2, 2, 7, "mu3", "1.0", 70},
    {Table::T2, 3, 7, "nu", "1.0.0", 1},
    {Table::T2, 1, 8, "lambda1", "4", 19},
    {Table::T2, 1, 8, "lambda2", "2", 28},
    {Table::T2, 1, 8, "lambda3", "0", 14},
    {Table::T2, 2, 8, "mu1", "2.0", 157},
    {Table::T2, 2, 8, "mu2", "1.1", 126},
    {Table::T2, 2, 8, "mu3", "0.0", 70},
    {Table::T2, 3, 8, "nu", "0.0.0", 1},
    {Table::T2, 1, 9, "lambda1", "5", 19},
    {Table::T2, 1, 9, "lambda2", "3", 47},
    {Table::T2, 1, 9, "lambda3", "1", 42},
    {Table::T2, 2, 9, "mu1", "3.0", 157},
    {Table::T2, 2, 9, "mu2", "2.1", 283},
    {Table::T2, 2, 9, "mu3", "1.0", 353},
    {Table::T2, 3, 9, "nu", "1.0.0", 1},
    {Table::T2, 1, 10, "lambda1", "4", 66},
    {Table::T2, 1, 10, "lambda2", "2", 89},
    {Table::T2, 1, 10, "lambda3", "0", 42},
    {Table::T2, 2, 10, "mu1", "2.0", 793},
    {Table::T2, 2, 10, "mu2", "1.1", 636},
    {Table::T2, 2, 10, "mu3", "0.0", 353},
    {Table::T2, 3, 10, "nu", "0.0.0", 1},
    {Table::T3, 4, 1, "lambda9", "1.0", 1},
    {Table::T3, 4, 2, "lambda6", "2.0", 1},
    {Table::T3, 4, 2, "lambda7", "1.1", 1},
    {Table::T3, 4, 2, "lambda8", "1.-1", 1},
    {Table::T3, 4, 2, "lambda9", "0.0", 1},
    {Table::T3, 4, 3, "lambda6", "3.0", 1},
    {Table::T3, 4, 3, "lambda7", "2.1", 2},
    {Table::T3, 4, 3, "lambda8", "2.-1", 2},
    {Table::T3, 4, 3, "lambda9", "1.0", 4},
    {Table::T3, 4, 4, "lambda1", "4.0", 1},
    {Table::T3, 4, 4, "lambda2", "2.2", 2},
    {Table::T3, 4, 4, "lambda3", "2.-2", 2},
    {Table::T3, 4, 4, "lambda4", "3.1", 3},
    {Table::T3, 4, 4, "lambda5", "3.-1", 3},
    {Table::T3, 4, 4, "lambda6", "2.0", 9},
    {Table::T3, 4, 4, "lambda7", "1.1", 6},
    {Table::T3, 4, 4, "lambda8", "1.-1", 6},
    {Table::T3, 4, 4, "lambda9", "0.0", 4},
    {Table::T3, 4, 5, "lambda1", "5.0", 1},
    {Table::T3, 4, 5, "lambda2", "3.2", 5},
    {Table::T3, 4, 5, "lambda3", "3.-2", 5},
    {Table::T3, 4, 5, "lambda4", "4.1", 4},
    {Table::T3, 4, 5, "lambda5", "4.-1", 4},
    {Table::T3, 4, 5, "lambda6", "3.0", 16},
    {Table::T3, 4, 5, "lambda7", "2.1", 20},
    {Table::T3, 4, 5, "lambda8", "2.-1", 20},
    {Table::T3, 4, 5, "lambda9", "1.0", 25},
    {Table::T3, 4, 6, "lambda1", "4.0", 25},
    {Table::T3, 4, 6, "lambda2", "2.2", 25},
    {Table::T3, 4, 6, "lambda3", "2.-2", 25},
    {Table::T3, 4, 6, "lambda4", "3.1", 45},
    {Table::T3, 4, 6, "lambda5", "3.-1", 45},
    {Table::T3, 4, 6, "lambda6", "2.0", 81},
    {Table::T3, 4, 6, "lambda7", "1.1", 45},
    {Table::T3, 4, 6, "lambda8", "1.-1", 45},
    {Table::T3, 4, 6, "lambda9", "0.0", 25},
    {Table::T3, 4, 7, "lambda1", "5.0", 25},
    {Table::T3, 4, 7, "lambda2", "3.2", 70},
    {Table::T3, 4, 7, "lambda3", "3.-2", 70},
    {Table::T3, 4, 7, "lambda4", "4.1", 70},
    {Table::T3, 4, 7, "lambda5", "4.-1", 70},
    {Table::T3, 4, 7, "lambda6", "3.0", 196},
    {Table::T3, 4, 7, "lambda7", "2.1", 196},
    {Table::T3, 4, 7, "lambda8", "2.-1", 196},
    {Table::T3, 4, 7, "lambda9", "1.0", 196},
    {Table::T3, 4, 8, "lambda1", "4.0", 361},
    {Table::T3, 4, 8, "lambda2", "2.2", 266},
    {Table::T3, 4, 8, "lambda3", "2.-2", 266},
    {Table::T3, 4, 8, "lambda4", "3.1", 532},
    {Table::T3, 4, 8, "lambda5", "3.-1", 532},
    {Table::T3, 4, 8, "lambda6", "2.0", 784},
    {Table::T3, 4, 8, "lambda7", "1.1", 392},
    {Table::T3, 4, 8, "lambda8", "1.-1", 392},
    {Table::T3, 4, 8, "lambda9", "0.0", 196},
    {Table::T3, 4, 9, "lambda1", "5.0", 361},
    {Table::T3, 4, 9, "lambda2", "3.2", 798},
    {Table::T3, 4, 9, "lambda3", "3.-2", 798},
    {Table::T3, 4, 9, "lambda4", "4.1", 893},
    {Table::T3, 4, 9, "lambda5", "4.-1", 893},
    {Table::T3, 4, 9, "lambda6", "3.0", 2209},
    {Table::T3, 4, 9, "lambda7", "2.1", 1974},
    {Table::T3, 4, 9, "lambda8", "2.-1", 1974},
    {Table::T3, 4, 9, "lambda9", "1.0", 1764},
    {Table::T3, 4, 10, "lambda1", "4.0", 4356},
    {Table::T3, 4, 10, "lambda2", "2.2", 2772},
    {Table::T3, 4, 10, "lambda3", "2.-2", 2772},
    {Table::T3, 4, 10, "lambda4", "3.1", 5874},
    {Table::T3, 4, 10, "lambda5", "3.-1", 5874},
    {Table::T3, 4, 10, "lambda6", "2.0", 7921},
    {Table::T3, 4, 10, "lambda7", "1.1", 3738},
    {Table::T3, 4, 10, "lambda8", "1.-1", 3738},
    {Table::T3, 4, 10, "lambda9", "0.0", 1764},
    {Table::T3, 6, 1, "mu5", "1.0.0", 1},
    {Table::T3, 6, 2, "mu3", "2.0.0", 1},
    {Table::T3, 6, 2, "mu4", "1.1.0", 1},
    {Table::T3, 6, 2, "mu5", "0.0.0", 1},
    {Table::T3, 6, 3, "mu1", "3.0.0", 1},
    {Table::T3, 6, 3, "mu2", "2.1.0", 2},
    {Table::T3, 6, 3, "mu3", "1.1.1", 1},
    {Table::T3, 6, 3, "mu4", "1.1.-1", 1},
    {Table::T3, 6, 3, "mu5", "1.0.0", 3},
    {Table::T3, 6, 4, "mu1", "2.1.1", 2},
    {Table::T3, 6, 4, "mu2", "2.1.-1", 3},
    {Table::T3, 6, 4, "mu3", "2.0.0", 6},
    {Table::T3, 6, 4, "mu4", "1.1.0", 7},
    {Table::T3, 6, 4, "mu5", "0.0.0", 3},
    {Table::T3, 6, 5, "mu1", "3.0.0", 6},
    {Table::T3, 6, 5, "mu2", "2.1.0", 18},
    {Table::T3, 6, 5, "mu3", "1.1.1", 9},
    {Table::T3, 6, 5, "mu4", "1.1.-1", 10},
    {Table::T3, 6, 5, "mu5", "1.0.0", 16},
    {Table::T3, 6, 6, "mu1", "2.1.1", 27},
    {Table::T3, 6, 6, "mu2", "2.1.-1", 28},
    {Table::T3, 6, 6, "mu3", "2.0.0", 40},
    {Table::T3, 6, 6, "mu4", "1.1.0", 53},
    {Table::T3, 6, 6, "mu5", "0.0.0", 16},
    {Table::T3, 6, 7, "mu1", "3.0.0", 40},
    {Table::T3, 6, 7, "mu2", "2.1.0", 148},
    {Table::T3, 6, 7, "mu3", "1.1.1", 80},
    {Table::T3, 6, 7, "mu4", "1.1.-1", 81},
    {Table::T3, 6, 7, "mu5", "1.0.0", 109},
    {Table::T3, 6, 8, "mu1", "2.1.1", 228},
    {Table::T3, 6, 8, "mu2", "2.1.-1", 229},
    {Table::T3, 6, 8, "mu3", "2.0.0", 297},
    {Table::T3, 6, 8, "mu4", "1.1.0", 418},
    {Table::T3, 6, 8, "mu5", "0.0.0", 109},
    {Table::T3, 6, 9, "mu1", "3.0.0", 297},
    {Table::T3, 6, 9, "mu2", "2.1.0", 1172},
    {Table::T3, 6, 9, "mu3", "1.1.1", 646},
    {Table::T3, 6, 9, "mu4", "1.1.-1", 647},
    {Table::T3, 6, 9, "mu5", "1.0.0", 824},
    {Table::T3, 6, 10, "mu1", "2.1.1", 1828},
    {Table::T3, 6, 10, "mu2", "2.1.-1", 1829},
    {Table::T3, 6, 10, "mu3", "2.0.0", 2293},
    {Table::T3, 6, 10, "mu4", "1.1.0", 3289},
    {Table::T3, 6, 10, "mu5", "0.0.0", 824},
    {Table::T4, 10, 1, "lambda7", "1.0.0.0.0", 1},
    {Table::T4, 10, 2, "lambda5", "2.0.0.0.0", 1},
    {Table::T4, 10, 2, "lambda6", "1.1.0.0.0", 1},
    {Table::T4, 10, 2, "lambda7", "0.0.0.0.0", 1},
    {Table::T4, 10, 3, "lambda4", "3.0.0.0.0", 1},
    {Table::T4, 10, 3, "lambda5", "2.1.0.0.0", 2},
    {Table::T4, 10, 3, "lambda6", "1.1.1.0.0", 1},
    {Table::T4, 10, 3, "lambda7", "1.0.0.0.0", 3},
    {Table::T4, 10, 4, "lambda3", "2.1.1.0.0", 3},
    {Table::T4, 10, 4, "lambda4", "1.1.1.1.0", 1},
    {Table::T4, 10, 4, "lambda5", "2.0.0.0.0", 6},
    {Table::T4, 10, 4, "lambda6", "1.1.0.0.0", 6},
    {Table::T4, 10, 4, "lambda7", "0.0.0.0.0", 3},
    {Table::T4, 10, 5, "lambda1", "1.1.1.1.-1", 1},
    {Table::T4, 10, 5, "lambda2", "2.1.1.1.0", 4},
    {Table::T4, 10, 5, "lambda3", "1.1.1.1.1", 1},
    {Table::T4, 10, 5, "lambda4", "3.0.0.0.0", 6},
    {Table::T4, 10, 5, "lambda5", "2.1.0.0.0", 15},
    {Table::T4, 10, 5, "lambda6", "1.1.1.0.0", 10},
    {Table::T4, 10, 5, "lambda7", "1.0.0.0.0", 15},
    {Table::T4, 10, 6, "lambda1", "2.1.1.1.-1", 5},
    {Table::T4, 10, 6, "lambda2", "2.1.1.1.1", 5},
    {Table::T4, 10, 6, "lambda3", "2.1.1.0.0", 29},
    {Table::T4, 10, 6, "lambda4", "1.1.1.1.0", 16},
    {Table::T4, 10, 6, "lambda5", "2.0.0.0.0", 36},
    {Table::T4, 10, 6, "lambda6", "1.1.0.0.0", 40},
    {Table::T4, 10, 6, "lambda7", "0.0.0.0.0", 15},
    {Table::T4, 10, 7, "lambda1", "1.1.1.1.-1", 21},
    {Table::T4, 10, 7, "lambda2", "2.1.1.1.0", 55},
    {Table::T4, 10, 7, "lambda3", "1.1.1.1.1", 21},
    {Table::T4, 10, 7, "lambda4", "3.0.0.0.0", 36},
    {Table::T4, 10, 7, "lambda5", "2.1.0.0.0", 105},
    {Table::T4, 10, 7, "lambda6", "1.1.1.0.0", 85},
    {Table::T4, 10, 7, "lambda7", "1.0.0.0.0", 91},
    {Table::T4, 10, 8, "lambda1", "2.1.1.1.-1", 76},
    {Table::T4, 10, 8, "lambda2", "2.1.1.1.1", 76},
    {Table::T4, 10, 8, "lambda3", "2.1.1.0.0", 245},
    {Table::T4, 10, 8, "lambda4", "1.1.1.1.0", 97},
    {Table::T4, 10, 8, "lambda5", "2.0.0.0.0", 232},
    {Table::T4, 10, 8, "lambda6", "1.1.0.0.0", 281},
    {Table::T4, 10, 8, "lambda7", "0.0.0.0.0", 91},
    {Table::T4, 10, 9, "lambda1", "1.1.1.1.-1", 173},
    {Table::T4, 10, 9, "lambda2", "2.1.1.1.0", 494},
    {Table::T4, 10, 9, "lambda3", "1.1.1.1.1", 173},
    {Table::T4, 10, 9, "lambda4", "3.0.0.0.0", 232},
    {Table::T4, 10, 9, "lambda5", "2.1.0.0.0", 568},
    {Table::T4, 10, 9, "lambda6", "1.1.1.0.0", 623},
    {Table::T4, 10, 9, "lambda7", "1.0.0.0.0", 604},
    {Table::T4, 10, 10, "lambda1", "2.1.1.1.-1", 667},
    {Table::T4, 10, 10, "lambda2", "2.1.1.1.1", 667},
    {Table::T4, 10, 10, "lambda3", "2.1.1.0.0", 1685},
    {Table::T4, 10, 10, "lambda4", "1.1.1.1.0", 840},
    {Table::T4, 10, 10, "lambda5", "2.0.0.0.0", 1404},
    {Table::T4, 10, 10, "lambda6", "1.1.0.0.0", 1795},
    {Table::T4, 10, 10, "lambda7", "0.0.0.0.0", 604},
    {Table::T5, 1, 1, "lambda3", "1", 1},
    {Table::T5, 1, 1, "mu3", "1", 1},
    {Table::T5, 1, 1, "eta3", "1", 1},
    {Table::T5, 1, 2, "lambda2", "2", 1},
    {Table::T5, 2, 2, "lambda3", "1.1", 1},
    {Table::T5, 1, 2, "mu2", "2", 1},
    {Table::T5, 2, 2, "mu3", "1.1", 1},
    {Table::T5, 1, 2, "eta1", "2", 1},
    {Table::T5, 2, 2, "eta3", "1.1", 1},
    {Table::T5, 1, 3, "lambda2", "3", 1},
    {Table::T5, 2, 3, "lambda3", "2.1", 2},
    {Table::T5, 1, 3, "mu1", "3", 1},
    {Table::T5, 2, 3, "mu3", "2.1", 2},
    {Table::T5, 3, 3, "mu4", "1.1.1", 1},
    {Table::T5, 2, 3, "eta1", "2.1", 2},
    {Table::T5, 3, 3, "eta2", "1.1.1", 1},
    {Table::T5, 1, 4, "lambda1", "4", 1},
    {Table::T5, 2, 4, "lambda2", "3.1", 3},
    {Table::T5, 2, 4, "lambda3", "2.2", 2},
    {Table::T5, 2, 4, "mu1", "3.1", 3},
    {Table::T5, 2, 4, "mu2", "2.2", 2},
    {Table::T5, 3, 4, "mu3", "2.1.1", 3},
    {Table::T5, 2, 4, "eta1", "2.2", 2},
    {Table::T5, 3, 4, "eta2", "2.1.1", 3},
    {Table::T5, 4, 4, "eta3", "1.1.1.1", 1},
    {Table::T5, 2, 5, "lambda1", "4.1", 4},
    {Table::T5, 2, 5, "lambda2", "3.2", 5},
    {Table::T5, 2, 5, "mu1", "3.2", 5},
    {Table::T5, 3, 5, "mu2", "3.1.1", 6},
    {Table::T5, 3, 5, "mu3", "2.2.1", 5},
    {Table::T5, 3, 5, "eta1", "2.2.1", 5},
    {Table::T5, 4, 5, "eta2", "2.1.1.1", 4},
    {Table::T5, 2, 6, "lambda1", "5.1", 4},
    {Table::T5, 2, 6, "lambda2", "4.2", 9},
    {Table::T5, 2, 6, "lambda3", "3.3", 5},
    {Table::T5, 3, 6, "mu1", "4.1.1", 6},
    {Table::T5, 2, 6, "mu2", "3.3", 5},
    {Table::T5, 3, 6, "mu3", "3.2.1", 16},
    {Table::T5, 3, 6, "mu4", "2.2.2", 5},
    {Table::T5, 4, 6, "eta1", "3.1.1.1", 4},
    {Table::T5, 3, 6, "eta2", "2.2.2", 5},
    {Table::T5, 4, 6, "eta3", "2.2.1.1", 9},
    {Table::T5, 2, 7, "lambda1", "5.2", 13},
    {Table::T5, 2, 7, "lambda2", "4.3", 14},
    {Table::T5, 3, 7, "mu1", "4.2.1", 22},
    {Table::T5, 3, 7, "mu2", "3.3.1", 5},
    {Table::T5, 3, 7, "mu3", "3.2.2", 21},
    {Table::T5, 4, 7, "eta1", "3.2.1.1", 13},
    {Table::T5, 4, 7, "eta2", "2.2.2.1", 14},
    {Table::T5, 2, 8, "lambda1", "6.2", 13},
    {Table::T5, 2, 8, "lambda2", "5.3", 27},
    {Table::T5, 2, 8, "lambda3", "4.4", 14},
    {Table::T5, 3, 8, "mu1", "4.3.1", 27},
    {Table::T5, 3, 8, "mu2", "4.2.2", 43},
    {Table::T5, 3, 8, "mu3", "3.3.2", 26},
    {Table::T5, 4, 8, "eta1", "3.3.1.1", 13},
    {Table::T5, 4, 8, "eta2", "3.2.2.1", 27},
    {Table::T5, 4, 8, "eta3", "2.2.2.2", 14},
    {Table::T5, 2, 9, "lambda1", "6.3", 40},
    {Table::T5, 2, 9, "lambda2", "5.4", 41},
    {Table::T5, 3, 9, "mu1", "5.2.2", 43},
    {Table::T5, 3, 9, "mu2", "4.4.1", 27},
    {Table::T5, 3, 9, "mu3", "4.3.2", 96},
    {Table::T5, 3, 9, "mu4", "3.3.3", 26},
    {Table::T5, 4, 9, "eta1", "3.3.2.1", 40},
    {Table::T5, 4, 9, "eta2", "3.2.2.2", 41},
    {Table::T5, 2, 10, "lambda1", "7.3", 40},
    {Table::T5, 2, 10, "lambda2", "6.4", 81},
    {Table::T5, 2, 10, "lambda3", "5.5", 41},
    {Table::T5, 3, 10, "mu1", "5.3.2", 139},
    {Table::T5, 3, 10, "mu2", "4.4.2", 123},
    {Table::T5, 3, 10, "mu3", "4.3.3", 122},
    {Table::T5, 4, 10, "eta1", "4.2.2.2", 41},
    {Table::T5, 4, 10, "eta2", "3.3.3.1", 40},
    {Table::T5, 4, 10, "eta3", "3.3.2.2", 81},
    {Table::T6, 1, 1, "lambda2", "1", 1},
    {Table::T6, 1, 2, "lambda1", "2", 1},
    {Table::T6, 1, 2, "lambda2", "0", 1},
    {Table::T6, 1, 3, "lambda1", "3", 1},
    {Table::T6, 1, 3, "lambda2", "1", 2},
    {Table::T6, 1, 4, "lambda1", "2", 3},
    {Table::T6, 1, 4, "lambda2", "0", 2},
    {Table::T6, 1, 5, "lambda1", "3", 3},
    {Table::T6, 1, 5, "lambda2", "1", 5},
    {Table::T6, 1, 6, "lambda1", "2", 8},
    {Table::T6, 1, 6, "lambda2", "0", 5},
    {Table::T6, 1, 7, "lambda1", "3", 8},
    {Table::T6, 1, 7, "lambda2", "1", 13},
    {Table::T6, 1, 8, "lambda1", "2", 21},
    {Table::T6, 1, 8, "lambda2", "0", 13},
    {Table::T6, 1, 9, "lambda1", "3", 21},
    {Table::T6, 1, 9, "lambda2", "1", 44},
    {Table::T6, 1, 10, "lambda1", "2", 65},
    {Table::T6, 1, 10, "lambda2", "0", 44},
    {Table::T6, 2, 1, "mu2", "1.0", 1},
    {Table::T6, 2, 2, "mu1", "2.0", 1},
    {Table::T6, 2, 2, "mu2", "2.0", 1},
    {Table::T6, 2, 2, "mu3", "1.1", 1},
    {Table::T6, 2, 2, "mu4", "0.0", 1},
    {Table::T6, 2, 3, "mu1", "2.1", 2},
    {Table::T6, 2, 3, "mu2", "1.0", 3},
    {Table::T6, 2, 4, "mu1", "2.2", 2},
    {Table::T6, 2, 4, "mu2", "2.0", 5},
    {Table::T6, 2, 4, "mu3", "1.1", 5},
    {Table::T6, 2, 4, "mu4", "0.0", 3},
    {Table::T6, 2, 5, "mu1", "2.1", 12},
    {Table::T6, 2, 5, "mu2", "1.0", 13},
    {Table::T6, 2, 6, "mu1", "2.2", 12},
    {Table::T6, 2, 6, "mu2", "2.0", 25},
    {Table::T6, 2, 6, "mu3", "1.1", 25},
    {Table::T6, 2, 6, "mu4", "0.0", 13},
    {Table::T6, 2, 7, "mu1", "2.1", 62},
    {Table::T6, 2, 7, "mu2", "1.0", 63},
    {Table::T6, 2, 8, "mu1", "2.2", 62},
    {Table::T6, 2, 8, "mu2", "2.0", 125},
    {Table::T6, 2, 8, "mu3", "1.1", 125},
    {Table::T6, 2, 8, "mu4", "0.0", 63},
    {Table::T6, 2, 9, "mu1", "2.1", 312},
    {Table::T6, 2, 9, "mu2", "1.0", 313},
    {Table::T6, 2, 10, "mu1", "2.2", 312},
    {Table::T6, 2, 10, "mu2", "2.0", 625},
    {Table::T6, 2, 10, "mu3", "1.1", 625},
    {Table::T6, 2, 10, "mu4", "0.0", 313},
    {Table::T6, 3, 1, "nu2", "1.0.0", 1},
    {Table::T6, 3, 2, "nu1", "1.1.0", 1},
    {Table::T6, 3, 2, "nu2", "0.0.0", 1},
    {Table::T6, 3, 3, "nu1", "1.1.1", 1},
    {Table::T6, 3, 3, "nu2", "1.0.0", 2},
    {Table::T6, 3, 4, "nu1", "1.1.0", 3},
    {Table::T6, 3, 4, "nu2", "0.0.0", 2},
    {Table::T6, 3, 5, "nu1", "1.1.1", 3},
    {Table::T6, 3, 5, "nu2", "1.0.0", 5},
    {Table::T6, 3, 6, "nu1", "1.1.0", 8},
    {Table::T6, 3, 6, "nu2", "0.0.0", 5},
    {Table::T6, 3, 7, "nu1", "1.1.1", 8},
    {Table::T6, 3, 7, "nu2", "1.0.0", 13},
    {Table::T6, 3, 8, "nu1", "1.1.0", 21},
    {Table::T6, 3, 8, "nu2", "0.0.0", 13},
    {Table::T6, 3, 9, "nu1", "1.1.1", 21},
    {Table::T6, 3, 9, "nu2", "1.0.0", 34},
    {Table::T6, 3, 10, "nu1", "1.1.0", 55},
    {Table::T6, 3, 10, "nu2", "0.0.0", 34},
};

struct ErratumSeed {
    Table table;
    int r;
    std::string_view column;
    long printed;
    long computed;
};

constexpr ErratumSeed kErrata[] = {
    {Table::T3, 4, "mu1", 2, 3},
    {Table::T3, 5, "mu2", 18, 19},
    {Table::T3, 5, "mu3", 9, 10},
    {Table::T3, 6, "mu1", 27, 29},
    {Table::T3, 6, "mu2", 28, 29},
    {Table::T3, 6, "mu3", 40, 41},
    {Table::T3, 6, "mu4", 53, 55},
    {Table::T3, 7, "mu1", 40, 41},
    {Table::T3, 7, "mu2", 148, 154},
    {Table::T3, 7, "mu3", 80, 84},
    {Table::T3, 7, "mu4", 81, 84},
    {Table::T3, 7, "mu5", 109, 112},
    {Table::T3, 8, "mu1", 228, 238},
    {Table::T3, 8, "mu2", 229, 238},
    {Table::T3, 8, "mu3", 297, 307},
    {Table::T3, 8, "mu4", 418, 434},
    {Table::T3, 8, "mu5", 109, 112},
    {Table::T3, 9, "mu1", 297, 307},
    {Table::T3, 9, "mu2", 1172, 1217},
    {Table::T3, 9, "mu3", 646, 672},
    {Table::T3, 9, "mu4", 647, 672},
    {Table::T3, 9, "mu5", 824, 853},
    {Table::T3, 10, "mu1", 1828, 1889},
    {Table::T3, 10, "mu2", 1829, 1889},
    {Table::T3, 10, "mu3", 2293, 2377},
    {Table::T3, 10, "mu4", 3289, 3414},
    {Table::T3, 10, "mu5", 824, 853},
    {Table::T4, 8, "lambda4", 97, 182},
    {Table::T4, 9, "lambda1", 173, 258},
    {Table::T4, 9, "lambda2", 494, 579},
    {Table::T4, 9, "lambda3", 173, 258},
    {Table::T4, 9, "lambda5", 568, 758},
    {Table::T4, 9, "lambda6", 623, 708},
    {Table::T4, 10, "lambda1", 667, 837},
    {Table::T4, 10, "lambda2", 667, 837},
    {Table::T4, 10, "lambda3", 1685, 2045},
    {Table::T4, 10, "lambda4", 840, 1803},
    {Table::T4, 10, "lambda5", 1404, 1594},
    {Table::T4, 10, "lambda6", 1795, 2070},
    {Table::T5, 7, "mu2", 5, 21},
    {Table::T5, 8, "mu1", 27, 43},
    {Table::T5, 8, "mu3", 26, 42},
    {Table::T5, 9, "mu2", 27, 43},
    {Table::T5, 9, "mu3", 96, 128},
    {Table::T5, 9, "mu4", 26, 42},
    {Table::T5, 10, "mu1", 139, 171},
    {Table::T5, 10, "mu2", 123, 171},
    {Table::T5, 10, "mu3", 122, 170},
    {Table::T6, 9, "lambda2", 44, 34},
    {Table::T6, 10, "lambda1", 65, 55},
    {Table::T6, 10, "lambda2", 44, 34},
};

}  // namespace

std::span<const PrintedCell> printed_cells() { return kCells; }

std::vector<Erratum> recorded_errata() {
    std::vector<Erratum> out;
    for (const auto& e : kErrata) out.push_back({e.table, e.r, std::string(e.column), e.printed, e.computed});
    return out;
}

}  // namespace hj
