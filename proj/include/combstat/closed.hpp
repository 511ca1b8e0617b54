#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "combstat/exact.hpp"

namespace combstat {

enum class SequenceId { Catalan, Narayana, LittleSchroeder, NoncrossingT, NoncrossingTPrime, Harmonic };

std::string_view sequence_name(SequenceId id);
SequenceId parse_sequence(std::string_view name);

Rational sequence_value(SequenceId seq, long n, long k = 0);

// Memoized for the recurrence-defined sequences; safe to call concurrently.
BigInt catalan(long n);
BigInt narayana(long n, long k);
BigInt little_schroeder(long n);
BigInt noncrossing_t(long n);
BigInt noncrossing_t_prime(long n);
Rational harmonic(long n);

enum class AvgFormulaId {
  BinaryLeaf,
  BinaryAbscissa,
  DyckVertex,
  DyckUpstep,
  DyckDownstep,
  SchroederLeaf,
  NoncrossingNode,
  IncreasingLeaf,
  IncreasingInternal,
};

std::string_view formula_name(AvgFormulaId id);
// Smallest position index of the averaged statistic.
int formula_first_index(AvgFormulaId id);
// Largest position index at size n.
long formula_last_index(AvgFormulaId id, long n);

Rational exact_average(AvgFormulaId f, long n, long r);
ExactScalar fixed_r_limit_average(AvgFormulaId f, long r);
// Approximate; evaluated in double precision.
double growing_r_average(AvgFormulaId f, long n, long r);

enum class UniformId { BinaryLeaf, DyckArea, DyckUpstep, NoncrossingNode };
std::string_view uniform_name(UniformId id);
Rational uniform_statistic_average(UniformId u, long n);

// Coefficient identities behind the averages; the *_sum forms are the summation paths.
BigInt delta(long r, long n);
BigInt coef_dB(long n, long r);
BigInt coef_dB_sum(long n, long r);
BigInt coef_dD(long n, long r);
BigInt coef_dD_sum(long n, long r);
BigInt coef_dU(long n, long r);
BigInt coef_dU_sum(long n, long r);
Rational coef_dA(long n, long r);
BigInt coef_dG(long n, long r);
BigInt coef_dG_sum(long n, long r);
BigInt total_dG_at_one(long n);

// (lhs, rhs) pairs, equal when the identity holds.
std::pair<BigInt, BigInt> schroeder_convolution(long n);
std::pair<BigInt, BigInt> noncrossing_convolution(long n);
std::pair<BigInt, BigInt> upstep_leaf_relation(long n, long r);
// Second closed form of the fixed-r Schroeder average.
Quad2 schroeder_fixed_r_closed(long r);

struct Table2Row {
  std::string label;
  int first_r = 0;
  std::vector<ExactScalar> values;  // r = first_r .. 7
};

std::vector<Table2Row> table2(int max_r = 7);

}  // namespace combstat
