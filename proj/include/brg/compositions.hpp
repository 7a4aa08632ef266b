#pragma once
// Counting and enumeration of integer compositions (ordered tuples of
// positive integers with a fixed sum) whose parts are constrained to a
// residue class, plus the small indicator functions used everywhere else.

#include <vector>

#include "brg/bigint.hpp"

namespace brg::compositions {

using Count = BigInt;

// binomial(n, k) with the convention that any out-of-range argument
// (n < 0, k < 0 or k > n) yields 0.
Count binomial(long long n, long long k);

// P! / (parts[0]! * parts[1]! * ...) for nonnegative parts summing to P.
Count multinomial(long long p, const std::vector<long long>& parts);

enum class IndicatorKind { Parity, Mod3, Mod4 };

// Parity: 1 iff q is odd. Mod3: 1 iff q is in 3N+2. Mod4: 1 iff q is in 4N+3.
int indicator(IndicatorKind kind, long long q);

// Number of compositions of n into p positive parts of which exactly i are
// odd. Zero whenever n and i differ in parity or the arguments are out of
// range; the degenerate p == 0 case counts the empty composition of 0.
Count count_odd(long long n, long long p, long long i);

// Number of compositions of n into p positive parts of which exactly i lie
// in the class D*N + d, for a modulus D >= 2 and residue 1 <= d <= D - 1.
// count_odd is the (D, d) = (2, 1) specialization.
Count count_residue(long long n, long long p, long long i, int modulus, int residue);

// All compositions of n into p positive parts, in lexicographic order.
// Serves as the brute-force oracle for both counters; refuses n > 25.
std::vector<std::vector<int>> enumerate(int n, int p);

}  // namespace brg::compositions
