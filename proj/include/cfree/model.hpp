#pragma once

#include "cfree/cumulants.hpp"

#include <map>
#include <string>

namespace cfree {

/// A variable given by its free and c-free cumulant sequences.
struct CFreeSpec {
    int order = 0;  // N: kappa_n, ckappa_n known for n = 1..N
    int dim = 1;
    ScalarSequence kappa;
    MatrixSequence ckappa;
    std::string label;
};

using SpecMap = std::map<std::string, CFreeSpec>;

/// Identity variable: kappa_1 = 1, ckappa_1 = I, higher cumulants zero.
CFreeSpec identity_spec(int order, int dim, const std::string& label);

/// phi of a word in the joint distribution where all mixed free cumulants
/// vanish: the sum over monochromatic non-crossing partitions. O(L^4) interval
/// recursion.
CScalar phi_word(const SpecMap& specs, const Word& w);
CMatrix Phi_word(const SpecMap& specs, const Word& w);

/// Direct enumeration over NC(|w|); the independent oracle for the above.
CScalar phi_word_direct(const SpecMap& specs, const Word& w);
CMatrix Phi_word_direct(const SpecMap& specs, const Word& w);

/// Moments of the product XY: phi((XY)^m), Phi((XY)^m) for m = 1..floor(N/2).
MomentPair product_moments(const CFreeSpec& x, const CFreeSpec& y);

/// Moments of the sum X+Y up to order M (binomial word expansion).
MomentPair sum_moments(const CFreeSpec& x, const CFreeSpec& y, int max_order);

}  // namespace cfree
