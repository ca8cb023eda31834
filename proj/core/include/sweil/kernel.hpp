#pragma once

#include "sweil/fieldops.hpp"

#include <cstddef>
#include <limits>
#include <string>
#include <vector>

namespace sweil::verify {

using algebra::Scalar;
using fieldops::FieldOperator;
using fock::FockVector;
using fock::Monomial;

// One summand of an operator identity evaluated on a state v:
//   Comm: coef * [ops[a], ops[b]] v     Op: coef * ops[a] v     Unit: coef * v
// Words on the right-hand side are subtracted.
struct Word {
    enum Kind { Comm, Op, Unit } kind = Unit;
    int a = -1;
    int b = -1;
    Scalar coef{1};
    bool rhs = false;
};

struct Identity {
    std::string label;
    std::vector<Word> words;
};

Word comm(int a, int b, Scalar c = Scalar(1), bool rhs = false);
Word op(int a, Scalar c = Scalar(1), bool rhs = false);
Word unit(Scalar c, bool rhs = false);

constexpr std::size_t kNoFailure = std::numeric_limits<std::size_t>::max();

// For each identity, the smallest index of a state on which it does not vanish
// (kNoFailure if none). Arithmetic is exact: Gaussian integers over a common
// denominator, checked for overflow. Commutators only visit pairs of summands
// sharing a dual generator; every other pair graded-commutes and cancels.
// The result does not depend on jobs.
std::vector<std::size_t> check_identities(const std::vector<FieldOperator>& ops, const std::vector<Identity>& ids,
                                          const std::vector<Monomial>& states, int jobs = 1);

// Exact replay of one identity on one state through the plain operator path.
struct Evaluation {
    FockVector lhs;
    FockVector rhs;
};
Evaluation evaluate_identity(const std::vector<FieldOperator>& ops, const Identity& id, const Monomial& v);

}  // namespace sweil::verify
