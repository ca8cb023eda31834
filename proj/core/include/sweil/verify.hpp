#pragma once

#include "sweil/backend.hpp"
#include "sweil/kernel.hpp"
#include "sweil/sca.hpp"

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sweil::verify {

using algebra::GradedBackend;

struct BoxSpec {
    int emax = 3;
    int b0max = 2;
    bool relative = false;
};

struct Witness {
    std::string relation;
    std::string state;
    std::string lhs;
    std::string rhs;
};

struct RelationReport {
    std::string check;
    std::vector<std::pair<std::string, std::string>> params;  // in output order
    BoxSpec box;
    std::size_t states = 0;
    std::size_t relations = 0;
    bool pass = true;
    std::optional<Witness> witness;
    double millis = 0;
};

struct Settings {
    int window = 2;
    BoxSpec box;
    int jobs = 1;
};

// 3 - 6 lambda for fmu, 3 dim for loop kinds
Scalar claimed_central_charge(const GradedBackend& b);

// [theta(H_n), theta(H_-n)] vac = (C/3) n vac for n = 1, 2. Throws if the two
// probes disagree or the vacuum is not an eigenvector.
Scalar extract_central_charge(const GradedBackend& b);

using RepBuilder = std::function<FieldOperator(Sym, int)>;
using BracketTable = std::function<sca::SCAElement(const sca::Gen&, const sca::Gen&)>;
// [theta(a), theta(b)] v = theta([a, b]) v + C c(a, b) v for all pairs of the
// symbols in the window and all states of the box
RelationReport check_representation(std::string check, const GradedBackend& b, const std::vector<Sym>& syms,
                                    const RepBuilder& rep, const BracketTable& table, const Scalar& central,
                                    const Settings& s, bool n2_names = false);

// N=2 relations against the (L, H, h, p) table; central charge as claimed
RelationReport check_n2(const GradedBackend& b, const Settings& s);
// S'(2,alpha) relations against the table with its cocycle, loop backends
RelationReport check_s2a(const GradedBackend& b, const Scalar& alpha, const Settings& s);
// d^2, h^2, dh + hd, (d + h)^2, d tau(x) + tau(x) d = theta(x), [d, theta(x)]
std::vector<RelationReport> check_chain(const GradedBackend& b, const Settings& s);
// [theta(s), d] = 0 for the S'(2,0) basis
RelationReport check_d_compat(const GradedBackend& b, const Settings& s);
// exterior sl(2) relations on relative states; the last report is the
// negative control (pass = a non-relative state with a nonzero discrepancy exists)
std::vector<RelationReport> check_relative_derext(const GradedBackend& b, const Settings& s);

}  // namespace sweil::verify
