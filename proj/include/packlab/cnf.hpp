#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace packlab {

struct Literal {
    unsigned variable = 1;  // 1-based
    bool positive = true;

    friend bool operator==(const Literal&, const Literal&) = default;
};

using Clause = std::array<Literal, 3>;

/// 3-CNF formula: every clause has exactly three literals (repeats allowed).
struct CnfFormula {
    unsigned variable_count = 0;
    std::vector<Clause> clauses;

    friend bool operator==(const CnfFormula&, const CnfFormula&) = default;
};

/// Truth values indexed by variable - 1.
using Assignment = std::vector<bool>;

/// DIMACS CNF. Clauses with other than three literals raise InputError;
/// any other malformation raises ParseError.
CnfFormula parse_dimacs(std::string_view text);
std::string format_dimacs(const CnfFormula& f);

bool satisfies(const CnfFormula& f, const Assignment& a);

/// First satisfying assignment in lexicographic order (false < true, x1
/// most significant). BudgetError for more than 20 variables.
std::optional<Assignment> brute_force_sat(const CnfFormula& f);

}  // namespace packlab
