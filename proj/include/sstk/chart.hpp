#ifndef SSTK_CHART_HPP
#define SSTK_CHART_HPP

#include "sstk/symexpr.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace sstk {

struct VarSpec {
    std::string name;
    bool radial = false;  // positive quantity; half-integer exponents allowed
    bool angular = false; // appears only through its differential
    bool operator==(const VarSpec&) const = default;
};

// A named positive symbol defined as the square root of a polynomial in the
// chart coordinates and parameters, e.g. rho = sqrt(w1^2 + w2^2).  These keep
// the coefficient ring rational: the symbol is an ordinary variable whose
// differential is expanded through d(rho) = d(square)/(2 rho).
struct SqrtSym {
    std::string name;
    Polynomial square;
    bool operator==(const SqrtSym&) const = default;
};

class Chart {
public:
    Chart() = default;
    Chart(std::string name, std::vector<VarSpec> vars, std::vector<SqrtSym> derived = {},
          std::set<std::string> positive_params = {});

    const std::string& name() const { return name_; }
    int dim() const { return (int)vars_.size(); }
    const std::vector<VarSpec>& vars() const { return vars_; }
    const VarSpec& var(int i) const { return vars_.at(i); }
    std::optional<int> index(const std::string& name) const;
    bool is_coord(const std::string& name) const { return index(name).has_value(); }

    const std::vector<SqrtSym>& derived() const { return derived_; }
    const SqrtSym* find_derived(const std::string& name) const;
    const std::set<std::string>& positive_params() const { return positive_params_; }

    // Symbols on which half-integer exponents are legal.
    std::set<std::string> radical_ok() const;

    // Total derivative with respect to coordinate i, chaining through the
    // sqrt symbols.  Everything else (parameters) differentiates to zero.
    SymExpr d_coord(const SymExpr& f, int i) const;

    // Fills in values of the sqrt symbols from coordinate/parameter values.
    void complete_env(std::map<std::string, double>& env) const;

    // Checks that a coefficient is admissible on this chart: no angular
    // coordinates, and fractional powers only on radial/positive symbols.
    void validate_coeff(const SymExpr& e) const;

    bool operator==(const Chart& o) const;

private:
    std::string name_;
    std::vector<VarSpec> vars_;
    std::vector<SqrtSym> derived_;
    std::set<std::string> positive_params_;
};

// Convenience: build a chart of plain variables.
Chart make_chart(const std::string& name, const std::vector<std::string>& vars);

} // namespace sstk

#endif
