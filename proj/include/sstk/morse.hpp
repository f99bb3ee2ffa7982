#ifndef SSTK_MORSE_HPP
#define SSTK_MORSE_HPP

#include "sstk/chart.hpp"

#include <map>
#include <string>
#include <vector>

namespace sstk {

struct MorseData {
    std::vector<std::string> vars; // coordinates entering the Hessian
    std::map<std::string, double> point;
    std::vector<double> eigenvalues; // descending
    std::string signature;           // e.g. "(+,-)"
    bool degenerate = false;         // some eigenvalue at numerical zero
    double gradient_norm = 0.0;
};

// Eigenvalue-sign signature of the Hessian of c at a critical point.  The
// Hessian is taken over the coordinates c actually depends on; a degenerate
// Hessian is reported as such, no verdict is invented.
MorseData morse_signature(const SymExpr& c, const Chart& chart,
                          const std::map<std::string, double>& point,
                          const std::map<std::string, double>& params = {});

} // namespace sstk

#endif
