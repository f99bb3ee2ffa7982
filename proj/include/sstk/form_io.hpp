#ifndef SSTK_FORM_IO_HPP
#define SSTK_FORM_IO_HPP

#include "sstk/coordinate_map.hpp"

#include <map>
#include <string>

namespace sstk {

// Structured text format for charts, forms and coordinate maps:
//
//   chart lc
//     coords u1 u2 W1 W2
//     radial r
//     angular alpha
//     positive m1 m2
//     sqrtsym rho = w1^2 + w2^2
//   end
//
//   form omega on lc degree 2
//     [u1, W1] = u1
//   end
//
//   map phi from lc to kepler
//     w1 = (u1^2 - u2^2)/2
//     alpha = opaque
//     d alpha / d X = -Y/(X^2 + Y^2)
//   end
//
// '#' starts a comment.  Charts must be declared before use.

struct FormDocument {
    std::map<std::string, Chart> charts;
    std::map<std::string, DiffForm> forms;
    std::map<std::string, CoordinateMap> maps;
};

FormDocument parse_form_document(const std::string& text,
                                 const std::map<std::string, Chart>& known_charts = {});

std::string chart_to_text(const Chart& c);
std::string form_to_text(const DiffForm& f, const std::string& name);
std::string map_to_text(const CoordinateMap& m);

} // namespace sstk

#endif
