#ifndef OPINEQ_JSON_IO_HPP
#define OPINEQ_JSON_IO_HPP

#include <string>

#include "opineq/chains.hpp"
#include "opineq/funcat.hpp"
#include "opineq/posmap.hpp"
#include "opineq/quad.hpp"
#include "opineq/symmat.hpp"

namespace opineq {

// Wire formats. All parsers throw ParseError on malformed input.
//
//   matrix    {"n":2,"entries":[[2,-1],[-1,3]]}       (asymmetry > 1e-12 rejected)
//   function  {"kind":"power","r":-1.0} | {"kind":"exp"}
//             | {"kind":"affine_power","scale":s,"shift":c,"r":r}
//   map       {"map":"normalized_trace"} | {"map":"compression","v":[[...]]}
//             | {"map":"pinching","blocks":[1,1]}
//             | {"map":"unitary_mixture","weights":[...],"unitaries":[[[...]]]}
//   quad      {"scheme":"gauss_legendre","nodes":64}
//             | {"scheme":"adaptive_simpson","abs_tol":1e-10,"max_depth":30}

SymMatrix parse_matrix_json(const std::string& text);
std::string matrix_to_json(const SymMatrix& a);

FunctionDescriptor parse_function_json(const std::string& text);
std::string function_to_json(const FunctionDescriptor& f);

MapDescriptor parse_map_json(const std::string& text);
std::string map_to_json(const MapDescriptor& phi);

QuadratureConfig parse_quad_json(const std::string& text);
std::string quad_to_json(const QuadratureConfig& cfg);

/// Numbers in reports are printed with 17 significant digits so that
/// repeated runs are byte-identical and values round-trip exactly.
std::string format_number(double v);

std::string report_to_json(const ChainReport& rep);
std::string report_to_csv(const ChainReport& rep);
std::string report_to_pretty(const ChainReport& rep);

}  // namespace opineq

#endif
