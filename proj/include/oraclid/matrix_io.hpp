#pragma once

#include <iosfwd>
#include <string>

#include "oraclid/oracle_matrix.hpp"

namespace oraclid {

// Text format:
//   # optional comment lines, only before the header
//   OIP v1 n=<n> M=<M>
//   <M lines of N characters from {0,1}>
// with a newline after every row including the last.
void save_matrix(const OracleMatrix& S, std::ostream& out);
void save_matrix_file(const OracleMatrix& S, const std::string& path);

OracleMatrix load_matrix(std::istream& in);
OracleMatrix load_matrix_file(const std::string& path);

}  // namespace oraclid
