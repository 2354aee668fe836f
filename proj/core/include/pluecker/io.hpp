#pragma once

#include <iosfwd>
#include <string>

#include "pluecker/exterior.hpp"
#include "pluecker/membership.hpp"
#include "pluecker/tuples.hpp"

namespace plk {

/// Tensor text format. Header "deg P space N,PDIM basis x|e", then one term
/// per line: "i1,i2,...,ip : scalar" with labels ascending. With dense=true
/// the writer materializes every coefficient, zeros included, and the reader
/// requires all C(dim, deg) of them.
void write_tensor(std::ostream& os, const AltTensor& t, bool dense = false);
AltTensor read_tensor(std::istream& is, const Field& field, bool dense = false);
void write_tensor_file(const std::string& path, const AltTensor& t, bool dense = false);
AltTensor read_tensor_file(const std::string& path, const Field& field, bool dense = false);

/// Matrix text: rows of whitespace-separated scalars.
void write_matrix(std::ostream& os, const Matrix& m);
Matrix read_matrix(std::istream& is, const Field& field);

/// Tuple file: header "p N1 N2", then p matrices separated by blank lines.
void write_tuple(std::ostream& os, const MatrixTuple& t);
MatrixTuple read_tuple(std::istream& is, const Field& field);
MatrixTuple read_tuple_file(const std::string& path, const Field& field);

/// Total-space point: header "p N n m d", then p N x N matrices, the N x n
/// column block, the m x N row block, and one line of d scalars, all
/// separated by blank lines.
void write_tot_point(std::ostream& os, const TotPoint& x);
TotPoint read_tot_point(std::istream& is, const Field& field);
TotPoint read_tot_point_file(const std::string& path, const Field& field);

/// Witness file for an Out verdict: the certifying map, the violated
/// polynomial, and the nonzero value it produced.
void write_witness_file(const std::string& path, const Witness& w, const VarietySpec& spec);
Witness read_witness_file(const std::string& path, const Field& field, VarietySpec* spec_out);

} // namespace plk
