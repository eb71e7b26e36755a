/*
 * Text format for generator matrices that travels with its field:
 *
 *   GFMAT p=<p> h=<h> poly=<c0,c1,...,1> n=<n> k=<k> e=<e>
 *   <k rows of n whitespace-separated entries, canonical encodings>
 *
 * poly must equal the deterministic modulus of make_field(p, h), so a file
 * is verifiable on its own.  Node-multiplier codes append alpha=..., v=...
 * (and ext_gamma=<g> for the lengthened form, whose alpha/v cover only the
 * first n-1 columns) to the header so a dimension raise can recover the
 * nodes.  parse_matrix(emit_matrix(x)) reproduces x exactly.
 */
#pragma once

#include <stdexcept>
#include <string>

#include "gagc/codes.hpp"

namespace gagc {

// Unreadable or malformed matrix file; distinct from the invalid_argument
// family so callers can map it to an I/O exit status.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MatrixFile {
  LinearCode code;
  std::uint32_t e = 0;
};

std::string emit_matrix(const LinearCode& code, std::uint32_t e);
MatrixFile parse_matrix(const std::string& text);

MatrixFile load_matrix(const std::string& path);
void save_matrix(const std::string& path, const LinearCode& code,
                 std::uint32_t e);

}  // namespace gagc
