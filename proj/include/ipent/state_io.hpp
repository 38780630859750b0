#pragma once

#include <string>

#include "ipent/states.hpp"

namespace ipent {

/// Reads a state file: {"dim": d, "statistics": "fermion"|"boson",
/// "matrix": d rows of d [re, im] pairs}. Structural problems throw
/// ParseError; physical validation happens in TwoParticleState and its
/// errors propagate.
TwoParticleState read_state_file(const std::string& path);

/// Writes the same format with %.17g numbers; identical states produce
/// byte-identical files.
void write_state_file(const std::string& path, const TwoParticleState& psi);

/// Whole-file read; throws ParseError when the file cannot be opened.
std::string read_file_bytes(const std::string& path);

/// FNV-1a 64-bit digest as 16 hex characters; used to fingerprint inputs in
/// report documents.
std::string fnv1a_hex(const std::string& bytes);

}  // namespace ipent
