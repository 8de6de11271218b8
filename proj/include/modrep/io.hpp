// File grammar: representation/group files (JSON with matrix or signed
// permutation generators), mass tables, and mass identities. All malformed
// input is reported as ParseError with file, line, and column context.
#pragma once

#include <stdexcept>
#include <string>

#include "modrep/mass.hpp"
#include "modrep/meataxe.hpp"
#include "modrep/rep.hpp"

namespace modrep {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// "gf(q)" for finite fields, "Z", "Q", "Z[sqrt(-2)]".
std::string ring_to_file_string(const Ring& r);
Ring ring_from_file_string(const std::string& s);

// {field, dim, generators:[{name, matrix | signed_perm}]}. Matrix entries are
// integers for gf(p) and Z, [a,b] digit pairs for gf(4)/gf(9) and
// Z[sqrt(-2)], and integers or "p/q" strings for Q. A signed_perm is a total
// list of [src, dst, sign] triples, 0-based. The result carries no group.
Representation read_rep_file(const std::string& path);
void write_rep_file(const std::string& path, const Representation& rep);

// A group file is a representation file whose generators define the group by
// enumeration (capped at 10000 elements).
std::shared_ptr<const FiniteGroup> read_group_file(const std::string& path);

// Every *.json file in the directory, sorted by filename; labels are stems.
RepCatalog read_catalog_dir(const std::string& dir);

// {particles:[{name, mass_mev, sigma_mev, source}]}; mass and sigma are
// decimal strings, parsed exactly.
MassTable read_mass_file(const std::string& path);

// {name, terms:[{particle, coeff}]}; coeff is an integer or a "p/q" string.
MassIdentity read_identity_file(const std::string& path);

}  // namespace modrep
