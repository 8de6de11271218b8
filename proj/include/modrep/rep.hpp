// Representations and functors on them: tensor, direct sum, dual, symmetric
// and exterior squares, mod-p reduction, Brauer characters, regular modules,
// and evaluation of formal expressions in the generators.
#pragma once

#include <memory>
#include <string>
#include <vector>

#include "modrep/group.hpp"
#include "modrep/matrix.hpp"

namespace modrep {

struct Representation {
  Ring ring;
  size_t dim = 0;
  std::vector<std::string> gen_names;
  std::vector<Matrix> gens;
  std::shared_ptr<const FiniteGroup> group;  // optional

  const Matrix& gen(const std::string& name) const;
};

// Validates shapes, invertibility (det over fields and Q; finite order over
// Z and Z[sqrt(-2)]), and, when a group is attached, that mapping the group's
// generators to these matrices is a homomorphism.
Representation make_rep(std::vector<std::string> names, std::vector<Matrix> gens,
                        std::shared_ptr<const FiniteGroup> group = nullptr);

// Image of every group element under the representation, in the group's
// enumeration order (replayed from generator images).
std::vector<Matrix> element_images(const Representation& rep, const FiniteGroup& g);

// True when element_images respects the group's multiplication table.
bool is_homomorphism(const Representation& rep, const FiniteGroup& g);

Representation tensor(const Representation& a, const Representation& b);
Representation direct_sum(const Representation& a, const Representation& b);
Representation dual(const Representation& a);

// Symmetric / exterior square on the basis of ordered pairs (lexicographic);
// rejected in characteristic 2.
Representation sym2(const Representation& a);
Representation alt2(const Representation& a);

// Entrywise residue of an integral representation.
Representation reduce_mod(const Representation& a, unsigned p);

struct BrauerCharacter {
  unsigned p = 0;
  // One entry per p-regular class, in the group's class order.
  std::vector<size_t> class_indices;
  std::vector<std::string> class_labels;  // "<representative order>@<class index>"
  std::vector<ZS2> values;
};

// Brauer character of a representation over GF(p): eigenvalues of each
// p-regular class representative are computed over ext and lifted to exact
// cyclotomic integers. The fixed lifting maps the generator x+1 of GF(9)* to
// exp(i*pi/4) and x of GF(4)* to exp(2*pi*i/3); every value must land in
// Z[sqrt(-2)], else std::runtime_error.
BrauerCharacter brauer_character(const Representation& a, const FiniteGroup& g, const Ring& ext);

// Matrix image of a formal Z-combination of words in the generators, e.g.
// "(j-k)d + (k-i)wd + (i-j)w^2d". Atoms are single-letter generator names or
// "1"; j and k are expanded as w^-1*i*w and w*i*w^-1 when not generators
// themselves. Exponents may be negative.
Matrix class_sum_image(const Representation& rep, const std::string& expr);

// Right regular representation on the element basis (dimension |G|), or on
// the basis of {g, -g} pairs when identify_minus_one is set (-identity must
// then be an element).
Representation regular_module(const FiniteGroup& g, const Ring& ring, bool identify_minus_one = false);

}  // namespace modrep
