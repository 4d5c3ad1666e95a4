#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "petersson/binqf.hpp"
#include "petersson/int.hpp"
#include "petersson/qexp.hpp"
#include "petersson/rat.hpp"

namespace petersson {

// Integral Gram matrix of an even unimodular lattice.
struct LatticeGram {
    std::size_t dim = 0;
    std::vector<std::vector<int64_t>> gram;

    void validate() const;  // symmetric, even diagonal, det 1, positive definite
    Int det() const;
};

// Fast-path coordinate model: the built-in lattices are unions of cosets of
// D8 (rank 8) or D8+D8 (rank 16) in the even-coordinate model. A coset is
// encoded by coordinate parity (integer/half) and the residue of the
// coordinate sum: doubled coordinates v = 2w satisfy sum(v) = 2*sgn mod 4.
struct D8Coset {
    bool half = false;
    int sgn = 0;
    auto operator<=>(const D8Coset&) const = default;
};

struct ModelLattice {
    unsigned blocks = 1;  // 1: rank 8, 2: rank 16
    std::vector<std::array<D8Coset, 2>> glue;
};

class Lattice {
public:
    std::string name;
    LatticeGram gram;
    std::optional<ModelLattice> model;

    std::size_t dim() const { return gram.dim; }
    unsigned weight_k() const { return (unsigned)(gram.dim / 2); }
};

Lattice builtin_e8();
Lattice builtin_e8e8();
Lattice builtin_d16plus();
// Resolves "e8" / "e8e8" / "d16plus", otherwise reads a JSON lattice file.
Lattice lattice_by_name_or_file(const std::string& spec);

Lattice lattice_from_json(const std::string& text);
std::string lattice_to_json(const LatticeGram& gram);

// All basis-coordinate vectors with (1/2) x'Sx <= bound, exact rational
// Fincke-Pohst bound propagation.
std::vector<std::vector<int64_t>> short_vectors(const LatticeGram& S, uint64_t bound);

// A(S,T) = #{X in Z^(2k,2) : (1/2) X'SX = T}; T positive semidefinite.
uint64_t rep_number(const Lattice& L, const BinQF& T);
// A(S,m) vector representation count.
uint64_t rep_number(const Lattice& L, uint64_t m);

// Both evaluations of the primitive-second-column count: the Mobius sum over
// content and the direct count with Y primitive.
struct SharpPair {
    uint64_t mobius_side;
    uint64_t direct_side;
};
SharpPair rep_sharp_both(const Lattice& L, const BinQF& T);
uint64_t rep_sharp(const Lattice& L, const BinQF& T);  // asserts the two agree

// Primitive vector representations A*(S,m) via content inversion.
uint64_t rep_primitive(const Lattice& L, uint64_t m);
// Primitive matrix representations A*(S,T) via divisor inversion.
uint64_t rep_primitive(const Lattice& L, const BinQF& T);

// Degree-1 theta series as a q-expansion, plus its cuspidal remainder
// theta - E_k.
struct Theta1 {
    QExp theta;
    QExp cusp_part;
};
Theta1 theta1_qexp(const Lattice& L, std::size_t prec);

}  // namespace petersson
