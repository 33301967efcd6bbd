#pragma once

#include <string>
#include <vector>

#include "pushgame/coloring.hpp"
#include "pushgame/types.hpp"

namespace pushgame {

// Element of Z_m^n: the value of the push invariant.
struct InvariantValue {
    int modulus = 2;
    std::vector<int> coords;

    friend bool operator==(const InvariantValue&, const InvariantValue&) = default;
};

// Additive image of color k: the k-th standard basis vector for k < n, the
// all-(m-1) vector for k = n. The n+1 vectors sum to zero mod m, which is
// exactly why a push (adding one to every color at once) leaves the
// invariant unchanged.
InvariantValue color_vector(int color, int n, int m);

// Sum over vertices of label * color_vector(color), mod m.
InvariantValue compute_invariant(const SimplexGraph& g, const Coloring& c, const Labeling& l);

// Injective encoding of (modulus, coords): equal keys iff label-equivalent.
std::string class_key(const SimplexGraph& g, const Coloring& c, const Labeling& l);

}  // namespace pushgame
