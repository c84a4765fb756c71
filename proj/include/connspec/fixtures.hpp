#pragma once

#include "connspec/complex.hpp"

// Complexes that appear as worked examples: a path with two edges, the cube
// graph, the 4-cycle and the two isospectral, non-isomorphic pairs.
namespace connspec::fixtures {

Complex path3();  // {1,2}, {2,3} and their vertices
Complex cube();
Complex c4();
Complex iso_a_g();
Complex iso_a_h();
Complex iso_b_g();
Complex iso_b_h();

}  // namespace connspec::fixtures
