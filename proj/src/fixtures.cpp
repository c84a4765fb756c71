#include "connspec/fixtures.hpp"

namespace connspec::fixtures {

Complex path3() { return graph_complex(3, {{1, 2}, {2, 3}}, "path3"); }

Complex cube() { return generate(Family::cube, {}); }

Complex c4() { return graph_complex(4, {{1, 2}, {1, 4}, {2, 3}, {3, 4}}, "c4"); }

Complex iso_a_g() {
  return graph_complex(8, {{1, 2}, {1, 3}, {2, 6}, {2, 7}, {4, 5}, {6, 8}, {7, 4}}, "iso_a_g");
}

Complex iso_a_h() {
  return graph_complex(8, {{1, 2}, {1, 5}, {1, 7}, {2, 8}, {3, 4}, {5, 6}, {8, 6}}, "iso_a_h");
}

Complex iso_b_g() {
  return graph_complex(11, {{1, 2}, {2, 3}, {2, 4}, {2, 5}, {4, 6}, {5, 8}, {5, 11}, {6, 7}, {6, 10}, {7, 9}},
                       "iso_b_g");
}

Complex iso_b_h() {
  return graph_complex(11, {{1, 2}, {1, 3}, {2, 5}, {2, 6}, {3, 4}, {3, 7}, {7, 8}, {7, 9}, {7, 11}, {9, 10}},
                       "iso_b_h");
}

}  // namespace connspec::fixtures
