#pragma once

#include "fintopo/space.hpp"

namespace fintopo::fixtures {

// Sierpinski space: a open, b not. opens {}, {a}, {a,b}
inline SpacePtr s2() { return make_space(2, {0, 1, 3}, {"a", "b"}); }

inline SpacePtr discrete2() { return make_space(2, {0, 1, 2, 3}, {"a", "b"}); }
inline SpacePtr indiscrete2() { return make_space(2, {0, 3}, {"a", "b"}); }

inline SpacePtr discrete3() {
  return make_space(3, {0, 1, 2, 3, 4, 5, 6, 7}, {"a", "b", "c"});
}

// Prime space: p below the isolated pair. opens {}, {x}, {y}, {x,y}, X
// with p = bit 0, x = bit 1, y = bit 2.
inline SpacePtr p3() { return make_space(3, {0, 2, 4, 6, 7}, {"p", "x", "y"}); }

// Partition space on four points with blocks {1,2} and {3,4}.
inline SpacePtr q4() { return make_space(4, {0, 3, 12, 15}, {"1", "2", "3", "4"}); }

}  // namespace fintopo::fixtures
