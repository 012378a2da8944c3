#pragma once

#include <map>
#include <utility>
#include <vector>

#include "schubert/grassmann.hpp"

namespace testing_support {

using schubert::GrassmannIndex;
using schubert::Root;
using schubert::RootMonomial;

inline GrassmannIndex idx(int n, std::vector<int> xs) { return GrassmannIndex(n, std::move(xs)); }

inline RootMonomial mono(const GrassmannIndex& v, std::vector<std::pair<Root, int>> terms) {
  std::map<Root, int> m;
  for (const auto& [r, k] : terms) m[r] += k;
  return RootMonomial(v, m);
}

inline RootMonomial mono(const GrassmannIndex& v, std::vector<Root> elems) {
  std::map<Root, int> m;
  for (const Root& r : elems) ++m[r];
  return RootMonomial(v, m);
}

// The worked examples.
inline GrassmannIndex wide_v() { return idx(27, {1, 2, 3, 4, 5, 10, 11, 12, 13, 18, 19, 20, 21, 22}); }
inline GrassmannIndex wide_w() { return idx(27, {1, 4, 5, 9, 12, 13, 16, 17, 19, 22, 24, 25, 26, 27}); }
inline GrassmannIndex nine_v() { return idx(13, {1, 2, 3, 8, 9, 10}); }
inline GrassmannIndex nine_w() { return idx(13, {4, 6, 7, 10, 11, 13}); }
inline GrassmannIndex seven_block_v() { return idx(25, {1, 2, 4, 5, 7, 8, 9, 14, 15, 16, 17, 18, 19}); }

// A monomial with the block structure described for the v above: two
// blocks in each of the first three strata, {(10,9)^3} alone in the fourth.
inline RootMonomial seven_block_monomial() {
  return mono(seven_block_v(), std::vector<std::pair<Root, int>>{{{13, 1}, 1},
                                                                 {{25, 14}, 1},
                                                                 {{12, 4}, 1},
                                                                 {{23, 16}, 1},
                                                                 {{10, 8}, 1},
                                                                 {{11, 8}, 1},
                                                                 {{21, 18}, 2},
                                                                 {{22, 18}, 1},
                                                                 {{10, 9}, 3}});
}

}  // namespace testing_support
