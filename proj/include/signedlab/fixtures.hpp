#pragma once

#include <string>
#include <vector>

#include "signedlab/patterns.hpp"
#include "signedlab/rational.hpp"
#include "signedlab/signed_graph.hpp"

namespace signedlab {

// Closed-form witnesses realizing the known maximum-nullity values of the
// named graphs, stored exactly so the nullity claims can be re-verified by
// fraction-free rank computation alone.
struct Fixture {
  std::string name;
  SignedGraph graph;
  RationalMatrix matrix;
  int expected_nullity = 0;
};

namespace detail {

inline RationalMatrix from_ints(const std::vector<std::vector<int>>& rows) {
  RationalMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) m.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return m;
}

inline RationalMatrix all_ones(int n, int sign) {
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = sign;
  return m;
}

}  // namespace detail

inline Fixture fixture_matrix(const std::string& name) {
  if (name.size() == 3 && name[0] == 'K' && (name[2] == 'e' || name[2] == 'o')) {
    int n = name[1] - '0';
    if (n >= 2 && n <= 8) {
      // rank-1 all-ones block: nullity n-1
      return {name, name[2] == 'e' ? patterns::k_n_e(n) : patterns::k_n_o(n),
              detail::all_ones(n, name[2] == 'e' ? -1 : +1), n - 1};
    }
  }
  if (name == "K2eq") return {name, patterns::k2eq(), RationalMatrix(2, 2), 2};
  if (name == "K3eq") return {name, patterns::k3eq(), RationalMatrix(3, 3), 3};
  if (name == "K23e") {
    return {name, patterns::k23e(),
            detail::from_ints({{0, 0, -1, -1, -1},
                               {0, 0, -1, -1, -1},
                               {-1, -1, 0, 0, 0},
                               {-1, -1, 0, 0, 0},
                               {-1, -1, 0, 0, 0}}),
            3};
  }
  if (name == "K23i") {
    return {name, patterns::k23i(),
            detail::from_ints({{-6, 0, 2, -1, -1},
                               {0, -3, -1, -1, -1},
                               {2, -1, -1, 0, 0},
                               {-1, -1, 0, -1, 0},
                               {-1, -1, 0, 0, -1}}),
            2};
  }
  if (name == "K4i") {
    return {name, patterns::k4i(),
            detail::from_ints({{3, 3, -1, -4}, {3, 3, -1, -4}, {-1, -1, -8, -7}, {-4, -4, -7, -3}}),
            2};
  }
  if (name == "W4o") {
    return {name, patterns::w4o(),
            detail::from_ints({{2, -1, 0, 1, -1},
                               {-1, 2, 1, 0, -1},
                               {0, 1, 2, -1, -1},
                               {1, 0, -1, 2, -1},
                               {-1, -1, -1, -1, 2}}),
            2};
  }
  throw std::invalid_argument("unknown fixture name: " + name);
}

inline std::vector<std::string> fixture_names() {
  std::vector<std::string> out;
  for (int n = 2; n <= 6; ++n) {
    out.push_back("K" + std::to_string(n) + "e");
    out.push_back("K" + std::to_string(n) + "o");
  }
  for (const char* s : {"K2eq", "K3eq", "K23e", "K23i", "K4i", "W4o"}) out.push_back(s);
  return out;
}

}  // namespace signedlab
