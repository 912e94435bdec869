#pragma once

#include <sstream>
#include <string>

#include "ttpedo/instance.hpp"

namespace ttpedo::testing {

inline Instance instance_from_text(const std::string& text) {
    std::istringstream in(text);
    return parse_instance(in);
}

// Unit square, one item of weight 5 at city 3. Tour 1-2-3-4 has four legs of
// length 1; nu = 0.09.
inline const char* kSquareInstance = R"(PROBLEM NAME: square4
KNAPSACK DATA TYPE: constructed
DIMENSION: 4
NUMBER OF ITEMS: 1
CAPACITY OF KNAPSACK: 10
MIN SPEED: 0.1
MAX SPEED: 1
RENTING RATIO: 1
EDGE_WEIGHT_TYPE: CEIL_2D
NODE_COORD_SECTION	(INDEX, X, Y):
1 0 0
2 1 0
3 1 1
4 0 1
ITEMS SECTION	(INDEX, PROFIT, WEIGHT, ASSIGNED NODE NUMBER):
1 100 5 3
)";

// Same geometry, three items, for parser checks.
inline const char* kSquareThreeItems = R"(PROBLEM NAME: square4x3
KNAPSACK DATA TYPE: constructed
DIMENSION: 4
NUMBER OF ITEMS: 3
CAPACITY OF KNAPSACK: 10
MIN SPEED: 0.1
MAX SPEED: 1
RENTING RATIO: 1
EDGE_WEIGHT_TYPE: CEIL_2D
NODE_COORD_SECTION	(INDEX, X, Y):
1 0 0
2 1 0
3 1 1
4 0 1
ITEMS SECTION	(INDEX, PROFIT, WEIGHT, ASSIGNED NODE NUMBER):
1 100 5 3
2 40 2 2
3 10 4 4
)";

// 2x1 rectangle. The hull tour is the unique optimum up to orientation, so
// an alpha = 0 run only keeps mutations that rebuild the same cycle.
inline const char* kRectangleInstance = R"(PROBLEM NAME: rect4
KNAPSACK DATA TYPE: constructed
DIMENSION: 4
NUMBER OF ITEMS: 2
CAPACITY OF KNAPSACK: 10
MIN SPEED: 0.5
MAX SPEED: 1
RENTING RATIO: 0.5
EDGE_WEIGHT_TYPE: CEIL_2D
NODE_COORD_SECTION	(INDEX, X, Y):
1 0 0
2 2 0
3 2 1
4 0 1
ITEMS SECTION	(INDEX, PROFIT, WEIGHT, ASSIGNED NODE NUMBER):
1 50 4 3
2 5 6 2
)";

// Six cities, items spread over several cities; roomy capacity. Small enough
// for exhaustive oracles, big enough for crossover to matter.
inline const char* kSixCityInstance = R"(PROBLEM NAME: six
KNAPSACK DATA TYPE: constructed
DIMENSION: 6
NUMBER OF ITEMS: 5
CAPACITY OF KNAPSACK: 20
MIN SPEED: 0.2
MAX SPEED: 1
RENTING RATIO: 0.8
EDGE_WEIGHT_TYPE: CEIL_2D
NODE_COORD_SECTION	(INDEX, X, Y):
1 0 0
2 8 1
3 12 6
4 7 11
5 1 9
6 5 5
ITEMS SECTION	(INDEX, PROFIT, WEIGHT, ASSIGNED NODE NUMBER):
1 30 6 2
2 44 8 3
3 12 3 4
4 25 5 5
5 9 2 6
)";

}  // namespace ttpedo::testing
