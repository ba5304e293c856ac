#include "qsat/instances.hpp"

#include "qsat/errors.hpp"

namespace qsat {

Graph bundled_instance(char id) {
  switch (id) {
    case 'a':
      return Graph::make(10, 3,
                         {{3, 5, 8},
                          {0, 5, 6},
                          {0, 6, 8},
                          {1, 3, 5},
                          {0, 2, 5},
                          {1, 3, 9},
                          {1, 4, 9},
                          {0, 1, 5},
                          {2, 3, 7},
                          {0, 1, 2}});
    case 'b':
      return Graph::make(10, 3,
                         {{0, 1, 5},
                          {0, 4, 5},
                          {2, 5, 8},
                          {5, 7, 9},
                          {5, 6, 7},
                          {5, 7, 8},
                          {6, 8, 9},
                          {0, 3, 5},
                          {4, 6, 8},
                          {2, 4, 9}});
    case 'c':
      return Graph::make(10, 3,
                         {{2, 7, 8},
                          {0, 4, 7},
                          {4, 5, 6},
                          {1, 5, 6},
                          {1, 6, 9},
                          {3, 5, 7},
                          {0, 3, 7},
                          {5, 6, 7},
                          {1, 3, 7},
                          {1, 6, 7}});
    default:
      throw InvalidParameters("bundled_instance: id must be 'a', 'b' or 'c'");
  }
}

}  // namespace qsat
