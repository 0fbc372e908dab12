#ifndef RIGIDLAB_CONSTRUCT_HPP
#define RIGIDLAB_CONSTRUCT_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "rigidlab/graph.hpp"

namespace rigidlab {

struct ExpressionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Constructor expression grammar:
//   complete N
//   bipartite A B
//   kchain a1,...,ak
//   kring a1,...,ak
//   cone(<expr>)
//   attach(<expr>; left=i,...; right=j,...; interior=a,...)
//   hennenberg(<expr>; d=D; i=I; j=J; others=x,...)
Graph build_graph_from_expression(std::string_view expr);

}  // namespace rigidlab

#endif
