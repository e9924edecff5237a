#ifndef SGP_GRAPH_SPEC_HPP
#define SGP_GRAPH_SPEC_HPP

#include <optional>
#include <string>
#include <vector>

#include "sgp/graph.hpp"

namespace sgp {

// Textual graph descriptions accepted everywhere the CLI takes a graph:
//   path:N | cycle:N | grid:RxN | cylinder:RxN | product:SPEC*SPEC | file:PATH
struct GraphSpec {
    enum class Kind { path, cycle, grid, cylinder, product, file };
    Kind kind = Kind::path;
    int a = 0;  // N, or R for grid/cylinder
    int b = 0;  // N for grid/cylinder
    std::string file_path;
    std::vector<GraphSpec> factors;  // exactly two for product
    std::string text;                // the original spec string
};

// Throws ParseError on any grammar violation. Nested products are not
// supported (products of more than two factors are out of scope).
GraphSpec parse_graph_spec(const std::string& text);

struct BuiltGraph {
    Graph graph;
    std::optional<LayerLabeling> labeling;  // present for grid/cylinder/product
    GraphSpec spec;
};

// Materializes the spec. File specs read the edge-list format; builder
// preconditions surface as InvalidParameter.
BuiltGraph build_graph_spec(const GraphSpec& spec);
BuiltGraph build_graph_spec(const std::string& text);

}  // namespace sgp

#endif  // SGP_GRAPH_SPEC_HPP
