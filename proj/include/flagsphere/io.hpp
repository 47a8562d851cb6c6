#pragma once

#include <iosfwd>
#include <string>

#include "flagsphere/bounds.hpp"
#include "flagsphere/complex.hpp"
#include "flagsphere/constructions.hpp"
#include "flagsphere/graph.hpp"
#include "flagsphere/rigidity.hpp"
#include "flagsphere/verify.hpp"

#include <json.hpp>

namespace flagsphere {

// ".facets": one facet per line, labels separated by single spaces; lines
// starting with '#' are comments. The writer emits facets in lexicographic
// label order; the reader tolerates any order.
void write_facets(std::ostream& out, const Complex& K);
Complex read_facets(std::istream& in); // throws InvalidInput with line numbers

void write_facets_file(const std::string& path, const Complex& K);
Complex read_facets_file(const std::string& path);

// ".graph": first line "n m", then m lines "label1 label2". Vertices that
// appear in no edge get synthetic labels on read.
void write_graph(std::ostream& out, const Graph& G);
Graph read_graph(std::istream& in);

void write_graph_file(const std::string& path, const Graph& G);
Graph read_graph_file(const std::string& path);

nlohmann::json witness_json(const StableSetWitness& w);
nlohmann::json sphere_cert_json(const SphereCert& c);
nlohmann::json rigidity_report_json(const RigidityReport& r);
nlohmann::json manifest_json(const ConstructionSpec& spec, const Complex& K);
nlohmann::json bound_row_json(const BoundRow& row);
nlohmann::json max_bound_row_json(const MaxBoundRow& row);

} // namespace flagsphere
