#pragma once
// Text formats: `om v1` (cocircuit sets), `graph v1` (edge lists) and
// `labeling v1` (vertex -> sign vector). Writers emit one canonical byte
// form; parsers accept exactly that form and nothing else.

#include <stdexcept>
#include <string>
#include <string_view>

#include "cocirc/graph.hpp"
#include "cocirc/labeled_graph.hpp"
#include "cocirc/oriented_matroid.hpp"

namespace cocirc {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string write_om(const OrientedMatroid& m);
OrientedMatroid parse_om(std::string_view text);  // throws ParseError

std::string write_graph(const Graph& g);
Graph parse_graph(std::string_view text);  // throws ParseError

std::string write_labeling(const SignLabeling& labeling);
SignLabeling parse_labeling(std::string_view text);  // throws ParseError

// Whole-file helpers; throw std::runtime_error on filesystem errors.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace cocirc
