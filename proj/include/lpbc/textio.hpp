#pragma once

#include <string>
#include <variant>

#include "lpbc/catalog.hpp"
#include "lpbc/isomin.hpp"
#include "lpbc/latticepath.hpp"
#include "lpbc/matroid.hpp"
#include "lpbc/multigraph.hpp"
#include "lpbc/transversal.hpp"

namespace lpbc {

using ParsedObject =
    std::variant<Matroid, MultiGraph, LatticePathPresentation, StandardPresentation, SetFamily>;

// Parses any of the five text formats; the first token selects the kind
// (matroid, graph, lpm, intervals, family). Lines starting with '#' and
// blank lines are ignored. Errors carry line and column.
ParsedObject parse_object(const std::string& text);

std::string to_text(const Matroid& m);
std::string to_text(const MultiGraph& g);
std::string to_text(const LatticePathPresentation& l);
std::string to_text(const StandardPresentation& s);
std::string to_text(const SetFamily& f);
std::string to_text(const ParsedObject& obj);

std::string witness_to_text(const MinorWitness& w);

// Realizes a parsed object as a matroid: lpm and intervals through their
// constructions, families through the transversal matroid, graphs through
// the bicircular matroid.
Matroid realize_matroid(const ParsedObject& obj);

}  // namespace lpbc
