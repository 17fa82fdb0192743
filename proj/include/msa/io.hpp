#pragma once

#include <iosfwd>
#include <string>

#include "msa/instance.hpp"

namespace msa {

/// "msa <m>" header, then one m-character 0/1 string per line. Blank
/// lines and lines starting with '#' are skipped. Throws InvalidInput
/// with the offending line number.
RawInstance parse_instance(std::istream& in);
std::string render_instance(const RawInstance& inst);

/// "tree <m>" header, then one "parent child" pair per line. The root is
/// 0^m.
Arborescence parse_tree(std::istream& in);
std::string render_tree(const Arborescence& tree);

/// Graphviz digraph; node labels are bit strings, edge labels the
/// flipped character.
std::string render_dot(const Arborescence& tree);

RawInstance read_instance_file(const std::string& path);
Arborescence read_tree_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace msa
