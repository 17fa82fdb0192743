#include "msa/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "msa/error.hpp"

namespace msa {

namespace {

struct LineReader {
  std::istream& in;
  std::size_t number = 0;

  // Next line that is neither blank nor a comment, trimmed.
  bool next(std::string& line) {
    while (std::getline(in, line)) {
      ++number;
      auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      auto last = line.find_last_not_of(" \t\r");
      line = line.substr(first, last - first + 1);
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw InvalidInput("line " + std::to_string(number) + ": " + what);
  }
};

std::size_t parse_header(LineReader& reader, const std::string& keyword) {
  std::string line;
  if (!reader.next(line)) throw InvalidInput("missing \"" + keyword + " <m>\" header");
  std::istringstream words(line);
  std::string word, extra;
  long long m = -1;
  if (!(words >> word >> m) || word != keyword || (words >> extra) || m < 0) {
    reader.fail("expected \"" + keyword + " <m>\", got \"" + line + "\"");
  }
  return static_cast<std::size_t>(m);
}

Node parse_bits(const LineReader& reader, const std::string& token, std::size_t m) {
  if (token.size() != m) {
    reader.fail("\"" + token + "\" has length " + std::to_string(token.size()) + ", expected " +
                std::to_string(m));
  }
  try {
    return Node::parse(token);
  } catch (const InvalidInput& e) {
    reader.fail(e.what());
  }
}

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  return in;
}

}  // namespace

RawInstance parse_instance(std::istream& in) {
  LineReader reader{in};
  const std::size_t m = parse_header(reader, "msa");
  std::vector<Node> terminals;
  std::string line;
  while (reader.next(line)) terminals.push_back(parse_bits(reader, line, m));
  if (terminals.empty()) throw InvalidInput("instance has no terminals");
  return RawInstance(m, std::move(terminals));
}

std::string render_instance(const RawInstance& inst) {
  std::string out = "msa " + std::to_string(inst.m) + "\n";
  for (const auto& t : inst.terminals) out += t.str() + "\n";
  return out;
}

Arborescence parse_tree(std::istream& in) {
  LineReader reader{in};
  const std::size_t m = parse_header(reader, "tree");
  Arborescence tree{Node(m)};
  std::string line;
  while (reader.next(line)) {
    std::istringstream words(line);
    std::string a, b, extra;
    if (!(words >> a >> b) || (words >> extra)) reader.fail("expected \"parent child\"");
    Node parent = parse_bits(reader, a, m);
    Node child = parse_bits(reader, b, m);
    // Non-unit edges are kept so validate() can report them.
    tree.add_edge(parent, child);
  }
  return tree;
}

std::string render_tree(const Arborescence& tree) {
  std::string out = "tree " + std::to_string(tree.dim()) + "\n";
  for (const auto& e : tree.edges()) out += e.parent.str() + " " + e.child.str() + "\n";
  return out;
}

std::string render_dot(const Arborescence& tree) {
  std::map<Node, std::size_t> id;
  for (const auto& n : tree.nodes()) id.emplace(n, id.size());
  if (id.empty()) id.emplace(tree.root(), 0);

  std::ostringstream out;
  out << "digraph msa {\n";
  for (const auto& [n, i] : id) out << "  n" << i << " [label=\"" << n.str() << "\"];\n";
  for (const auto& e : tree.edges()) {
    auto flipped = minus(e.child, e.parent).ones();
    out << "  n" << id.at(e.parent) << " -> n" << id.at(e.child);
    if (flipped.size() == 1) out << " [label=\"" << flipped.front() << "\"]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

RawInstance read_instance_file(const std::string& path) {
  auto in = open(path);
  return parse_instance(in);
}

Arborescence read_tree_file(const std::string& path) {
  auto in = open(path);
  return parse_tree(in);
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out || !(out << text)) throw InvalidInput("cannot write " + path);
}

}  // namespace msa
