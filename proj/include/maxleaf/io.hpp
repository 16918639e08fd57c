#pragma once

#include <iosfwd>
#include <string>

#include "maxleaf/digraph.hpp"

namespace maxleaf {

/// Graph text: a header line `n m r`, then m lines `u v`. Blank lines and
/// lines starting with '#' are skipped. Throws ParseError carrying the line.
RootedDigraph read_graph(std::istream& in);
void write_graph(std::ostream& out, const RootedDigraph& d);

/// Tree text: `n r`, then n-1 lines `child parent`.
Outbranching read_tree(std::istream& in);
void write_tree(std::ostream& out, const Outbranching& t);

RootedDigraph load_graph(const std::string& path);
Outbranching load_tree(const std::string& path);
void save_graph(const std::string& path, const RootedDigraph& d);
void save_tree(const std::string& path, const Outbranching& t);

}  // namespace maxleaf
