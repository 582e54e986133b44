#pragma once

// Plain-text and DOT renderings of markings and their pipes on the
// triangular grid.  Cells are drawn at row i, column j (1-based, j >= i);
// pipe routes come from trace_pipe.

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "mcop/pipedream.hpp"
#include "mcop/poset.hpp"

namespace mcop {

// One character per cell: '%' marked, 'o' unmarked diagonal, '.' other.
inline std::string render_marking_ascii(const GtPoset& p, Mask m) {
  std::ostringstream out;
  for (int i = 1; i <= p.n(); ++i) {
    for (int j = 1; j <= p.n(); ++j) {
      if (j < i) {
        out << ' ';
      } else if (m & (Mask{1} << p.id(i, j))) {
        out << '%';
      } else {
        out << (i == j ? 'o' : '.');
      }
      if (j < p.n()) out << ' ';
    }
    out << '\n';
  }
  return out.str();
}

// Overlay of all n pipes: '%' where both pipes turn (marked cell), '+'
// where two pipes cross, '-' / '|' for a single pass, 'r' for a lone turn
// on the diagonal, and the exit permutation in a legend.
inline std::string render_pipes_ascii(const GtPoset& p, Mask m) {
  std::map<int, std::vector<PipeDir>> visits;  // eid -> directions seen
  std::vector<PipePath> paths;
  for (int pipe = 1; pipe <= p.n(); ++pipe) {
    paths.push_back(trace_pipe(p, m, pipe));
  }
  for (const auto& path : paths) {
    // reconstruct the direction on each visited cell
    for (std::size_t t = 0; t < path.cells.size(); ++t) {
      const PosetElement cur = path.cells[t];
      PipeDir dir;
      if (t + 1 < path.cells.size()) {
        const PosetElement nxt = path.cells[t + 1];
        dir = (nxt.i == cur.i) ? PipeDir::AlongJ : PipeDir::AlongI;
      } else {
        dir = PipeDir::AlongI;  // exits upward through the top row
      }
      visits[p.id(cur)].push_back(dir);
    }
  }
  std::ostringstream out;
  for (int i = 1; i <= p.n(); ++i) {
    for (int j = 1; j <= p.n(); ++j) {
      char c = ' ';
      if (j >= i) {
        const int eid = p.id(i, j);
        const bool marked = (m & (Mask{1} << eid)) != 0;
        const auto it = visits.find(eid);
        const int seen = (it == visits.end())
                             ? 0
                             : static_cast<int>(it->second.size());
        if (marked) {
          c = '%';
        } else if (seen >= 2) {
          c = '+';
        } else if (seen == 1) {
          if (i == j) {
            c = 'r';  // the diagonal always turns an incoming pipe
          } else {
            c = (it->second.front() == PipeDir::AlongJ) ? '-' : '|';
          }
        } else {
          c = '.';
        }
      }
      out << c;
      if (j < p.n()) out << ' ';
    }
    out << '\n';
  }
  out << "w = (";
  for (int i = 1; i <= p.n(); ++i) {
    if (i > 1) out << ',';
    out << paths[i - 1].exit_column;
  }
  out << ")\n";
  return out.str();
}

// DOT digraph, one color per pipe.
inline std::string render_pipes_dot(const GtPoset& p, Mask m) {
  static const char* kPalette[] = {"red",    "blue",   "forestgreen",
                                   "orange", "purple", "brown",
                                   "cyan3",  "magenta", "gray40",
                                   "olive"};
  std::ostringstream out;
  out << "digraph pipes {\n  node [shape=circle, fontsize=10];\n";
  for (int i = 1; i <= p.n(); ++i) {
    for (int j = i; j <= p.n(); ++j) {
      const bool marked = (m & (Mask{1} << p.id(i, j))) != 0;
      out << "  c" << i << "_" << j << " [label=\"" << i << "," << j
          << "\", pos=\"" << j << ",-" << i << "!\""
          << (marked ? ", style=filled, fillcolor=lightgray" : "") << "];\n";
    }
  }
  for (int pipe = 1; pipe <= p.n(); ++pipe) {
    const PipePath path = trace_pipe(p, m, pipe);
    const char* color = kPalette[(pipe - 1) % 10];
    for (std::size_t t = 0; t + 1 < path.cells.size(); ++t) {
      out << "  c" << path.cells[t].i << "_" << path.cells[t].j << " -> c"
          << path.cells[t + 1].i << "_" << path.cells[t + 1].j << " [color="
          << color << "];\n";
    }
    out << "  exit" << pipe << " [label=\"" << path.exit_column
        << "\", shape=none];\n";
    out << "  c" << path.cells.back().i << "_" << path.cells.back().j
        << " -> exit" << pipe << " [color=" << color << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace mcop
