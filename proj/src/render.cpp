#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "schubert/lattice_paths.hpp"

namespace schubert {

namespace {

// Cell contents shared by both formats: which path (if any) visits a grid
// point and whether it belongs to the distinguished set.
struct CellInfo {
  int path = -1;
  bool distinguished = false;
};

std::map<Root, CellInfo> annotate(const GrassmannIndex& v, const GrassmannIndex& w, const PathTuple& tuple) {
  std::map<Root, CellInfo> cells;
  for (std::size_t j = 0; j < tuple.size(); ++j)
    for (const Root& p : tuple[j].vertices) cells[p].path = static_cast<int>(j);
  const DistinguishedSet dist = distinguished_of(w, v);
  for (const Root& beta : dist.elements()) cells[beta].distinguished = true;
  return cells;
}

char path_letter(int j) { return static_cast<char>(j < 26 ? 'a' + j : '+'); }

std::string ascii_panel(const GrassmannIndex& v, const GrassmannIndex& w, const PathTuple& tuple) {
  const PathGrid grid(v);
  const auto cells = annotate(v, w, tuple);
  std::ostringstream os;
  os << "   ";
  for (int c : grid.cols()) os << (c < 10 ? "  " : " ") << c;
  os << '\n';
  for (int r : grid.rows()) {
    os << (r < 10 ? "  " : " ") << r;
    for (int c : grid.cols()) {
      char ch = ' ';
      if (r > c) {
        ch = '.';
        const auto it = cells.find(Root{r, c});
        if (it != cells.end()) {
          const CellInfo& info = it->second;
          if (info.path >= 0)
            ch = info.distinguished ? static_cast<char>(std::toupper(path_letter(info.path))) : path_letter(info.path);
          else if (info.distinguished)
            ch = '#';
        }
      }
      os << "  " << ch;
    }
    os << '\n';
  }
  return os.str();
}

std::string ascii_header(const GrassmannIndex& v, const GrassmannIndex& w) {
  std::ostringstream os;
  os << "# " << kAsciiFormatVersion << '\n'
     << "# n=" << v.n() << " v=" << v.str() << " w=" << w.str() << '\n'
     << "# rows: non-entries of v, columns: entries of v; '.' grid point, a-z path vertex,\n"
     << "# '#' distinguished element, upper case when a path passes through one\n";
  return os.str();
}

constexpr int kCell = 28;
constexpr int kMargin = 32;

struct SvgPanelSize {
  int width;
  int height;
};

SvgPanelSize svg_size(const PathGrid& grid) {
  return {kMargin + kCell * static_cast<int>(grid.cols().size()) + kCell / 2,
          kMargin + kCell * static_cast<int>(grid.rows().size()) + kCell / 2};
}

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};

void svg_panel(std::ostream& os, const GrassmannIndex& v, const GrassmannIndex& w, const PathTuple& tuple, int ox,
               int oy) {
  const PathGrid grid(v);
  const auto cx = [&](int c) { return ox + kMargin + kCell * grid.col_rank(c) + kCell / 2; };
  const auto cy = [&](int r) { return oy + kMargin + kCell * grid.row_rank(r) + kCell / 2; };

  os << "<g font-family=\"monospace\" font-size=\"10\" text-anchor=\"middle\">\n";
  for (int c : grid.cols()) os << "<text x=\"" << cx(c) << "\" y=\"" << oy + kMargin - 10 << "\">" << c << "</text>\n";
  for (int r : grid.rows())
    os << "<text x=\"" << ox + kMargin - 14 << "\" y=\"" << cy(r) + 3 << "\">" << r << "</text>\n";
  os << "</g>\n";

  const DistinguishedSet dist = distinguished_of(w, v);
  for (const Root& beta : dist.elements())
    os << "<rect x=\"" << cx(beta.col) - 8 << "\" y=\"" << cy(beta.row) - 8
       << "\" width=\"16\" height=\"16\" fill=\"none\" stroke=\"#000000\" stroke-width=\"1.5\"/>\n";
  for (int r : grid.rows())
    for (int c : grid.cols())
      if (r > c) os << "<circle cx=\"" << cx(c) << "\" cy=\"" << cy(r) << "\" r=\"2\" fill=\"#999999\"/>\n";

  for (std::size_t j = 0; j < tuple.size(); ++j) {
    const char* colour = kPalette[j % std::size(kPalette)];
    os << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"3\" points=\"";
    for (std::size_t i = 0; i < tuple[j].vertices.size(); ++i) {
      const Root& p = tuple[j].vertices[i];
      os << (i ? " " : "") << cx(p.col) << ',' << cy(p.row);
    }
    os << "\"/>\n";
    for (const Root& p : tuple[j].vertices)
      os << "<circle cx=\"" << cx(p.col) << "\" cy=\"" << cy(p.row) << "\" r=\"4\" fill=\"" << colour << "\"/>\n";
  }
}

std::string svg_document(const GrassmannIndex& v, const GrassmannIndex& w, const std::vector<PathTuple>& tuples) {
  const PathGrid grid(v);
  const SvgPanelSize panel = svg_size(grid);
  std::size_t per_row = 1;
  while (per_row * per_row < tuples.size()) ++per_row;
  const std::size_t count = std::max<std::size_t>(tuples.size(), 1);
  const std::size_t lines = (count + per_row - 1) / per_row;
  const int width = panel.width * static_cast<int>(per_row);
  const int height = panel.height * static_cast<int>(lines);

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<!-- " << kSvgFormatVersion << " n=" << v.n() << " v=" << v.str() << " w=" << w.str() << " -->\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
     << "<rect width=\"" << width << "\" height=\"" << height << "\" fill=\"#ffffff\"/>\n";
  if (tuples.empty()) {
    svg_panel(os, v, w, {}, 0, 0);
  } else {
    for (std::size_t i = 0; i < tuples.size(); ++i)
      svg_panel(os, v, w, tuples[i], panel.width * static_cast<int>(i % per_row),
                panel.height * static_cast<int>(i / per_row));
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace

RenderFormat parse_render_format(const std::string& name) {
  if (name == "ascii") return RenderFormat::ascii;
  if (name == "svg") return RenderFormat::svg;
  throw InvalidInput("unknown render format '" + name + "' (expected ascii or svg)");
}

std::string render(const GrassmannIndex& v, const GrassmannIndex& w, const PathTuple& tuple, RenderFormat format) {
  if (format == RenderFormat::svg) return svg_document(v, w, {tuple});
  return ascii_header(v, w) + ascii_panel(v, w, tuple);
}

std::string render_sheet(const GrassmannIndex& v, const GrassmannIndex& w, const std::vector<PathTuple>& tuples,
                         RenderFormat format) {
  if (format == RenderFormat::svg) return svg_document(v, w, tuples);
  std::string out = ascii_header(v, w);
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    out += "\n## tuple " + std::to_string(i + 1) + "/" + std::to_string(tuples.size()) + "\n";
    out += ascii_panel(v, w, tuples[i]);
  }
  if (tuples.empty()) out += ascii_panel(v, w, {});
  return out;
}

}  // namespace schubert
