#include "witt/spacefile.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

#include "witt/errors.hpp"

namespace witt {

namespace {

struct Token {
  std::string text;
  int column = 0;  // 1-based
};

struct Line {
  int number = 0;
  std::vector<Token> tokens;
  std::string body;  // comment stripped
};

std::vector<Token> split(const std::string& s, int offset = 0) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i == s.size()) break;
    const std::size_t start = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    out.push_back({s.substr(start, i - start), static_cast<int>(start) + 1 + offset});
  }
  return out;
}

std::vector<Line> lines_of(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    Line l{number, split(raw), raw};
    if (!l.tokens.empty()) out.push_back(std::move(l));
  }
  return out;
}

long parse_int(const Token& t, int line, const char* what) {
  long v = 0;
  auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
  if (ec != std::errc() || ptr != t.text.data() + t.text.size())
    throw ParseError(std::string("expected ") + what + ", found '" + t.text + "'", line, t.column);
  return v;
}

std::vector<Vertex> parse_vertices(const std::vector<Token>& tokens, int line) {
  std::vector<Vertex> vs;
  for (const auto& t : tokens) {
    const long v = parse_int(t, line, "a vertex");
    if (v < 0 || v > std::numeric_limits<Vertex>::max())
      throw ParseError("vertex " + t.text + " out of range", line, t.column);
    if (std::find(vs.begin(), vs.end(), v) != vs.end())
      throw ParseError("vertex " + t.text + " repeated in simplex", line, t.column);
    vs.push_back(static_cast<Vertex>(v));
  }
  return vs;
}

int permutation_sign(std::vector<Vertex> v) {
  int sign = 1;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (v[i] > v[j]) sign = -sign;
  return sign;
}

void check_orientation(const SimplicialComplex& x, const Orientation& o) {
  // each interior codimension-one face must receive opposite induced signs
  std::map<Simplex, int> induced;
  const auto& facets = x.facets();
  for (std::size_t i = 0; i < facets.size(); ++i) {
    const auto& f = facets[i].vertices();
    for (std::size_t drop = 0; drop < f.size(); ++drop) {
      std::vector<Vertex> face;
      for (std::size_t j = 0; j < f.size(); ++j)
        if (j != drop) face.push_back(f[j]);
      const int sign = o.signs[i] * (drop % 2 == 0 ? 1 : -1);
      auto [it, fresh] = induced.emplace(Simplex(face), sign);
      if (!fresh) {
        if (it->second == 0 || it->second + sign != 0)
          throw ValidationError("declared orientation is inconsistent across face " + it->first.to_string());
        it->second = 0;
      }
    }
  }
}

std::string simplex_text(const Simplex& s) {
  std::string out;
  for (Vertex v : s) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  }
  return out;
}

}  // namespace

StratifiedSpace SpaceFile::declared_space() const {
  if (!filtration) throw ValidationError("the file declares no filtration");
  return stratify(complex, *filtration);
}

SpaceFile parse_space(const std::string& text) {
  const auto lines = lines_of(text);
  std::size_t i = 0;
  auto last_line = [&] { return lines.empty() ? 1 : lines.back().number; };
  if (lines.empty()) throw ParseError("empty space file", 1, 1);
  const auto& head = lines[0];
  if (head.tokens[0].text != "dim") throw ParseError("expected 'dim <n>'", head.number, head.tokens[0].column);
  if (head.tokens.size() != 2) throw ParseError("expected 'dim <n>'", head.number, head.tokens[0].column);
  const long n = parse_int(head.tokens[1], head.number, "a dimension");
  if (n < 0 || n > 64) throw ParseError("dimension out of range", head.number, head.tokens[1].column);
  ++i;

  struct FacetLine {
    std::vector<Vertex> vertices;
    int line;
  };
  std::optional<std::vector<FacetLine>> facet_lines;
  std::optional<std::map<int, std::pair<std::vector<Simplex>, int>>> filt;
  std::optional<std::vector<std::pair<std::size_t, int>>> orient_lines;
  int orient_line_number = 0;

  while (i < lines.size()) {
    const auto& l = lines[i];
    const auto& kw = l.tokens[0];
    if (l.tokens.size() != 1) throw ParseError("unexpected text after '" + kw.text + "'", l.number, l.tokens[1].column);
    const int opened = l.number;
    auto block = [&]() {
      std::vector<const Line*> body;
      ++i;
      while (i < lines.size() && !(lines[i].tokens.size() == 1 && lines[i].tokens[0].text == "end")) body.push_back(&lines[i++]);
      if (i == lines.size()) throw ParseError("block '" + kw.text + "' opened on line " + std::to_string(opened) + " is not closed", last_line(), 1);
      ++i;
      return body;
    };
    if (kw.text == "facets") {
      if (facet_lines) throw ParseError("duplicate facets block", l.number, kw.column);
      facet_lines.emplace();
      for (const Line* b : block()) {
        auto vs = parse_vertices(b->tokens, b->number);
        if (static_cast<long>(vs.size()) > n + 1)
          throw ParseError("facet has " + std::to_string(vs.size()) + " vertices in a complex of dimension " + std::to_string(n), b->number, b->tokens[0].column);
        facet_lines->push_back({std::move(vs), b->number});
      }
    } else if (kw.text == "filtration") {
      if (filt) throw ParseError("duplicate filtration block", l.number, kw.column);
      filt.emplace();
      for (const Line* b : block()) {
        const auto& t0 = b->tokens[0];
        const auto colon = b->body.find(':');
        if (t0.text.size() < 2 || t0.text[0] != 'X' || colon == std::string::npos)
          throw ParseError("expected 'X<d>: <simplices>'", b->number, t0.column);
        const std::size_t start = static_cast<std::size_t>(t0.column - 1);
        std::string label = b->body.substr(start + 1, colon - start - 1);
        while (!label.empty() && std::isspace(static_cast<unsigned char>(label.back()))) label.pop_back();
        const long d = parse_int(Token{label, t0.column + 1}, b->number, "a filtration index");
        if (filt->count(static_cast<int>(d))) throw ParseError("X" + label + " declared twice", b->number, t0.column);
        std::vector<Simplex> simplices;
        std::size_t pos = colon + 1;
        while (pos <= b->body.size()) {
          std::size_t semi = b->body.find(';', pos);
          if (semi == std::string::npos) semi = b->body.size();
          auto toks = split(b->body.substr(pos, semi - pos), static_cast<int>(pos));
          if (!toks.empty()) {
            simplices.emplace_back(parse_vertices(toks, b->number));
          } else if (semi < b->body.size()) {
            throw ParseError("empty simplex in filtration", b->number, static_cast<int>(semi) + 1);
          }
          pos = semi + 1;
        }
        filt->emplace(static_cast<int>(d), std::make_pair(std::move(simplices), b->number));
      }
    } else if (kw.text == "orientation") {
      if (orient_lines) throw ParseError("duplicate orientation block", l.number, kw.column);
      orient_lines.emplace();
      orient_line_number = l.number;
      for (const Line* b : block()) {
        if (b->tokens.size() != 2 || (b->tokens[1].text != "+" && b->tokens[1].text != "-"))
          throw ParseError("expected '<facet line> <+|->'", b->number, b->tokens[0].column);
        const long idx = parse_int(b->tokens[0], b->number, "a facet line number");
        if (idx < 1) throw ParseError("facet line numbers start at 1", b->number, b->tokens[0].column);
        orient_lines->emplace_back(static_cast<std::size_t>(idx), b->tokens[1].text == "+" ? 1 : -1);
      }
    } else if (kw.text == "dim") {
      throw ParseError("duplicate 'dim'", l.number, kw.column);
    } else {
      throw ParseError("unknown block '" + kw.text + "'", l.number, kw.column);
    }
  }
  if (!facet_lines) throw ParseError("missing facets block", last_line(), 1);
  if (facet_lines->empty()) throw ValidationError("the facets block is empty");

  SpaceFile out;
  std::vector<Simplex> facets;
  for (const auto& fl : *facet_lines) facets.emplace_back(fl.vertices);
  out.complex = SimplicialComplex(facets);
  if (out.complex.dimension() != n)
    throw ValidationError("declared dimension " + std::to_string(n) + " but the facets span dimension " +
                          std::to_string(out.complex.dimension()));
  if (filt) {
    out.filtration.emplace();
    for (auto& [d, entry] : *filt) {
      if (d < 0 || d >= n) throw ValidationError("X" + std::to_string(d) + " (line " + std::to_string(entry.second) + ") outside 0.." + std::to_string(n - 1));
      for (const auto& s : entry.first)
        if (!out.complex.contains(s))
          throw ValidationError("X" + std::to_string(d) + " (line " + std::to_string(entry.second) + "): " + s.to_string() + " is not a simplex");
      (*out.filtration)[d] = SimplicialComplex(entry.first);
    }
    stratify(out.complex, *out.filtration);
  }
  if (orient_lines) {
    const auto& canon = out.complex.facets();
    std::vector<int> signs(canon.size(), 0);
    for (auto [idx, sign] : *orient_lines) {
      if (idx > facet_lines->size())
        throw ValidationError("orientation refers to facet line " + std::to_string(idx) + " of " + std::to_string(facet_lines->size()));
      const auto& written = (*facet_lines)[idx - 1].vertices;
      Simplex s(written);
      auto pos = std::lower_bound(canon.begin(), canon.end(), s);
      if (pos == canon.end() || !(*pos == s)) throw ValidationError("orientation given for a non-maximal simplex " + s.to_string());
      const int sorted_sign = sign * permutation_sign(written);
      int& slot = signs[pos - canon.begin()];
      if (slot != 0 && slot != sorted_sign) throw ValidationError("conflicting orientation for facet " + s.to_string());
      slot = sorted_sign;
    }
    for (std::size_t k = 0; k < canon.size(); ++k)
      if (signs[k] == 0)
        throw ValidationError("orientation block (line " + std::to_string(orient_line_number) + ") omits facet " + canon[k].to_string());
    out.orientation = Orientation{std::move(signs)};
    check_orientation(out.complex, *out.orientation);
  }
  return out;
}

SpaceFile read_space_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_space(ss.str());
}

std::string serialize_space(const SpaceFile& file) {
  std::string out = "dim " + std::to_string(file.complex.dimension()) + "\nfacets\n";
  for (const auto& f : file.complex.facets()) out += simplex_text(f) + "\n";
  out += "end\n";
  if (file.filtration) {
    out += "filtration\n";
    for (const auto& [d, sub] : *file.filtration) {
      out += "X" + std::to_string(d) + ":";
      bool first = true;
      for (const auto& s : sub.facets()) {
        out += first ? " " : "; ";
        out += simplex_text(s);
        first = false;
      }
      out += "\n";
    }
    out += "end\n";
  }
  if (file.orientation) {
    out += "orientation\n";
    for (std::size_t k = 0; k < file.orientation->signs.size(); ++k)
      out += std::to_string(k + 1) + (file.orientation->signs[k] > 0 ? " +\n" : " -\n");
    out += "end\n";
  }
  return out;
}

SpaceFile space_file_of(const SimplicialComplex& x) {
  SpaceFile f;
  f.complex = x;
  return f;
}

SpaceFile space_file_of(const StratifiedSpace& s) {
  SpaceFile f;
  f.complex = s.complex();
  f.filtration.emplace();
  SimplicialComplex previous;
  for (int d = 0; d < s.dimension(); ++d) {
    if (!(s.skeleton(d) == previous)) (*f.filtration)[d] = s.skeleton(d);
    previous = s.skeleton(d);
  }
  return f;
}

}  // namespace witt
