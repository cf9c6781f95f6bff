#include <cctype>
#include <cstdlib>

#include "cli.hpp"
#include "witt/errors.hpp"
#include "witt/pairings.hpp"

namespace witt::cli {

std::size_t simplex_ceiling() {
  if (const char* env = std::getenv("WITT_SIMPLEX_CEILING")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    throw ValidationError(std::string("WITT_SIMPLEX_CEILING is not a positive number: ") + env);
  }
  return 5000000;
}

std::size_t subdivision_estimate(const SimplicialComplex& x) {
  // chains of faces ending at a d-simplex are ordered set partitions of d+1 points
  std::vector<double> fubini{1};
  const auto f = x.f_vector();
  for (std::size_t n = 1; n <= f.size(); ++n) {
    double total = 0, binom = 1;
    for (std::size_t k = 1; k <= n; ++k) {
      binom = binom * static_cast<double>(n - k + 1) / static_cast<double>(k);
      total += binom * fubini[n - k];
    }
    fubini.push_back(total);
  }
  double total = 0;
  for (std::size_t d = 0; d < f.size(); ++d) total += static_cast<double>(f[d]) * fubini[d + 1];
  return static_cast<std::size_t>(total);
}

namespace {

class ExpressionParser {
 public:
  ExpressionParser(const std::string& text, std::size_t ceiling) : s_(text), ceiling_(ceiling) {}

  SimplicialComplex parse() {
    auto x = expression();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return x;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, 1, static_cast<int>(pos_) + 1); }
  // well-formed but not constructible
  [[noreturn]] void reject(const std::string& what) const {
    throw ValidationError("column " + std::to_string(pos_ + 1) + ": " + what);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  void expect(char c) {
    skip();
    if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  std::string word() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a space name");
    return s_.substr(start, pos_ - start);
  }
  long integer() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_ || pos_ - start > 9) {
      pos_ = start;
      fail("expected a non-negative integer");
    }
    return std::stol(s_.substr(start, pos_ - start));
  }
  Vertex vertex_in(const SimplicialComplex& x) {
    const std::size_t at = pos_;
    const auto v = static_cast<Vertex>(integer());
    if (!x.contains(Simplex({v}))) {
      pos_ = at;
      fail("vertex " + std::to_string(v) + " is not in the complex");
    }
    return v;
  }
  void guard(std::size_t estimate, const char* op) const {
    if (estimate > ceiling_)
      throw OutOfReachError(std::string(op) + " would produce about " + std::to_string(estimate) +
                            " simplices, above the ceiling of " + std::to_string(ceiling_));
  }

  SimplicialComplex expression() {
    const std::size_t at = (skip(), pos_);
    const std::string head = word();
    auto catalogued = [&](const std::string& name) {
      try {
        return standard_space(name);
      } catch (const ValidationError& e) {
        pos_ = at;
        reject(e.what());
      }
    };
    if (head == "sphere" || head == "genus") {
      expect('(');
      const long n = integer();
      expect(')');
      return catalogued(head + "(" + std::to_string(n) + ")");
    }
    if (head == "rp2" || head == "rp3" || head == "torus" || head == "klein" || head == "cp2" || head == "s1")
      return catalogued(head);
    if (head == "cone" || head == "susp" || head == "sd") {
      expect('(');
      auto x = expression();
      expect(')');
      if (head == "cone") return cone(x);
      if (head == "susp") return suspension(x);
      guard(subdivision_estimate(x), "sd");
      return barycentric_subdivision(x).complex;
    }
    if (head == "wedge" || head == "prod") {
      expect('(');
      auto x = expression();
      expect(',');
      auto y = expression();
      expect(')');
      if (head == "prod") {
        guard(product_simplex_estimate(x, y), "prod");
        return product(x, y);
      }
      return wedge(x, x.vertices().front(), y, y.vertices().front());
    }
    if (head == "glue") {
      expect('(');
      auto x = expression();
      expect('@');
      const Vertex v = vertex_in(x);
      expect(',');
      auto y = expression();
      expect('@');
      const Vertex w = vertex_in(y);
      expect(')');
      return wedge(x, v, y, w);
    }
    if (head == "pinch") {
      expect('(');
      auto x = expression();
      expect('@');
      const Vertex v = vertex_in(x);
      expect(',');
      const std::size_t wpos = (skip(), pos_);
      const Vertex w = vertex_in(x);
      expect(')');
      try {
        return glue_at_points(x, {{v, w}});
      } catch (const ValidationError& e) {
        pos_ = wpos;
        reject(e.what());
      }
    }
    pos_ = at;
    fail("unknown space '" + head + "'");
  }

  const std::string& s_;
  std::size_t pos_ = 0;
  std::size_t ceiling_;
};

}  // namespace

SimplicialComplex evaluate_expression(const std::string& expr, std::size_t ceiling) {
  return ExpressionParser(expr, ceiling).parse();
}

}  // namespace witt::cli
