#include "cablecone/cfk_io.hpp"

#include <map>
#include <sstream>

namespace cablecone {

namespace {

std::string join(const std::vector<Violation>& v) {
  std::string s = "complex fails validation:";
  for (const auto& x : v) s += "\n  " + x.message;
  return s;
}

std::vector<std::string> tokens(std::string_view line) {
  std::vector<std::string> out;
  std::size_t k = 0;
  while (k < line.size()) {
    while (k < line.size() && (line[k] == ' ' || line[k] == '\t' || line[k] == '\r')) ++k;
    std::size_t start = k;
    while (k < line.size() && line[k] != ' ' && line[k] != '\t' && line[k] != '\r') ++k;
    if (k > start) out.emplace_back(line.substr(start, k - start));
  }
  return out;
}

}  // namespace

CfkValidationError::CfkValidationError(std::vector<Violation> v)
    : std::runtime_error(join(v)), violations_(std::move(v)) {}

KnotComplex parse_cfk(std::string_view text) {
  KnotComplex c;
  std::map<std::string, std::size_t> names;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tok = tokens(line);
    if (tok.empty()) continue;

    auto integer = [&](const std::string& s, const char* what) {
      try {
        return parse_integer(s);
      } catch (const std::exception&) {
        throw CfkParseError(line_no, std::string("expected integer ") + what + ", got '" + s + "'");
      }
    };
    auto lookup = [&](const std::string& s) {
      auto it = names.find(s);
      if (it == names.end()) throw CfkParseError(line_no, "unknown generator '" + s + "'");
      return it->second;
    };

    if (tok[0] == "gen") {
      if (tok.size() != 4) throw CfkParseError(line_no, "expected 'gen <name> <gr_u> <gr_v>'");
      if (names.count(tok[1])) throw CfkParseError(line_no, "duplicate generator '" + tok[1] + "'");
      names[tok[1]] = c.add_generator(tok[1], integer(tok[2], "gr_u"), integer(tok[3], "gr_v"));
    } else if (tok[0] == "arrow") {
      if (tok.size() != 5) throw CfkParseError(line_no, "expected 'arrow <from> <to> <a> <b>'");
      const std::size_t from = lookup(tok[1]);
      const std::size_t to = lookup(tok[2]);
      const Int a = integer(tok[3], "a");
      const Int b = integer(tok[4], "b");
      if (a < 0 || b < 0) throw CfkParseError(line_no, "arrow exponents must be nonnegative");
      c.toggle_arrow(from, to, UVMonomial(a, b));
    } else {
      throw CfkParseError(line_no, "unknown statement '" + tok[0] + "'");
    }
  }
  if (auto v = validate(c); !v.empty()) throw CfkValidationError(std::move(v));
  return c;
}

std::string format_cfk(const KnotComplex& c) {
  std::ostringstream os;
  for (const auto& g : c.gens()) os << "gen " << g.id << ' ' << g.gr_u << ' ' << g.gr_v << '\n';
  for (std::size_t k = 0; k < c.size(); ++k)
    for (const auto& a : c.arrows(k))
      os << "arrow " << c.gen(k).id << ' ' << c.gen(a.to).id << ' ' << a.coeff.u_exp() << ' ' << a.coeff.v_exp()
         << '\n';
  return os.str();
}

}  // namespace cablecone
