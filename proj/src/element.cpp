#include "findec/element.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

namespace findec {

Multiindex::Multiindex(std::map<int, long long> exps) : exps_(std::move(exps)) {
  for (auto it = exps_.begin(); it != exps_.end();) {
    if (it->first < 1) throw Error("ParseError", "variable index must be >= 1");
    if (it->second == 0)
      it = exps_.erase(it);
    else
      ++it;
  }
}

bool Multiindex::all_positive() const {
  for (const auto& [v, e] : exps_)
    if (e < 0) return false;
  return true;
}

long long Multiindex::degree() const {
  long long d = 0;
  for (const auto& [v, e] : exps_) d += e;
  return d;
}

long long Multiindex::weight() const {
  long long w = 0;
  for (const auto& [v, e] : exps_) w += static_cast<long long>(v) * (e < 0 ? -e : e);
  return w;
}

Multiindex Multiindex::plus(const Multiindex& other) const {
  std::map<int, long long> r = exps_;
  for (const auto& [v, e] : other.exps_) {
    auto [it, fresh] = r.try_emplace(v, e);
    if (!fresh && (it->second += e) == 0) r.erase(it);
  }
  return Multiindex(std::move(r));
}

Multiindex Multiindex::minus(const Multiindex& other) const {
  std::map<int, long long> r = exps_;
  for (const auto& [v, e] : other.exps_) {
    auto [it, fresh] = r.try_emplace(v, -e);
    if (!fresh && (it->second -= e) == 0) r.erase(it);
  }
  return Multiindex(std::move(r));
}

bool Multiindex::dominates(const Multiindex& other) const {
  for (const auto& [v, e] : other.exps_) {
    auto it = exps_.find(v);
    long long mine = it == exps_.end() ? 0 : it->second;
    if (mine < e) return false;
  }
  return true;
}

std::string Multiindex::str() const {
  if (exps_.empty()) return "1";
  std::string out;
  for (const auto& [v, e] : exps_) {
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(v);
    if (e != 1) out += '^' + std::to_string(e);
  }
  return out;
}

namespace {

long long parse_ll(const std::string& s, const char* what) {
  if (s.empty()) throw Error("ParseError", std::string("empty ") + what);
  std::size_t i = s[0] == '-' ? 1 : 0;
  if (i == s.size()) throw Error("ParseError", std::string("bad ") + what + " '" + s + "'");
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw Error("ParseError", std::string("bad ") + what + " '" + s + "'");
  return std::stoll(s);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string strip(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

/// Accepts "(...)" or bare "..."; returns the inside.
std::string unparen(const std::string& s0) {
  std::string s = strip(s0);
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') return s.substr(1, s.size() - 2);
  return s;
}

}  // namespace

Multiindex parse_multiindex(const std::string& s0, bool allow_negative) {
  std::string s = strip(s0);
  if (s == "1") return Multiindex();
  std::map<int, long long> exps;
  for (const std::string& part0 : split(s, '*')) {
    std::string part = strip(part0);
    if (part.size() < 2 || part[0] != 'x')
      throw Error("ParseError", "bad monomial factor '" + part + "'");
    std::string var, exp = "1";
    auto caret = part.find('^');
    if (caret == std::string::npos) {
      var = part.substr(1);
    } else {
      var = part.substr(1, caret - 1);
      exp = part.substr(caret + 1);
    }
    long long v = parse_ll(var, "variable index");
    long long e = parse_ll(exp, "exponent");
    if (v < 1) throw Error("ParseError", "variable index must be >= 1 in '" + part + "'");
    if (e < 0 && !allow_negative)
      throw Error("ParseError", "negative exponent not allowed in '" + part + "'");
    exps[static_cast<int>(v)] += e;
  }
  return Multiindex(std::move(exps));
}

Element Element::table(int index, std::string name) {
  return Element(Payload(TableElem{index, std::move(name)}));
}

Element Element::ddl_pair(std::string label, Element inner) {
  return Element(Payload(DdlPair{std::move(label), std::make_shared<const Element>(std::move(inner))}));
}

unsigned long long Element::as_natural() const {
  if (!is_natural()) throw Error("ElementNotInCarrier", "expected a natural, got " + str());
  return std::get<unsigned long long>(payload_);
}
const Element::TableElem& Element::as_table() const {
  if (!is_table()) throw Error("ElementNotInCarrier", "expected a table element, got " + str());
  return std::get<TableElem>(payload_);
}
const Multiindex& Element::as_monomial() const {
  if (!is_monomial()) throw Error("ElementNotInCarrier", "expected a monomial, got " + str());
  return std::get<Multiindex>(payload_);
}
const Element::Word& Element::as_word() const {
  if (!is_word()) throw Error("ElementNotInCarrier", "expected a word, got " + str());
  return std::get<Word>(payload_);
}
const Element::Composition& Element::as_composition() const {
  if (!is_composition()) throw Error("ElementNotInCarrier", "expected a composition, got " + str());
  return std::get<Composition>(payload_);
}
const Element::Bicomposition& Element::as_bicomposition() const {
  if (!is_bicomposition())
    throw Error("ElementNotInCarrier", "expected a bicomposition, got " + str());
  return std::get<Bicomposition>(payload_);
}
const Element::MonWord& Element::as_monword() const {
  if (!is_monword()) throw Error("ElementNotInCarrier", "expected a monomial word, got " + str());
  return std::get<MonWord>(payload_);
}
const Element::DdlPair& Element::as_ddl_pair() const {
  if (!is_ddl_pair()) throw Error("ElementNotInCarrier", "expected a tagged pair, got " + str());
  return std::get<DdlPair>(payload_);
}

namespace {

struct Printer {
  std::string operator()(unsigned long long n) const { return std::to_string(n); }
  std::string operator()(const Element::TableElem& t) const { return t.name; }
  std::string operator()(const Multiindex& m) const { return m.str(); }
  std::string operator()(const Element::Word& w) const {
    if (w.empty()) return "1";
    std::string out;
    for (const auto& letter : w) {
      if (!out.empty()) out += ' ';
      out += letter;
    }
    return out;
  }
  std::string operator()(const Element::Composition& c) const {
    std::string out = "(";
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(c[i]);
    }
    return out + ")";
  }
  std::string operator()(const Element::Bicomposition& b) const {
    std::string out = "(";
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(b[i].first) + '/' + std::to_string(b[i].second);
    }
    return out + ")";
  }
  std::string operator()(const Element::MonWord& w) const {
    if (w.empty()) return "1";
    std::string out;
    for (const auto& m : w) out += '[' + m.str() + ']';
    return out;
  }
  std::string operator()(const Element::DdlPair& p) const {
    return '(' + p.label + '|' + p.inner->str() + ')';
  }
};

}  // namespace

Element::Element(Payload p) : payload_(std::move(p)), key_(std::visit(Printer{}, payload_)) {}

Element parse_natural_elem(const std::string& s) {
  long long n = parse_ll(strip(s), "natural");
  if (n < 0) throw Error("ParseError", "natural must be nonnegative: '" + s + "'");
  return Element::natural(static_cast<unsigned long long>(n));
}

Element parse_word_elem(const std::string& s0) {
  std::string s = strip(s0);
  if (s == "1" || s.empty()) return Element::word({});
  Element::Word w;
  std::istringstream in(s);
  std::string letter;
  while (in >> letter) {
    for (char c : letter)
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
        throw Error("ParseError", "bad letter '" + letter + "'");
    if (letter == "1") throw Error("ParseError", "'1' denotes the empty word, not a letter");
    w.push_back(letter);
  }
  return Element::word(std::move(w));
}

Element parse_composition_elem(const std::string& s0) {
  std::string s = unparen(s0);
  if (s.empty()) return Element::composition({});
  Element::Composition c;
  for (const std::string& part : split(s, ',')) {
    long long v = parse_ll(strip(part), "composition entry");
    if (v < 1) throw Error("ParseError", "composition entries must be >= 1");
    c.push_back(v);
  }
  return Element::composition(std::move(c));
}

Element parse_bicomposition_elem(const std::string& s0) {
  std::string s = unparen(s0);
  if (s.empty()) return Element::bicomposition({});
  Element::Bicomposition b;
  for (const std::string& part0 : split(s, ',')) {
    std::string part = strip(part0);
    auto slash = part.find('/');
    if (slash == std::string::npos)
      throw Error("ParseError", "bicomposition entry needs a '/': '" + part + "'");
    long long top = parse_ll(strip(part.substr(0, slash)), "bicomposition entry");
    long long bot = parse_ll(strip(part.substr(slash + 1)), "bicomposition entry");
    if (top < 0 || bot < 0) throw Error("ParseError", "bicomposition entries must be >= 0");
    if (top == 0 && bot == 0)
      throw Error("ParseError", "bicomposition letter (0/0) is not allowed");
    b.emplace_back(top, bot);
  }
  return Element::bicomposition(std::move(b));
}

Element parse_monword_elem(const std::string& s0) {
  std::string s = strip(s0);
  if (s == "1" || s.empty()) return Element::monword({});
  Element::MonWord w;
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] != '[') throw Error("ParseError", "expected '[' in monomial word '" + s + "'");
    auto close = s.find(']', i);
    if (close == std::string::npos)
      throw Error("ParseError", "unclosed '[' in monomial word '" + s + "'");
    Multiindex m = parse_multiindex(s.substr(i + 1, close - i - 1), false);
    if (m.empty())
      throw Error("ParseError", "letters of a monomial word must be nonempty monomials");
    w.push_back(std::move(m));
    i = close + 1;
  }
  return Element::monword(std::move(w));
}

}  // namespace findec
