#include "nh/arthur.hpp"

#include <cctype>
#include <cmath>

namespace nh {

namespace {

std::string canon_sym(const std::string& s) {
  if (s == "D23p") return "D23+";
  if (s == "D23m") return "D23-";
  return s;
}

std::string print_sym(const std::string& s) {
  if (s == "D23+") return "D23p";
  if (s == "D23-") return "D23m";
  return s;
}

}  // namespace

ArthurParam parse_param(const std::string& s) {
  ArthurParam p;
  size_t i = 0;
  while (i < s.size()) {
    size_t j = s.find('+', i);
    if (j == std::string::npos) j = s.size();
    std::string part = s.substr(i, j - i);
    size_t lb = part.find('[');
    require(lb != std::string::npos && part.back() == ']', "bad parameter component: " + part);
    std::string sym = lb == 0 ? "Triv" : canon_sym(part.substr(0, lb));
    int d = std::stoi(part.substr(lb + 1, part.size() - lb - 2));
    require(d >= 1, "bad SL2 size in component: " + part);
    p.comps.push_back({sym, d});
    i = j + 1;
  }
  require(!p.comps.empty(), "empty parameter");
  return p;
}

std::string print_param(const ArthurParam& p) {
  std::string out;
  for (size_t i = 0; i < p.comps.size(); ++i) {
    if (i) out += "+";
    if (p.comps[i].sym != "Triv") out += print_sym(p.comps[i].sym);
    out += "[" + std::to_string(p.comps[i].d) + "]";
  }
  return out;
}

int symbol_w1(const std::string& sym) {
  if (sym == "Triv") return 0;
  if (sym == "Sym2D11") return 22;
  require(sym.size() >= 2 && sym[0] == 'D', "unknown symbol: " + sym);
  size_t i = 1;
  int w = 0;
  while (i < sym.size() && isdigit(sym[i])) w = w * 10 + (sym[i++] - '0');
  require(w > 0, "unknown symbol: " + sym);
  return w;
}

namespace {

int symbol_genus(const std::string& sym) {
  int u = 0;
  for (char c : sym)
    if (c == '_') ++u;
  return 1 + u;
}

}  // namespace

int component_dim(const ArthurComponent& c) {
  if (c.sym == "Triv") return c.d;
  if (c.sym == "Sym2D11") return 3 * c.d;
  return 2 * symbol_genus(c.sym) * c.d;
}

int param_dim(const ArthurParam& p) {
  int t = 0;
  for (const auto& c : p.comps) t += component_dim(c);
  return t;
}

double ramanujan_bound(const std::string& sym, long p) {
  if (sym == "Sym2D11") return 5.0 * std::pow(double(p), 11.0);
  int g = symbol_genus(sym);
  double binom = g == 1 ? 2 : g == 2 ? 6 : 20;
  return binom * std::pow(double(p), symbol_w1(sym) / 2.0);
}

const std::vector<std::string>& dtable_symbols() {
  static const std::vector<std::string> syms = {
      "D11",     "D15",      "D17",      "D19",      "D21",      "D23+",
      "D23-",    "Sym2D11",  "D19_7",    "D21_5",    "D21_9",    "D21_13",
      "D23_7",   "D23_9",    "D23_13",   "D23_13_5", "D23_15_3", "D23_15_7",
      "D23_17_5", "D23_17_9", "D23_19_3", "D23_19_11"};
  return syms;
}

Quad DTable::get(long p, const std::string& sym) const {
  auto it = val.find({p, sym});
  if (it == val.end())
    throw MissingDataError("no value for " + sym + " at p=" + std::to_string(p));
  return it->second;
}

void DTable::set(long p, const std::string& sym, const Quad& v, Provenance pr) {
  val[{p, sym}] = v;
  prov[{p, sym}] = pr;
}

Int sigma_d(int d, long p) {
  Int s(0), pw(1);
  for (int i = 0; i < d; ++i) {
    s += pw;
    pw *= p;
  }
  return s;
}

namespace {

int half_exponent(int n, const ArthurComponent& c) {
  int two_k = (n - 2) - symbol_w1(c.sym) - c.d + 1;
  require(two_k >= 0 && two_k % 2 == 0, "invalid exponent for " + c.sym + "[" +
                                            std::to_string(c.d) + "] in dimension " +
                                            std::to_string(n));
  return two_k / 2;
}

}  // namespace

Quad evaluate_param(const ArthurParam& psi, int n, long p, const DTable& dt) {
  Quad sum;
  for (const auto& c : psi.comps) {
    int k = half_exponent(n, c);
    Quad coeff = c.sym == "Triv" ? Quad(1) : dt.get(p, c.sym);
    Quad term = coeff * Quad(Rat(pow_int(Int(p), k) * sigma_d(c.d, p)));
    sum += term;
  }
  return sum;
}

Symbolic evaluate_param_symbolic(const ArthurParam& psi, int n) {
  Symbolic s;
  for (const auto& c : psi.comps) {
    int k = half_exponent(n, c);
    std::vector<Rat> coeffs(k + c.d, Rat(0));
    for (int i = 0; i < c.d; ++i) coeffs[k + i] = 1;  // p^k * sigma_d(p)
    Poly t(std::move(coeffs));
    if (c.sym == "Triv")
      s.c0 = s.c0 + t;
    else
      s.terms[c.sym] = s.terms[c.sym] + t;
  }
  return s;
}

Symbolic operator-(const Symbolic& x, const Symbolic& y) {
  Symbolic r = x;
  r.c0 = r.c0 - y.c0;
  for (const auto& [sym, poly] : y.terms) r.terms[sym] = r.terms[sym] - poly;
  for (auto it = r.terms.begin(); it != r.terms.end();)
    it = it->second.is_zero() ? r.terms.erase(it) : std::next(it);
  return r;
}

Symbolic operator+(const Symbolic& x, const Symbolic& y) {
  Symbolic r = x;
  r.c0 = r.c0 + y.c0;
  for (const auto& [sym, poly] : y.terms) r.terms[sym] = r.terms[sym] + poly;
  for (auto it = r.terms.begin(); it != r.terms.end();)
    it = it->second.is_zero() ? r.terms.erase(it) : std::next(it);
  return r;
}

bool Symbolic::is_zero() const {
  if (!c0.is_zero()) return false;
  for (const auto& [sym, poly] : terms)
    if (!poly.is_zero()) return false;
  return true;
}

std::string Symbolic::str() const {
  std::string out;
  for (const auto& [sym, poly] : terms) {
    if (poly.is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + poly.str() + ")*" + sym;
  }
  if (!c0.is_zero() || out.empty()) {
    if (!out.empty()) out += " + ";
    out += c0.str();
  }
  return out;
}

Quad evaluate_symbolic(const Symbolic& s, long p, const DTable& dt) {
  Quad sum(s.c0.eval(Rat(p)));
  for (const auto& [sym, poly] : s.terms) sum += dt.get(p, sym) * Quad(poly.eval(Rat(p)));
  return sum;
}

}  // namespace nh
