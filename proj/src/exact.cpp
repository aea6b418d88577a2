#include "nh/exact.hpp"

namespace nh {

// Grammar: INT | [INT] ('+'|'-') (INT '*')? 'r'  with r = sqrt(QUAD_D).
Quad parse_quad(const std::string& s) {
  require(!s.empty(), "empty number");
  size_t rp = s.find('r');
  if (rp == std::string::npos) return Quad(Rat(s));
  std::string head = s.substr(0, rp);
  require(rp + 1 == s.size(), "trailing characters after r: " + s);
  // Split head into the rational part and the r-coefficient.
  // Find the sign that separates them: last '+' or '-' not at position 0.
  size_t cut = std::string::npos;
  for (size_t i = head.size(); i-- > 1;) {
    if (head[i] == '+' || head[i] == '-') {
      cut = i;
      break;
    }
  }
  Rat a(0), b(1);
  std::string bs;
  if (cut == std::string::npos) {
    bs = head;  // pure multiple of r, possibly "-" or "12*"
  } else {
    a = Rat(head.substr(0, cut));
    bs = head.substr(cut);
  }
  if (!bs.empty() && bs.back() == '*') bs.pop_back();
  if (bs.empty() || bs == "+")
    b = 1;
  else if (bs == "-")
    b = -1;
  else {
    if (bs[0] == '+') bs.erase(0, 1);  // mpq rejects a leading plus sign
    b = Rat(bs);
  }
  return Quad(a, b);
}

}  // namespace nh
