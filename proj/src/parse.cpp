#include "starsep/parse.hpp"

#include <cctype>

namespace starsep {

namespace {

struct Parser {
  const std::string& text;
  Space space;
  size_t pos = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw error("parse error at position " + std::to_string(pos) + ": " + what);
  }

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  bool eat_word(const std::string& w) {
    skip_ws();
    if (text.compare(pos, w.size(), w) != 0) return false;
    size_t end = pos + w.size();
    if (end < text.size() &&
        (std::isalnum(static_cast<unsigned char>(text[end])) || text[end] == '_'))
      return false;
    pos = end;
    return true;
  }

  long long integer() {
    skip_ws();
    bool neg = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
      neg = text[pos] == '-';
      ++pos;
    }
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      fail("expected integer");
    long long v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos] - '0');
      if (v > (1LL << 40)) fail("integer literal too large");
      ++pos;
    }
    return neg ? -v : v;
  }

  int index_arg() {
    if (!eat('[')) fail("expected '['");
    skip_ws();
    size_t at = pos;
    long long k = integer();
    if (!eat(']')) fail("expected ']'");
    if (k < 1 || k > space.dim) {
      pos = at;
      fail("coordinate index " + std::to_string(k) + " out of range 1.." +
           std::to_string(space.dim));
    }
    return static_cast<int>(k);
  }

  RingElem atom() {
    skip_ws();
    if (pos >= text.size()) fail("unexpected end of input");
    char c = text[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long long v = integer();
      return RingElem::scalar(space, RationalH(Rat(static_cast<long>(v))));
    }
    if (eat('(')) {
      RingElem e = expr();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (eat_word("zb")) return RingElem::zbar(space, index_arg());
    if (eat_word("z")) return RingElem::z(space, index_arg());
    if (eat_word("dPhi")) return dphi(space, index_arg());
    if (eat_word("dbPhi")) return dbarphi(space, index_arg());
    if (eat_word("vac")) return vacuum(space);
    if (eat_word("lnB")) return RingElem::lnb(space);
    if (eat_word("h")) return RingElem::scalar(space, RationalH::h());
    if (eat_word("B")) {
      if (!eat('(')) fail("expected '(' after B");
      long long p = integer();
      if (!eat(',')) fail("expected ',' in B(p,q)");
      long long q = integer();
      if (!eat(')')) fail("expected ')' in B(p,q)");
      if (p > 4096 || p < -4096 || q > 4096 || q < -4096)
        fail("B exponent out of the supported range");
      return RingElem::bpow(space, p, q);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  static bool is_scalar(const RingElem& e) {
    if (e.is_zero()) return true;
    if (e.terms().size() != 1) return false;
    const auto& key = e.terms().begin()->first;
    if (key.p != 0 || key.q != 0 || key.r != 0) return false;
    for (int d : key.za)
      if (d) return false;
    for (int d : key.zb)
      if (d) return false;
    return true;
  }

  static RationalH scalar_value(const RingElem& e) {
    if (e.is_zero()) return RationalH();
    return e.terms().begin()->second;
  }

  RingElem power() {
    RingElem base = atom();
    if (eat('^')) {
      long long e = integer();
      if (e > 64 || e < -64) fail("exponent out of the supported range [-64, 64]");
      if (e >= 0) return base.pow(static_cast<unsigned>(e));
      if (!is_scalar(base)) fail("negative exponent on a ring element (use B(p,q))");
      return RingElem::scalar(space, scalar_value(base).pow(static_cast<int>(e)));
    }
    return base;
  }

  RingElem factor() {
    if (eat('-')) return -factor();
    if (eat('+')) return factor();
    return power();
  }

  RingElem term() {
    RingElem acc = factor();
    while (true) {
      if (eat('*')) {
        acc = acc * factor();
      } else if (eat('/')) {
        size_t at = pos;
        RingElem d = factor();
        if (!is_scalar(d)) {
          pos = at;
          fail("division is defined only by scalar expressions");
        }
        RationalH dv = scalar_value(d);
        if (dv.is_zero()) {
          pos = at;
          fail("division by zero");
        }
        acc = acc.scaled(RationalH(Rat(1)) / dv);
      } else {
        break;
      }
    }
    return acc;
  }

  RingElem expr() {
    RingElem acc = term();
    while (true) {
      if (eat('+')) {
        acc = acc + term();
      } else if (eat('-')) {
        acc = acc - term();
      } else {
        break;
      }
    }
    return acc;
  }
};

}  // namespace

RingElem parse_expr(const std::string& text, Space space) {
  Parser p{text, space};
  RingElem e = p.expr();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return e;
}

}  // namespace starsep
