#include "rns/text.hpp"

#include <cctype>
#include <limits>

namespace rns {

ParseError::ParseError(const std::string& what, std::size_t line, std::size_t column)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      detail_(what),
      line_(line),
      column_(column) {}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const ParseContext& ctx) : text_(text), ctx_(ctx) {}

  Polynomial run() {
    Polynomial result(ctx_.domain);
    skip_ws();
    if (at_end()) fail("empty input");
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = get() == '-';
      skip_ws();
    }
    result += parse_term(negate);
    for (;;) {
      skip_ws();
      if (at_end()) break;
      const char op = peek();
      if (op != '+' && op != '-') fail(std::string("expected '+' or '-', found '") + op + "'");
      get();
      skip_ws();
      negate = op == '-';
      while (!at_end() && (peek() == '+' || peek() == '-')) {
        if (get() == '-') negate = !negate;
        skip_ws();
      }
      result += parse_term(negate);
    }
    return result;
  }

 private:
  Polynomial parse_term(bool negate) {
    mpq_class coeff = negate ? -1 : 1;
    std::vector<Monomial::Factor> factors;
    for (;;) {
      skip_ws();
      if (at_end()) fail("expected a coefficient or variable");
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        coeff *= parse_coefficient();
      } else {
        factors.push_back(parse_power());
      }
      skip_ws();
      if (at_end() || peek() != '*') break;
      get();
    }
    const std::size_t where = pos_;
    try {
      return Polynomial::term(coeff, Monomial(std::move(factors)), ctx_.domain);
    } catch (const DomainError& e) {
      fail(e.what(), where);
    }
  }

  mpq_class parse_coefficient() {
    mpq_class value{mpz_class(digits())};
    skip_ws();
    if (!at_end() && peek() == '/') {
      get();
      skip_ws();
      const std::size_t where = pos_;
      mpz_class den{digits()};
      if (den == 0) fail("zero denominator", where);
      value /= mpq_class(den);
    }
    return value;
  }

  Monomial::Factor parse_power() {
    const VarId v = parse_variable();
    std::uint32_t exp = 1;
    skip_ws();
    if (!at_end() && peek() == '^') {
      get();
      skip_ws();
      const std::size_t where = pos_;
      const std::string e = digits();
      std::uint64_t value = 0;
      for (char ch : e) {
        value = value * 10 + static_cast<unsigned>(ch - '0');
        if (value > ctx_.max_exponent) fail("exponent overflow (limit " + std::to_string(ctx_.max_exponent) + ")", where);
      }
      exp = static_cast<std::uint32_t>(value);
    }
    return {v, exp};
  }

  VarId parse_variable() {
    const std::size_t start = pos_;
    if (!std::isalpha(static_cast<unsigned char>(peek()))) fail(std::string("unexpected character '") + peek() + "'");
    std::string name;
    while (!at_end() && std::isalnum(static_cast<unsigned char>(peek()))) name += get();
    if (name == "x") {
      const unsigned block = bracket_index();
      const unsigned slot = bracket_index();
      if (block == 0) fail("block index must be at least 1", start);
      if (ctx_.block_sizes) {
        const auto& sizes = *ctx_.block_sizes;
        if (block > sizes.size() || slot > sizes[block - 1]) fail("unknown variable " + std::string(text_.substr(start, pos_ - start)), start);
      }
      return make_var([&] { return VarId::scroll(block, slot); }, start);
    }
    static constexpr std::pair<const char*, AuxName> aux_names[] = {
        {"s", AuxName::s}, {"t", AuxName::t}, {"u", AuxName::u}, {"v", AuxName::v}, {"z", AuxName::z}, {"w", AuxName::w}};
    for (const auto& [spelling, aux] : aux_names) {
      if (name != spelling) continue;
      if (!ctx_.allow_aux) fail("auxiliary variable " + name + " not allowed here", start);
      unsigned index = 0;
      skip_ws();
      if (!at_end() && peek() == '[') {
        index = bracket_index();
        if (index == 0) fail("auxiliary index must be at least 1", start);
      }
      const AuxName n = aux;
      return make_var([&] { return VarId::aux(n, index); }, start);
    }
    fail("unknown variable name '" + name + "'", start);
  }

  template <typename F>
  VarId make_var(F&& f, std::size_t where) {
    try {
      return f();
    } catch (const DomainError& e) {
      fail(e.what(), where);
    }
  }

  unsigned bracket_index() {
    skip_ws();
    if (at_end() || peek() != '[') fail("expected '['");
    get();
    skip_ws();
    const std::size_t where = pos_;
    const std::string d = digits();
    if (d.size() > 6) fail("index too large", where);
    skip_ws();
    if (at_end() || peek() != ']') fail("expected ']'");
    get();
    return static_cast<unsigned>(std::stoul(d));
  }

  std::string digits() {
    std::string out;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) out += get();
    if (out.empty()) fail("expected a number");
    return out;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char get() { return text_[pos_++]; }

  [[noreturn]] void fail(const std::string& msg) { fail(msg, pos_); }
  [[noreturn]] void fail(const std::string& msg, std::size_t offset) {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < offset && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(msg, line, column);
  }

  std::string_view text_;
  const ParseContext& ctx_;
  std::size_t pos_ = 0;
};

std::string format_monomial(const Monomial& m, const VariableNamer& namer) {
  std::string out;
  for (const auto& [v, e] : m.factors()) {
    if (!out.empty()) out += '*';
    out += namer(v);
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, const ParseContext& ctx) { return Parser(text, ctx).run(); }

std::string format_polynomial(const Polynomial& p, const VariableNamer& namer) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool negative = sgn(c) < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const mpq_class magnitude = abs(c);
    if (m.is_one()) {
      out += magnitude.get_str();
    } else {
      if (magnitude != 1) out += magnitude.get_str() + "*";
      out += format_monomial(m, namer);
    }
  }
  return out;
}

std::string to_string(const Polynomial& p) {
  return format_polynomial(p, [](VarId v) { return to_string(v); });
}

}  // namespace rns
