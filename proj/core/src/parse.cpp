#include "tmrat/parse.hpp"

#include <cctype>
#include <optional>

#include "tmrat/error.hpp"

namespace tmrat {

namespace {

using Poly = std::vector<Element>;

constexpr unsigned kMaxExponent = 64;

void normalize(Poly& f) {
  while (!f.empty() && f.back().is_zero()) f.pop_back();
}

Poly add(const Poly& a, const Poly& b, const Field& field, bool subtract) {
  Poly r(std::max(a.size(), b.size()), field.zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = subtract ? r[i] - b[i] : r[i] + b[i];
  normalize(r);
  return r;
}

Poly mul(const Poly& a, const Poly& b, const Field& field) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, field.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  normalize(r);
  return r;
}

class ExpressionParser {
 public:
  ExpressionParser(std::string_view text, const Field& field, char variable)
      : text_(text), field_(field), variable_(variable) {}

  Poly run() {
    Poly result = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return result;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError(why + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::optional<char> peek() {
    skip_space();
    if (pos_ >= text_.size()) return std::nullopt;
    return text_[pos_];
  }

  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly expr() {
    Poly acc;
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    acc = term();
    if (negate) acc = add({}, acc, field_, true);
    while (true) {
      if (accept('+')) {
        acc = add(acc, term(), field_, false);
      } else if (accept('-')) {
        acc = add(acc, term(), field_, true);
      } else {
        return acc;
      }
    }
  }

  bool starts_atom() {
    auto c = peek();
    return c && (std::isalpha(static_cast<unsigned char>(*c)) || *c == '(');
  }

  Poly term() {
    Poly acc = unary();
    while (true) {
      if (accept('*')) {
        acc = mul(acc, unary(), field_);
      } else if (accept('/')) {
        Poly d = unary();
        if (d.size() > 1) fail("division by a non-constant");
        if (d.empty()) throw DivisionByZero();
        Element inv = d[0].inv();
        for (auto& c : acc) c *= inv;
      } else if (starts_atom()) {
        acc = mul(acc, power(), field_);
      } else {
        return acc;
      }
    }
  }

  Poly unary() {
    if (accept('-')) return add({}, unary(), field_, true);
    if (accept('+')) return unary();
    return power();
  }

  Poly power() {
    Poly base = atom();
    if (!accept('^')) return base;
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an exponent");
    auto exponent = std::stoul(std::string(text_.substr(start, pos_ - start)));
    if (exponent > kMaxExponent) fail("exponent too large");
    Poly result{field_.one()};
    for (unsigned long i = 0; i < exponent; ++i) result = mul(result, base, field_);
    return result;
  }

  Poly atom() {
    auto c = peek();
    if (!c) fail("unexpected end of input");
    if (*c == '(') {
      ++pos_;
      Poly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(*c)) || *c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(*c))) return identifier();
    fail("unexpected '" + std::string(1, *c) + "'");
  }

  Poly identifier() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::string_view name = text_.substr(start, pos_ - start);
    if (name.size() == 1 && variable_ != '\0' && name[0] == variable_) return {field_.zero(), field_.one()};
    if (name == "t" && field_.kind() == FieldKind::ExtensionField) return constant(field_.generator());
    if (name == "i" && field_.kind() == FieldKind::BigComplex) return constant(field_.imaginary_unit());
    pos_ = start;
    fail("unknown identifier '" + std::string(name) + "'");
  }

  Poly constant(Element e) {
    Poly r{std::move(e)};
    normalize(r);
    return r;
  }

  Poly number() {
    std::size_t start = pos_;
    auto digits = [&] {
      std::size_t s = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return pos_ - s;
    };
    std::size_t int_digits = digits();
    bool decimal = false;
    std::size_t frac_digits = 0;
    if (pos_ < text_.size() && text_[pos_] == '.') {
      decimal = true;
      ++pos_;
      frac_digits = digits();
    }
    if (int_digits + frac_digits == 0) fail("malformed number");
    long exp10 = 0;
    if (pos_ + 1 < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      std::size_t save = pos_;
      ++pos_;
      bool neg = false;
      if (text_[pos_] == '+' || text_[pos_] == '-') {
        neg = text_[pos_] == '-';
        ++pos_;
      }
      std::size_t exp_start = pos_;
      if (digits() == 0) {
        pos_ = save;  // not an exponent after all
      } else {
        decimal = true;
        exp10 = std::stol(std::string(text_.substr(exp_start, pos_ - exp_start)));
        if (neg) exp10 = -exp10;
      }
    }
    std::string_view literal = text_.substr(start, pos_ - start);
    if (!decimal) return constant(field_.from_integer(mpz_class(std::string(literal))));
    switch (field_.kind()) {
      case FieldKind::BigComplex:
        return constant(Element(field_, BigComplex(BigFloat(field_.precision_bits(), literal),
                                                   BigFloat(field_.precision_bits()))));
      case FieldKind::Rationals: {
        std::string mantissa;
        long scale = 0;
        bool after_point = false;
        for (char ch : literal) {
          if (ch == 'e' || ch == 'E') break;
          if (ch == '.') {
            after_point = true;
            continue;
          }
          mantissa += ch;
          if (after_point) ++scale;
        }
        long shift = exp10 - scale;
        if (shift > 4096 || shift < -4096) fail("decimal exponent out of range");
        mpz_class ten_pow;
        mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
        mpq_class value{mpz_class(mantissa)};
        if (shift >= 0) {
          value *= ten_pow;
        } else {
          value /= ten_pow;
        }
        return constant(field_.from_rational(value));
      }
      default:
        fail("decimal literal in a finite field");
    }
  }

  std::string_view text_;
  const Field& field_;
  char variable_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<Element> parse_polynomial(std::string_view text, const Field& field, char variable) {
  if (trim(text).empty()) throw ParseError("empty expression");
  auto poly = ExpressionParser(text, field, variable).run();
  if (variable == '\0' && poly.size() > 1) throw ParseError("expected a constant, got '" + std::string(text) + "'");
  return poly;
}

std::string_view trim(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  return text;
}

std::vector<std::string_view> split_top_level(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == sep && depth == 0) {
      out.push_back(trim(text.substr(start, i - start)));
      start = i + 1;
    }
  }
  out.push_back(trim(text.substr(start)));
  return out;
}

}  // namespace tmrat
