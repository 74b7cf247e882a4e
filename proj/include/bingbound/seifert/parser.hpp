#pragma once

#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "bingbound/seifert/expression.hpp"

namespace bingbound {

/// One row per line, whitespace-separated integers; blank lines and '#'
/// comments are skipped.
inline SeifertMatrix read_matrix(std::istream& in, const std::string& origin) {
  std::vector<std::vector<Integer>> rows;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<Integer> row;
    std::string tok;
    while (ls >> tok) {
      Integer v;
      if (v.set_str(tok, 10) != 0)
        throw Error(ErrorKind::Parse, origin + " line " + std::to_string(lineno) + ": bad integer '" + tok + "'");
      row.push_back(v);
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  return SeifertMatrix::validate(IntMatrix::from_rows(rows));
}

inline SeifertMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open matrix file '" + path + "'");
  return read_matrix(in, path);
}

namespace detail {

/// Recursive-descent parser for the knot-expression grammar:
///   expr    := term ('#' term)*
///   term    := INT '*' term | primary
///   primary := rev(expr) | mirror(expr) | (expr) | <file:PATH> | [[..],..]
///            | unknot | T(p,q) | twist(k) | D(atom) | IDENT
class ExpressionParser {
 public:
  explicit ExpressionParser(std::string_view text) : s_(text) {}

  KnotExpression parse() {
    KnotExpression e = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_, msg); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  KnotExpression expr() {
    KnotExpression left = term();
    while (peek('#')) {
      ++pos_;
      left = KnotExpression::sum(left, term());
    }
    return left;
  }

  KnotExpression term() {
    skip_ws();
    std::size_t save = pos_;
    std::size_t end = pos_;
    while (end < s_.size() && std::isdigit(static_cast<unsigned char>(s_[end]))) ++end;
    if (end > pos_) {
      pos_ = end;
      if (peek('*')) {
        const std::string digits(s_.substr(save, end - save));
        Integer n;
        n.set_str(digits, 10);
        if (n == 0 || !n.fits_ulong_p()) {
          pos_ = save;
          fail("multiple count must be a positive integer");
        }
        ++pos_;
        return KnotExpression::multiple(n.get_ui(), term());
      }
      pos_ = save;
    }
    return primary();
  }

  long integer() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    std::size_t digits = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == digits) {
      pos_ = start;
      fail("expected an integer");
    }
    Integer v;
    v.set_str(std::string(s_.substr(start, pos_ - start)), 10);
    if (!v.fits_slong_p()) fail("integer out of range");
    return v.get_si();
  }

  std::string identifier() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    if (pos_ == start) fail("expected a knot expression");
    return std::string(s_.substr(start, pos_ - start));
  }

  KnotExpression primary() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of expression");
    if (s_[pos_] == '(') {
      ++pos_;
      KnotExpression e = expr();
      expect(')');
      return e;
    }
    if (s_[pos_] == '<') return file_atom();
    if (s_[pos_] == '[') return matrix_literal();
    const std::size_t start = pos_;
    const std::string id = identifier();
    if (id == "rev" || id == "mirror") {
      expect('(');
      KnotExpression inner = expr();
      expect(')');
      return id == "rev" ? KnotExpression::reverse(inner) : KnotExpression::mirror(inner);
    }
    if (id == "T" && peek('(')) {
      ++pos_;
      long p = integer();
      expect(',');
      long q = integer();
      expect(')');
      return KnotExpression::atom("T(" + std::to_string(p) + "," + std::to_string(q) + ")");
    }
    if (id == "twist" && peek('(')) {
      ++pos_;
      long k = integer();
      expect(')');
      return KnotExpression::atom("twist(" + std::to_string(k) + ")");
    }
    if (id == "D" && peek('(')) {
      ++pos_;
      KnotExpression inner = primary();
      expect(')');
      const auto* a = inner.as<expr::Atom>();
      if (!a) {
        pos_ = start;
        fail("D(...) takes a catalog knot");
      }
      return KnotExpression::atom("D(" + a->name + ")");
    }
    return KnotExpression::atom(id);
  }

  KnotExpression file_atom() {
    constexpr std::string_view prefix = "<file:";
    if (s_.substr(pos_, prefix.size()) != prefix) fail("expected '<file:PATH>'");
    const std::size_t close = s_.find('>', pos_);
    if (close == std::string_view::npos) fail("unterminated '<file:'");
    const std::string path(s_.substr(pos_ + prefix.size(), close - pos_ - prefix.size()));
    if (path.empty()) fail("empty file path");
    pos_ = close + 1;
    return KnotExpression::raw(read_matrix_file(path), path);
  }

  KnotExpression matrix_literal() {
    expect('[');
    std::vector<std::vector<Integer>> rows;
    if (!peek(']')) {
      do {
        expect('[');
        std::vector<Integer> row;
        if (!peek(']')) {
          do row.emplace_back(integer());
          while (peek(',') && (++pos_, true));
        }
        expect(']');
        rows.push_back(std::move(row));
      } while (peek(',') && (++pos_, true));
    }
    expect(']');
    return KnotExpression::raw(SeifertMatrix::validate(IntMatrix::from_rows(rows)));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Throws ParseError (with position) on malformed input, Io for unreadable
/// `<file:...>` atoms, and validation errors for bad raw matrices.
inline KnotExpression parse_expression(std::string_view text) { return detail::ExpressionParser(text).parse(); }

}  // namespace bingbound
