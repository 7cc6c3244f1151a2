#include "cohomog/specfile.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace cohomog {

namespace {

struct Token {
  enum class Kind { Word, Number, Punct, End };
  Kind kind = Kind::End;
  std::string text;
  int line = 0, col = 0;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) {
    int line = 1, col = 1;
    size_t i = 0;
    auto advance = [&](size_t n) {
      for (size_t j = 0; j < n; ++j, ++i) {
        if (text[i] == '\n') {
          ++line;
          col = 1;
        } else {
          ++col;
        }
      }
    };
    while (i < text.size()) {
      char c = text[i];
      if (c == '#') {
        while (i < text.size() && text[i] != '\n') advance(1);
        continue;
      }
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance(1);
        continue;
      }
      Token tok;
      tok.line = line;
      tok.col = col;
      if (std::string("{}[];").find(c) != std::string::npos) {
        tok.kind = Token::Kind::Punct;
        tok.text = c;
        advance(1);
      } else if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
        tok.kind = Token::Kind::Number;
        size_t start = i;
        advance(1);
        while (i < text.size() &&
               (std::isdigit(static_cast<unsigned char>(text[i])) ||
                text[i] == '/'))
          advance(1);
        tok.text = text.substr(start, i - start);
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        tok.kind = Token::Kind::Word;
        size_t start = i;
        while (i < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[i])) ||
                text[i] == '_' || text[i] == '-' || text[i] == '+'))
          advance(1);
        tok.text = text.substr(start, i - start);
      } else {
        throw ParseError(std::string("unexpected character '") + c + "'",
                         line, col);
      }
      tokens_.push_back(std::move(tok));
    }
    Token end;
    end.line = line;
    end.col = col;
    tokens_.push_back(end);
  }

  const Token& peek() const { return tokens_[pos_]; }
  Token next() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }

 private:
  std::vector<Token> tokens_;
  size_t pos_ = 0;
};

[[noreturn]] void fail(const Token& tok, const std::string& msg) {
  throw ParseError(msg, tok.line, tok.col);
}

Token expect_word(Lexer& lex, const std::string& context) {
  Token tok = lex.next();
  if (tok.kind != Token::Kind::Word)
    fail(tok, "expected " + context + ", got '" + tok.text + "'");
  return tok;
}

void expect_punct(Lexer& lex, char c) {
  Token tok = lex.next();
  if (tok.kind != Token::Kind::Punct || tok.text[0] != c)
    fail(tok, std::string("expected '") + c + "'");
}

int expect_int(Lexer& lex, const std::string& context) {
  Token tok = lex.next();
  if (tok.kind != Token::Kind::Number ||
      tok.text.find('/') != std::string::npos)
    fail(tok, "expected integer " + context);
  try {
    return std::stoi(tok.text);
  } catch (const std::exception&) {
    fail(tok, "integer out of range");
  }
}

bool expect_bool(Lexer& lex, const std::string& context) {
  Token tok = expect_word(lex, context);
  if (tok.text == "true") return true;
  if (tok.text == "false") return false;
  fail(tok, "expected true or false for " + context);
}

Rational expect_rational(Lexer& lex) {
  Token tok = lex.next();
  if (tok.kind != Token::Kind::Number) fail(tok, "expected a rational number");
  auto r = parse_rational(tok.text);
  if (!r) fail(tok, "malformed rational '" + tok.text + "'");
  return *r;
}

// [a b; c d] with rational entries; [] is the empty 0x0 matrix.
QMatrix parse_matrix(Lexer& lex) {
  Token open = lex.next();
  if (open.kind != Token::Kind::Punct || open.text != "[")
    fail(open, "expected a matrix literal");
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> row;
  for (;;) {
    const Token& tok = lex.peek();
    if (tok.kind == Token::Kind::Punct && tok.text == "]") {
      lex.next();
      break;
    }
    if (tok.kind == Token::Kind::Punct && tok.text == ";") {
      lex.next();
      if (row.empty()) fail(tok, "empty matrix row");
      rows.push_back(std::move(row));
      row.clear();
      continue;
    }
    row.push_back(expect_rational(lex));
  }
  if (!row.empty()) rows.push_back(std::move(row));
  if (rows.empty()) return QMatrix(0, 0);
  size_t cols = rows[0].size();
  for (const auto& r : rows)
    if (r.size() != cols) fail(open, "ragged matrix literal");
  return QMatrix(rows);
}

WeylType weyl_type_from(const Token& tok) {
  if (tok.text == "A") return WeylType::A;
  if (tok.text == "B") return WeylType::B;
  if (tok.text == "C") return WeylType::C;
  if (tok.text == "D") return WeylType::D;
  if (tok.text == "T") return WeylType::Torus;
  fail(tok, "unknown Weyl family '" + tok.text + "' (expected A, B, C, D, T)");
}

SubgroupDatum parse_subgroup(Lexer& lex, const std::string& name) {
  SubgroupDatum datum;
  datum.name = name;
  expect_punct(lex, '{');
  bool have_rank = false, have_weyl = false;
  for (;;) {
    Token key = lex.next();
    if (key.kind == Token::Kind::Punct && key.text == "}") break;
    if (key.kind != Token::Kind::Word) fail(key, "expected a subgroup key");
    if (key.text == "rank") {
      datum.rank = expect_int(lex, "for rank");
      if (datum.rank < 0) fail(key, "rank must be nonnegative");
      have_rank = true;
    } else if (key.text == "weyl") {
      if (!have_rank) fail(key, "rank must precede weyl");
      Token kind = expect_word(lex, "a weyl kind");
      if (kind.text == "trivial") {
        datum.weyl = MatrixGroup::trivial(datum.rank);
      } else if (kind.text == "standard") {
        Token family = expect_word(lex, "a Weyl family");
        int n = expect_int(lex, "for the Weyl family parameter");
        datum.weyl = weyl_standard(weyl_type_from(family), n);
        if (datum.weyl.rank() != datum.rank)
          fail(family, "standard Weyl group has rank " +
                           std::to_string(datum.weyl.rank()) +
                           ", subgroup declares " +
                           std::to_string(datum.rank));
      } else if (kind.text == "generators") {
        expect_punct(lex, '{');
        std::vector<QMatrix> gens;
        while (!(lex.peek().kind == Token::Kind::Punct &&
                 lex.peek().text == "}")) {
          Token at = lex.peek();
          QMatrix g = parse_matrix(lex);
          if (g.rows() != datum.rank || g.cols() != datum.rank)
            fail(at, "Weyl generator must be " + std::to_string(datum.rank) +
                         "x" + std::to_string(datum.rank));
          if (!g.is_invertible()) fail(at, "singular Weyl generator");
          gens.push_back(std::move(g));
        }
        lex.next();
        datum.weyl = gens.empty() ? MatrixGroup::trivial(datum.rank)
                                  : close_group(gens);
      } else {
        fail(kind, "expected trivial, standard, or generators");
      }
      have_weyl = true;
    } else {
      fail(key, "unknown subgroup key '" + key.text + "'");
    }
  }
  if (!have_rank) fail(lex.peek(), "subgroup " + name + " is missing rank");
  if (!have_weyl) fail(lex.peek(), "subgroup " + name + " is missing weyl");
  return datum;
}

}  // namespace

ActionSpec parse_spec(const std::string& text) {
  Lexer lex(text);
  ActionSpec spec;
  std::set<std::string> seen;
  bool have_orbit = false;

  auto once = [&](const Token& key) {
    if (!seen.insert(key.text).second)
      fail(key, "duplicate key '" + key.text + "'");
  };

  for (;;) {
    Token key = lex.next();
    if (key.kind == Token::Kind::End) break;
    if (key.kind != Token::Kind::Word) fail(key, "expected a top-level key");
    once(key);
    if (key.text == "orbit_type") {
      Token val = expect_word(lex, "interval or circle");
      if (val.text == "interval")
        spec.orbit_type = ActionSpec::OrbitType::Interval;
      else if (val.text == "circle")
        spec.orbit_type = ActionSpec::OrbitType::Circle;
      else
        fail(val, "orbit_type must be interval or circle");
      have_orbit = true;
    } else if (key.text == "name") {
      spec.name = expect_word(lex, "a name").text;
    } else if (key.text == "subgroup") {
      Token name = expect_word(lex, "a subgroup name");
      seen.erase(key.text);
      once(name);
      if (name.text == "H")
        spec.H = parse_subgroup(lex, name.text);
      else if (name.text == "K-")
        spec.Kminus = parse_subgroup(lex, name.text);
      else if (name.text == "K+")
        spec.Kplus = parse_subgroup(lex, name.text);
      else if (name.text == "K")
        spec.K = parse_subgroup(lex, name.text);
      else if (name.text == "G")
        spec.G = parse_subgroup(lex, name.text);
      else
        fail(name, "unknown subgroup '" + name.text +
                       "' (expected H, K-, K+, K, or G)");
    } else if (key.text == "embedding_minus") {
      spec.iota_minus = parse_matrix(lex);
    } else if (key.text == "embedding_plus") {
      spec.iota_plus = parse_matrix(lex);
    } else if (key.text == "embedding_G") {
      spec.iota_G = parse_matrix(lex);
    } else if (key.text == "n_minus") {
      spec.n_minus = expect_int(lex, "for n_minus");
    } else if (key.text == "n_plus") {
      spec.n_plus = expect_int(lex, "for n_plus");
    } else if (key.text == "orientable_minus") {
      spec.orientable_minus = expect_bool(lex, "orientable_minus");
    } else if (key.text == "orientable_plus") {
      spec.orientable_plus = expect_bool(lex, "orientable_plus");
    } else if (key.text == "translation_aut") {
      spec.translation_aut = parse_matrix(lex);
    } else {
      fail(key, "unknown key '" + key.text + "'");
    }
  }

  const Token& end = lex.peek();
  auto require = [&](const char* what, bool ok) {
    if (!ok) fail(end, std::string("missing ") + what);
  };
  require("orbit_type", have_orbit);
  require("name", !spec.name.empty());
  if (spec.orbit_type == ActionSpec::OrbitType::Interval) {
    require("subgroup H", seen.count("H") > 0);
    require("subgroup K-", seen.count("K-") > 0);
    require("subgroup K+", seen.count("K+") > 0);
    require("embedding_minus", seen.count("embedding_minus") > 0);
    require("embedding_plus", seen.count("embedding_plus") > 0);
    require("n_minus", seen.count("n_minus") > 0);
    require("n_plus", seen.count("n_plus") > 0);
    require("orientable_minus", seen.count("orientable_minus") > 0);
    require("orientable_plus", seen.count("orientable_plus") > 0);
    if (seen.count("G") != seen.count("embedding_G"))
      fail(end, "subgroup G and embedding_G must appear together");
    // "[]" parses as 0x0; a rank-0 H really means a 0 x rank(K) map.
    if (spec.H.rank == 0) {
      if (spec.iota_minus.rows() == 0)
        spec.iota_minus = QMatrix(0, spec.Kminus.rank);
      if (spec.iota_plus.rows() == 0)
        spec.iota_plus = QMatrix(0, spec.Kplus.rank);
    }
  } else {
    require("subgroup K", seen.count("K") > 0);
    require("translation_aut", seen.count("translation_aut") > 0);
  }
  return spec;
}

ActionSpec parse_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'", 0, 0);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_spec(ss.str());
}

}  // namespace cohomog
