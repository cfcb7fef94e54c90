// Text format for presentations and homomorphisms.
//
//   document := item*
//   item     := group | hom
//   group    := "group" NAME "{" body "}"
//   body     := "gens:" namelist? ";" "rels:" rellist? ";" ("central:" namelist ";")?
//   rellist  := relation ("," relation)*
//   relation := word ("=" word)?              u = v means the relator u v^-1
//   word     := term+
//   term     := NAME | NAME "^" INT | "1" | "(" word ")" ("^" INT)?
//             | "[" word "," word "]" ("^" INT)?
//   hom      := "hom" NAME ":" NAME "->" NAME "{" (NAME "=>" word ("," ...)*)? "}"
//             | "hom" NAME ":" NAME "->" NAME "=" NAME ("*" NAME)* ";"
//
// Negative exponents denote inverses, [u,v] expands to u v u^-1 v^-1 and
// "1" is the empty word. "f * g" is the composite f after g. Whitespace is
// insignificant and '#' starts a comment running to the end of the line.
// A bare body (no "group" wrapper) is accepted by parse_presentation().

#ifndef KAHLEROBS_PARSER_HPP_
#define KAHLEROBS_PARSER_HPP_

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "group_hom.hpp"
#include "presentation.hpp"
#include "word.hpp"

namespace kahlerobs {

  /// A presentation together with its optional "central:" clause.
  struct GroupDecl {
    Presentation             presentation;
    std::vector<std::string> central;
  };

  struct Document {
    std::vector<GroupDecl> groups;
    std::vector<GroupHom>  homs;

    GroupDecl const& group(std::string const& name) const {
      for (auto const& g : groups) {
        if (g.presentation.name() == name) {
          return g;
        }
      }
      throw InputError("no group named '" + name + "'");
    }
    GroupHom const& hom(std::string const& name) const {
      for (auto const& h : homs) {
        if (h.name() == name) {
          return h;
        }
      }
      throw InputError("no homomorphism named '" + name + "'");
    }
  };

  namespace detail {

    enum class TokenKind { name, integer, symbol, end };

    struct Token {
      TokenKind   kind;
      std::string text;
      std::size_t line, column;
    };

    inline std::vector<Token> tokenize(std::string const& text) {
      std::vector<Token> out;
      std::size_t        line = 1, col = 1, i = 0;
      auto               advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k, ++i) {
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
        if (std::isspace(static_cast<unsigned char>(c))) {
          advance(1);
        } else if (c == '#') {
          while (i < text.size() && text[i] != '\n') {
            advance(1);
          }
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
          std::size_t j = i;
          while (j < text.size()
                 && (std::isalnum(static_cast<unsigned char>(text[j]))
                     || text[j] == '_')) {
            ++j;
          }
          out.push_back({TokenKind::name, text.substr(i, j - i), line, col});
          advance(j - i);
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
          std::size_t j = i;
          while (j < text.size()
                 && std::isdigit(static_cast<unsigned char>(text[j]))) {
            ++j;
          }
          out.push_back(
              {TokenKind::integer, text.substr(i, j - i), line, col});
          advance(j - i);
        } else if (text.compare(i, 2, "->") == 0
                   || text.compare(i, 2, "=>") == 0) {
          out.push_back({TokenKind::symbol, text.substr(i, 2), line, col});
          advance(2);
        } else if (std::string("{};:,()[]^=*-").find(c)
                   != std::string::npos) {
          out.push_back({TokenKind::symbol, std::string(1, c), line, col});
          advance(1);
        } else {
          throw ParseError(std::string("unexpected character '") + c + "'",
                           line,
                           col);
        }
      }
      out.push_back({TokenKind::end, "", line, col});
      return out;
    }

    class Parser {
     public:
      explicit Parser(std::string const& text) : tokens_(tokenize(text)) {}

      Document document() {
        Document doc;
        while (!at_end()) {
          Token const& t = peek();
          if (is_name("group")) {
            next();
            std::string name = expect_name();
            for (auto const& g : doc.groups) {
              if (g.presentation.name() == name) {
                fail("duplicate group name '" + name + "'", t);
              }
            }
            expect("{");
            doc.groups.push_back(body(name));
            expect("}");
          } else if (is_name("hom")) {
            doc.homs.push_back(hom(doc));
          } else {
            fail("expected 'group' or 'hom'", t);
          }
        }
        return doc;
      }

      GroupDecl single_group() {
        if (is_name("gens")) {
          GroupDecl g = body("G");
          if (!at_end()) {
            fail("trailing input after presentation", peek());
          }
          return g;
        }
        Document doc = document();
        if (doc.groups.size() != 1) {
          throw ParseError("expected exactly one group, found "
                               + std::to_string(doc.groups.size()),
                           1,
                           1);
        }
        return doc.groups.front();
      }

      Word word_only(std::vector<std::string> const& gens) {
        gens_ = &gens;
        Word w = word();
        if (!at_end()) {
          fail("trailing input after word", peek());
        }
        return w;
      }

     private:
      std::vector<Token>              tokens_;
      std::size_t                     pos_  = 0;
      std::vector<std::string> const* gens_ = nullptr;

      [[noreturn]] void fail(std::string const& msg, Token const& t) const {
        throw ParseError(msg, t.line, t.column);
      }
      Token const& peek() const {
        return tokens_[pos_];
      }
      Token const& next() {
        return tokens_[pos_++];
      }
      bool at_end() const {
        return peek().kind == TokenKind::end;
      }
      bool is_symbol(char const* s) const {
        return peek().kind == TokenKind::symbol && peek().text == s;
      }
      bool is_name(char const* s) const {
        return peek().kind == TokenKind::name && peek().text == s;
      }
      void expect(char const* s) {
        if (!is_symbol(s)) {
          fail(std::string("expected '") + s + "'", peek());
        }
        next();
      }
      void expect_keyword(char const* s) {
        if (!is_name(s)) {
          fail(std::string("expected '") + s + "'", peek());
        }
        next();
      }
      std::string expect_name() {
        if (peek().kind != TokenKind::name) {
          fail("expected a name", peek());
        }
        return next().text;
      }

      std::vector<std::string> namelist() {
        std::vector<std::string> names;
        if (is_symbol(";")) {
          return names;
        }
        names.push_back(expect_name());
        while (is_symbol(",")) {
          next();
          names.push_back(expect_name());
        }
        return names;
      }

      GroupDecl body(std::string const& name) {
        expect_keyword("gens");
        expect(":");
        Token                    gens_tok = peek();
        std::vector<std::string> gens     = namelist();
        expect(";");
        for (std::size_t i = 0; i < gens.size(); ++i) {
          for (std::size_t j = 0; j < i; ++j) {
            if (gens[i] == gens[j]) {
              fail("duplicate generator name '" + gens[i] + "'", gens_tok);
            }
          }
        }
        gens_ = &gens;
        expect_keyword("rels");
        expect(":");
        std::vector<Word> rels;
        if (!is_symbol(";")) {
          rels.push_back(relation());
          while (is_symbol(",")) {
            next();
            rels.push_back(relation());
          }
        }
        expect(";");
        std::vector<std::string> central;
        if (is_name("central")) {
          next();
          expect(":");
          Token ct = peek();
          central  = namelist();
          expect(";");
          for (auto const& c : central) {
            if (std::find(gens.begin(), gens.end(), c) == gens.end()) {
              fail("unknown central generator '" + c + "'", ct);
            }
          }
        }
        gens_ = nullptr;
        return GroupDecl{Presentation(name, gens, std::move(rels)),
                         std::move(central)};
      }

      Word relation() {
        Word lhs = word();
        if (is_symbol("=")) {
          next();
          Word rhs = word();
          return lhs * rhs.inverse();
        }
        return lhs;
      }

      bool term_starts() const {
        return peek().kind == TokenKind::name
               || (peek().kind == TokenKind::integer && peek().text == "1")
               || is_symbol("(") || is_symbol("[");
      }

      Word word() {
        if (!term_starts()) {
          fail("expected a word", peek());
        }
        Word w;
        while (term_starts()) {
          w = w * term();
        }
        return w;
      }

      int exponent() {
        if (!is_symbol("^")) {
          return 1;
        }
        next();
        bool negative = false;
        if (is_symbol("-")) {
          next();
          negative = true;
        }
        if (peek().kind != TokenKind::integer) {
          fail("expected an integer exponent", peek());
        }
        Token const& t = next();
        long         v = 0;
        try {
          v = std::stol(t.text);
        } catch (std::exception const&) {
          fail("exponent out of range", t);
        }
        if (v > 100000) {
          fail("exponent out of range", t);
        }
        return negative ? -static_cast<int>(v) : static_cast<int>(v);
      }

      Word term() {
        Token const& t = peek();
        if (t.kind == TokenKind::integer) {
          next();
          return Word();
        }
        if (t.kind == TokenKind::name) {
          next();
          auto it = std::find(gens_->begin(), gens_->end(), t.text);
          if (it == gens_->end()) {
            fail("unknown generator '" + t.text + "'", t);
          }
          auto idx = static_cast<std::uint32_t>(it - gens_->begin());
          return Word::generator(idx, exponent());
        }
        if (is_symbol("(")) {
          next();
          Word w = word();
          expect(")");
          return w.pow(exponent());
        }
        expect("[");
        Word u = word();
        expect(",");
        Word v = word();
        expect("]");
        return commutator(u, v).pow(exponent());
      }

      GroupHom hom(Document const& doc) {
        expect_keyword("hom");
        Token       name_tok = peek();
        std::string name     = expect_name();
        for (auto const& h : doc.homs) {
          if (h.name() == name) {
            fail("duplicate homomorphism name '" + name + "'", name_tok);
          }
        }
        expect(":");
        Token              src_tok = peek();
        std::string        src     = expect_name();
        expect("->");
        Token              tgt_tok = peek();
        std::string        tgt     = expect_name();
        GroupDecl const*   s       = find_group(doc, src, src_tok);
        GroupDecl const*   g       = find_group(doc, tgt, tgt_tok);
        Presentation const& source = s->presentation;
        Presentation const& target = g->presentation;

        if (is_symbol("=")) {
          next();
          std::vector<std::pair<std::string, Token>> parts;
          Token                                       ft = peek();
          parts.emplace_back(expect_name(), ft);
          while (is_symbol("*")) {
            next();
            Token pt = peek();
            parts.emplace_back(expect_name(), pt);
          }
          expect(";");
          std::optional<GroupHom> acc;
          for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
            GroupHom const* f = nullptr;
            for (auto const& h : doc.homs) {
              if (h.name() == it->first) {
                f = &h;
              }
            }
            if (f == nullptr) {
              fail("unknown homomorphism '" + it->first + "'", it->second);
            }
            try {
              acc = acc ? compose(*f, *acc) : *f;
            } catch (InputError const& e) {
              fail(e.what(), it->second);
            }
          }
          if (!(acc->source() == source) || !(acc->target() == target)) {
            fail("composite does not have the declared source and target",
                 name_tok);
          }
          return GroupHom(name, source, target, acc->images());
        }

        expect("{");
        std::vector<std::optional<Word>> images(source.num_generators());
        if (!is_symbol("}")) {
          while (true) {
            Token       gt = peek();
            std::string gn = expect_name();
            auto        gi = source.generator_index(gn);
            if (!gi) {
              fail("unknown source generator '" + gn + "'", gt);
            }
            if (images[*gi]) {
              fail("generator '" + gn + "' assigned twice", gt);
            }
            expect("=>");
            gens_        = &target.generators();
            images[*gi]  = word();
            gens_        = nullptr;
            if (!is_symbol(",")) {
              break;
            }
            next();
          }
        }
        expect("}");
        std::vector<Word> imgs;
        for (std::size_t i = 0; i < images.size(); ++i) {
          if (!images[i]) {
            fail("no image given for generator '" + source.generator_name(i)
                     + "'",
                 name_tok);
          }
          imgs.push_back(*images[i]);
        }
        return GroupHom(name, source, target, std::move(imgs));
      }

      GroupDecl const* find_group(Document const&    doc,
                                  std::string const& name,
                                  Token const&       t) {
        for (auto const& g : doc.groups) {
          if (g.presentation.name() == name) {
            return &g;
          }
        }
        fail("unknown group '" + name + "'", t);
      }
    };

  }  // namespace detail

  inline Document parse_document(std::string const& text) {
    return detail::Parser(text).document();
  }

  /// The single group in `text`, with its central clause if any.
  inline GroupDecl parse_group(std::string const& text) {
    return detail::Parser(text).single_group();
  }

  inline Presentation parse_presentation(std::string const& text) {
    return parse_group(text).presentation;
  }

  /// A word over the given generator names.
  inline Word parse_word(std::string const&              text,
                         std::vector<std::string> const& gens) {
    return detail::Parser(text).word_only(gens);
  }

  ////////////////////////////////////////////////////////////////////////
  // Serialization
  ////////////////////////////////////////////////////////////////////////

  inline std::string to_string(Word const&                     w,
                               std::vector<std::string> const& gens) {
    if (w.empty()) {
      return "1";
    }
    std::ostringstream os;
    std::size_t        i = 0;
    bool               first = true;
    while (i < w.size()) {
      std::size_t j = i;
      while (j < w.size() && w[j] == w[i]) {
        ++j;
      }
      long e = static_cast<long>(j - i) * w[i].sign();
      os << (first ? "" : " ") << gens.at(w[i].gen);
      if (e != 1) {
        os << '^' << e;
      }
      first = false;
      i     = j;
    }
    return os.str();
  }

  inline std::string to_text(Presentation const&             p,
                             std::vector<std::string> const& central = {}) {
    std::ostringstream os;
    os << "group " << (p.name().empty() ? "G" : p.name()) << " {\n  gens: ";
    for (std::size_t i = 0; i < p.num_generators(); ++i) {
      os << (i ? ", " : "") << p.generator_name(i);
    }
    os << ";\n  rels: ";
    for (std::size_t i = 0; i < p.relators().size(); ++i) {
      os << (i ? ", " : "") << to_string(p.relators()[i], p.generators());
    }
    os << ";\n";
    if (!central.empty()) {
      os << "  central: ";
      for (std::size_t i = 0; i < central.size(); ++i) {
        os << (i ? ", " : "") << central[i];
      }
      os << ";\n";
    }
    os << "}\n";
    return os.str();
  }

  inline std::string to_text(GroupHom const& h) {
    std::ostringstream os;
    os << "hom " << h.name() << " : " << h.source().name() << " -> "
       << h.target().name() << " {";
    for (std::size_t i = 0; i < h.images().size(); ++i) {
      os << (i ? ", " : " ") << h.source().generator_name(i) << " => "
         << to_string(h.images()[i], h.target().generators());
    }
    os << " }\n";
    return os.str();
  }

}  // namespace kahlerobs

#endif  // KAHLEROBS_PARSER_HPP_
