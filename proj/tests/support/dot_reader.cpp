#include "dot_reader.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>
#include <stdexcept>

namespace dot {

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

class Reader {
public:
  explicit Reader(const std::string &text) : s_(text) {}

  Document document() {
    Document doc;
    auto keyword = lower(identifier());
    if (keyword == "strict") {
      doc.strict = true;
      keyword = lower(identifier());
    }
    if (keyword == "digraph")
      doc.directed = true;
    else if (keyword != "graph")
      fail("expected graph or digraph");
    skip();
    if (peek() != '{')
      doc.name = id();
    expect('{');
    while (true) {
      skip();
      if (peek() == '}')
        break;
      statement(doc);
      skip();
      if (peek() == ';')
        ++pos_;
    }
    expect('}');
    skip();
    if (pos_ != s_.size())
      fail("trailing content");
    return doc;
  }

private:
  const std::string &s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string &why) const {
    throw std::runtime_error("DOT syntax error at offset " + std::to_string(pos_) + ": " + why);
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  void skip() {
    while (pos_ < s_.size()) {
      char c = s_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else if (s_.compare(pos_, 2, "//") == 0 || (c == '#' && (pos_ == 0 || s_[pos_ - 1] == '\n'))) {
        while (pos_ < s_.size() && s_[pos_] != '\n')
          ++pos_;
      } else if (s_.compare(pos_, 2, "/*") == 0) {
        auto end = s_.find("*/", pos_ + 2);
        if (end == std::string::npos)
          fail("unterminated comment");
        pos_ = end + 2;
      } else {
        break;
      }
    }
  }

  void expect(char c) {
    skip();
    if (peek() != c)
      fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string identifier() {
    skip();
    auto start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' ||
                                static_cast<unsigned char>(s_[pos_]) >= 0x80))
      ++pos_;
    if (start == pos_ || std::isdigit(static_cast<unsigned char>(s_[start])))
      fail("expected identifier");
    return s_.substr(start, pos_ - start);
  }

  std::string id() {
    skip();
    char c = peek();
    if (c == '"') {
      ++pos_;
      std::string out;
      while (true) {
        if (pos_ >= s_.size())
          fail("unterminated string");
        char d = s_[pos_++];
        if (d == '"')
          break;
        if (d == '\\' && peek() == '"') {
          out += '"';
          ++pos_;
          continue;
        }
        out += d;
      }
      return out;
    }
    if (c == '<') {
      int depth = 0;
      auto start = pos_;
      do {
        if (pos_ >= s_.size())
          fail("unterminated HTML string");
        depth += s_[pos_] == '<' ? 1 : s_[pos_] == '>' ? -1 : 0;
        ++pos_;
      } while (depth > 0);
      return s_.substr(start, pos_ - start);
    }
    if (c == '-' || c == '.' || std::isdigit(static_cast<unsigned char>(c))) {
      auto start = pos_;
      if (c == '-')
        ++pos_;
      bool digits = false, dot = false;
      while (pos_ < s_.size()) {
        char d = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(d))) {
          digits = true;
        } else if (d == '.' && !dot) {
          dot = true;
        } else {
          break;
        }
        ++pos_;
      }
      if (!digits)
        fail("malformed numeral");
      return s_.substr(start, pos_ - start);
    }
    return identifier();
  }

  Attributes attr_list() {
    Attributes out;
    skip();
    while (peek() == '[') {
      ++pos_;
      while (true) {
        skip();
        if (peek() == ']') {
          ++pos_;
          break;
        }
        auto key = id();
        expect('=');
        out[key] = id();
        skip();
        if (peek() == ',' || peek() == ';')
          ++pos_;
      }
      skip();
    }
    return out;
  }

  void statement(Document &doc) {
    auto save = pos_;
    if (std::isalpha(static_cast<unsigned char>(peek()))) {
      auto word = lower(identifier());
      if (word == "subgraph")
        fail("subgraphs are not supported");
      skip();
      if ((word == "node" || word == "edge" || word == "graph") && peek() == '[') {
        auto attrs = attr_list();
        auto &target = word == "node" ? doc.node_defaults : word == "edge" ? doc.edge_defaults : doc.graph_attributes;
        for (auto &[k, v] : attrs)
          target[k] = v;
        return;
      }
      pos_ = save;
    }
    auto first = id();
    skip();
    if (peek() == ':')
      fail("ports are not supported");
    if (peek() == '=') {
      ++pos_;
      doc.graph_attributes[first] = id();
      return;
    }
    std::vector<std::string> chain{first};
    while (true) {
      skip();
      if (s_.compare(pos_, 2, "--") == 0 || s_.compare(pos_, 2, "->") == 0) {
        bool arrow = s_[pos_ + 1] == '>';
        if (arrow != doc.directed)
          fail("edge operator does not match graph kind");
        pos_ += 2;
        chain.push_back(id());
      } else {
        break;
      }
    }
    auto attrs = attr_list();
    if (chain.size() == 1) {
      doc.nodes.push_back({first, attrs});
      return;
    }
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
      doc.edges.push_back({chain[i], chain[i + 1], attrs});
  }
};

} // namespace

Document parse(const std::string &text) { return Reader(text).document(); }

} // namespace dot
