// Copyright 2026 The Gameforge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gameforge {

// Parse failure with a 1-based source position.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& reason)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + reason),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// One node of a document.  Documents are a strict subset of JSON: objects
// with string keys, arrays, and strings.  No numbers, booleans, or null;
// rationals travel as strings so nothing is ever read through floating
// point.  Object fields keep their source order, and every node remembers
// where it started for error reporting.
class DocValue {
 public:
  enum class Kind { kString, kArray, kObject };

  static DocValue make_string(std::string text, int line, int column) {
    DocValue v(Kind::kString, line, column);
    v.text_ = std::move(text);
    return v;
  }
  static DocValue make_array(int line, int column) {
    return DocValue(Kind::kArray, line, column);
  }
  static DocValue make_object(int line, int column) {
    return DocValue(Kind::kObject, line, column);
  }

  Kind kind() const { return kind_; }
  int line() const { return line_; }
  int column() const { return column_; }

  [[noreturn]] void fail(const std::string& reason) const {
    throw ParseError(line_, column_, reason);
  }

  const std::string& as_string() const {
    if (kind_ != Kind::kString) fail("expected a string");
    return text_;
  }
  const std::vector<DocValue>& items() const {
    if (kind_ != Kind::kArray) fail("expected a list");
    return items_;
  }
  const std::vector<std::pair<std::string, DocValue>>& fields() const {
    if (kind_ != Kind::kObject) fail("expected a map");
    return fields_;
  }

  bool has(const std::string& key) const {
    for (const auto& [name, value] : fields()) {
      if (name == key) return true;
    }
    return false;
  }
  const DocValue& at(const std::string& key) const {
    for (const auto& [name, value] : fields()) {
      if (name == key) return value;
    }
    fail("missing field \"" + key + "\"");
  }

  // Rejects any field outside the allowed set, naming the offender.
  void allow_only(const std::vector<std::string>& keys) const {
    for (const auto& [name, value] : fields()) {
      bool known = false;
      for (const std::string& key : keys) {
        if (name == key) known = true;
      }
      if (!known) value.fail("unknown field \"" + name + "\"");
    }
  }

  void append(DocValue item) { items_.push_back(std::move(item)); }
  void insert(std::string key, DocValue value) {
    fields_.emplace_back(std::move(key), std::move(value));
  }

 private:
  DocValue(Kind kind, int line, int column)
      : kind_(kind), line_(line), column_(column) {}

  Kind kind_;
  int line_;
  int column_;
  std::string text_;
  std::vector<DocValue> items_;
  std::vector<std::pair<std::string, DocValue>> fields_;
};

namespace detail {

class DocParser {
 public:
  explicit DocParser(std::string_view text) : text_(text) {}

  DocValue parse() {
    skip_whitespace();
    DocValue root = parse_value();
    skip_whitespace();
    if (pos_ < text_.size()) {
      throw ParseError(line_, column_, "trailing content after document");
    }
    return root;
  }

 private:
  [[noreturn]] void fail(const std::string& reason) const {
    throw ParseError(line_, column_, reason);
  }

  char peek() const { return text_[pos_]; }
  bool done() const { return pos_ >= text_.size(); }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_whitespace() {
    while (!done()) {
      const char c = peek();
      if (c != ' ' && c != '\t' && c != '\r' && c != '\n') break;
      advance();
    }
  }

  void expect(char wanted) {
    if (done() || peek() != wanted) {
      fail(std::string("expected '") + wanted + "'");
    }
    advance();
  }

  DocValue parse_value() {
    if (done()) fail("unexpected end of document");
    const char c = peek();
    if (c == '"') return parse_string();
    if (c == '[') return parse_array();
    if (c == '{') return parse_object();
    fail("expected a string, list, or map");
  }

  DocValue parse_string() {
    const int line = line_;
    const int column = column_;
    advance();  // opening quote
    std::string out;
    while (true) {
      if (done()) fail("unterminated string");
      const char c = peek();
      if (c == '"') {
        advance();
        return DocValue::make_string(std::move(out), line, column);
      }
      if (static_cast<unsigned char>(c) < 0x20) {
        fail("raw control character in string");
      }
      if (c == '\\') {
        advance();
        if (done()) fail("unterminated escape");
        const char e = peek();
        advance();
        switch (e) {
          case '"': out.push_back('"'); break;
          case '\\': out.push_back('\\'); break;
          case '/': out.push_back('/'); break;
          case 'b': out.push_back('\b'); break;
          case 'f': out.push_back('\f'); break;
          case 'n': out.push_back('\n'); break;
          case 'r': out.push_back('\r'); break;
          case 't': out.push_back('\t'); break;
          case 'u': append_unicode_escape(out); break;
          default: fail("unknown escape sequence");
        }
        continue;
      }
      out.push_back(c);
      advance();
    }
  }

  unsigned read_hex4() {
    unsigned value = 0;
    for (int k = 0; k < 4; ++k) {
      if (done()) fail("unterminated escape");
      const char c = peek();
      unsigned digit;
      if (c >= '0' && c <= '9') {
        digit = c - '0';
      } else if (c >= 'a' && c <= 'f') {
        digit = 10 + (c - 'a');
      } else if (c >= 'A' && c <= 'F') {
        digit = 10 + (c - 'A');
      } else {
        fail("invalid unicode escape");
      }
      value = value * 16 + digit;
      advance();
    }
    return value;
  }

  void append_unicode_escape(std::string& out) {
    unsigned code = read_hex4();
    if (code >= 0xD800 && code <= 0xDBFF) {
      if (done() || peek() != '\\') fail("unpaired surrogate");
      advance();
      if (done() || peek() != 'u') fail("unpaired surrogate");
      advance();
      const unsigned low = read_hex4();
      if (low < 0xDC00 || low > 0xDFFF) fail("unpaired surrogate");
      code = 0x10000 + ((code - 0xD800) << 10) + (low - 0xDC00);
    } else if (code >= 0xDC00 && code <= 0xDFFF) {
      fail("unpaired surrogate");
    }
    // UTF-8 encode.
    if (code < 0x80) {
      out.push_back(static_cast<char>(code));
    } else if (code < 0x800) {
      out.push_back(static_cast<char>(0xC0 | (code >> 6)));
      out.push_back(static_cast<char>(0x80 | (code & 0x3F)));
    } else if (code < 0x10000) {
      out.push_back(static_cast<char>(0xE0 | (code >> 12)));
      out.push_back(static_cast<char>(0x80 | ((code >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (code & 0x3F)));
    } else {
      out.push_back(static_cast<char>(0xF0 | (code >> 18)));
      out.push_back(static_cast<char>(0x80 | ((code >> 12) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | ((code >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (code & 0x3F)));
    }
  }

  DocValue parse_array() {
    DocValue out = DocValue::make_array(line_, column_);
    advance();  // '['
    skip_whitespace();
    if (!done() && peek() == ']') {
      advance();
      return out;
    }
    while (true) {
      skip_whitespace();
      out.append(parse_value());
      skip_whitespace();
      if (done()) fail("unterminated list");
      if (peek() == ',') {
        advance();
        continue;
      }
      expect(']');
      return out;
    }
  }

  DocValue parse_object() {
    DocValue out = DocValue::make_object(line_, column_);
    advance();  // '{'
    skip_whitespace();
    if (!done() && peek() == '}') {
      advance();
      return out;
    }
    while (true) {
      skip_whitespace();
      if (done() || peek() != '"') fail("expected a field name");
      const int key_line = line_;
      const int key_column = column_;
      DocValue key = parse_string();
      if (out.has(key.as_string())) {
        throw ParseError(key_line, key_column,
                         "duplicate field \"" + key.as_string() + "\"");
      }
      skip_whitespace();
      expect(':');
      skip_whitespace();
      out.insert(key.as_string(), parse_value());
      skip_whitespace();
      if (done()) fail("unterminated map");
      if (peek() == ',') {
        advance();
        continue;
      }
      expect('}');
      return out;
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

}  // namespace detail

inline DocValue parse_document(std::string_view text) {
  return detail::DocParser(text).parse();
}

// Escapes a string for embedding in a document.
inline std::string quote_string(std::string_view text) {
  std::string out = "\"";
  for (char c : text) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\b': out += "\\b"; break;
      case '\f': out += "\\f"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          static const char hex[] = "0123456789abcdef";
          out += "\\u00";
          out.push_back(hex[(c >> 4) & 0xF]);
          out.push_back(hex[c & 0xF]);
        } else {
          out.push_back(c);
        }
    }
  }
  out.push_back('"');
  return out;
}

}  // namespace gameforge
