// Copyright 2026 The Lakecat Authors
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

#include "lakecat/profiler/markup.hpp"

#include <cctype>
#include <charconv>

#include "lakecat/error.hpp"

namespace lakecat::profiler {

namespace {

constexpr int kMaxDepth = 256;

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  MarkupElement document() {
    if (s_.starts_with("\xEF\xBB\xBF")) pos_ = 3;
    misc();
    if (!peek('<')) fail("expected root element");
    MarkupElement root = element(0);
    misc();
    if (pos_ != s_.size()) fail("content after root element");
    return root;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InvalidArgument("malformed markup at offset " + std::to_string(pos_) + ": " + what);
  }

  bool peek(char c) const { return pos_ < s_.size() && s_[pos_] == c; }
  bool starts(std::string_view p) const { return s_.substr(pos_).starts_with(p); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  void skip_past(std::string_view terminator) {
    const auto at = s_.find(terminator, pos_);
    if (at == std::string_view::npos) fail("missing '" + std::string(terminator) + "'");
    pos_ = at + terminator.size();
  }

  // Whitespace, comments, processing instructions, DOCTYPE.
  void misc() {
    for (;;) {
      skip_ws();
      if (starts("<?")) {
        skip_past("?>");
      } else if (starts("<!--")) {
        skip_past("-->");
      } else if (starts("<!DOCTYPE")) {
        const auto bracket = s_.find('[', pos_);
        const auto close = s_.find('>', pos_);
        if (bracket != std::string_view::npos && bracket < close) {
          pos_ = bracket;
          skip_past("]");
        }
        skip_past(">");
      } else {
        return;
      }
    }
  }

  std::string name() {
    const std::size_t start = pos_;
    while (pos_ < s_.size()) {
      const unsigned char c = static_cast<unsigned char>(s_[pos_]);
      if (std::isalnum(c) || c == '_' || c == '-' || c == '.' || c == ':' || c >= 0x80) {
        ++pos_;
      } else {
        break;
      }
    }
    if (pos_ == start) fail("expected a name");
    if (std::isdigit(static_cast<unsigned char>(s_[start])) || s_[start] == '-' || s_[start] == '.') {
      fail("invalid name start");
    }
    return std::string(s_.substr(start, pos_ - start));
  }

  void append_decoded(std::string& out, std::string_view raw) {
    for (std::size_t i = 0; i < raw.size(); ++i) {
      if (raw[i] == '<') fail("'<' in character data");
      if (raw[i] != '&') {
        out.push_back(raw[i]);
        continue;
      }
      const auto semi = raw.find(';', i);
      if (semi == std::string_view::npos) fail("unterminated entity");
      const std::string_view ent = raw.substr(i + 1, semi - i - 1);
      if (ent == "lt") out.push_back('<');
      else if (ent == "gt") out.push_back('>');
      else if (ent == "amp") out.push_back('&');
      else if (ent == "quot") out.push_back('"');
      else if (ent == "apos") out.push_back('\'');
      else if (ent.starts_with('#')) append_codepoint(out, ent.substr(1));
      else fail("unknown entity '&" + std::string(ent) + ";'");
      i = semi;
    }
  }

  void append_codepoint(std::string& out, std::string_view digits) {
    int base = 10;
    if (!digits.empty() && (digits[0] == 'x' || digits[0] == 'X')) {
      base = 16;
      digits.remove_prefix(1);
    }
    unsigned long cp = 0;
    auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), cp, base);
    if (ec != std::errc{} || p != digits.data() + digits.size() || cp == 0 || cp > 0x10FFFF) {
      fail("bad character reference");
    }
    if (cp < 0x80) {
      out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
      out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
      out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
      out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
  }

  MarkupElement element(int depth) {
    if (depth > kMaxDepth) fail("nesting too deep");
    ++pos_;  // '<'
    MarkupElement el;
    el.name = name();
    for (;;) {
      skip_ws();
      if (starts("/>")) {
        pos_ += 2;
        return el;
      }
      if (peek('>')) {
        ++pos_;
        break;
      }
      std::string attr = name();
      skip_ws();
      if (!peek('=')) fail("expected '=' after attribute " + attr);
      ++pos_;
      skip_ws();
      if (!peek('"') && !peek('\'')) fail("attribute value must be quoted");
      const char q = s_[pos_++];
      const auto end = s_.find(q, pos_);
      if (end == std::string_view::npos) fail("unterminated attribute value");
      std::string value;
      append_decoded(value, s_.substr(pos_, end - pos_));
      pos_ = end + 1;
      for (const auto& [k, _] : el.attributes) {
        if (k == attr) fail("duplicate attribute " + attr);
      }
      el.attributes.emplace_back(std::move(attr), std::move(value));
    }

    for (;;) {
      if (pos_ >= s_.size()) fail("unclosed element <" + el.name + ">");
      if (starts("</")) {
        pos_ += 2;
        const std::string closing = name();
        if (closing != el.name) fail("mismatched </" + closing + "> for <" + el.name + ">");
        skip_ws();
        if (!peek('>')) fail("expected '>'");
        ++pos_;
        return el;
      }
      if (starts("<!--")) {
        skip_past("-->");
      } else if (starts("<![CDATA[")) {
        pos_ += 9;
        const auto end = s_.find("]]>", pos_);
        if (end == std::string_view::npos) fail("unterminated CDATA");
        el.text.append(s_.substr(pos_, end - pos_));
        pos_ = end + 3;
      } else if (starts("<?")) {
        skip_past("?>");
      } else if (peek('<')) {
        el.children.push_back(element(depth + 1));
      } else {
        const auto next = s_.find('<', pos_);
        const auto stop = next == std::string_view::npos ? s_.size() : next;
        append_decoded(el.text, s_.substr(pos_, stop - pos_));
        pos_ = stop;
      }
    }
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

MarkupElement parse_markup(std::string_view text) { return Parser(text).document(); }

}  // namespace lakecat::profiler
