#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace scenegen {

// Shortest decimal form that parses back to the same double.
std::string format_number(double v);
double parse_number(std::string_view token, int line);
std::int64_t parse_int(std::string_view token, int line);

std::string base64_encode(const unsigned char* data, std::size_t len);
std::vector<unsigned char> base64_decode(std::string_view text, int line);

// Writer for the plain-text record format used by every artifact file:
// one `key value...` line per field, `kind [name]` ... `end` blocks,
// '#'-prefixed comments, two-space indentation inside blocks.
class DocWriter {
public:
  void comment(std::string_view text);
  void begin(std::string_view kind, std::string_view name = {});
  void end();
  void field(std::string_view key, std::string_view value);
  void field(std::string_view key, double value);
  void field(std::string_view key, std::int64_t value);
  void field(std::string_view key, std::initializer_list<double> values);
  void raw_line(std::string_view text);

  const std::string& str() const { return out_; }

private:
  void indent();
  std::string out_;
  int depth_ = 0;
};

struct DocLine {
  int number = 0;
  std::string head;                // first token
  std::vector<std::string> args;   // remaining tokens
  std::string rest;                // everything after the head, untrimmed of inner spaces

  const std::string& arg(std::size_t i) const;
  double num(std::size_t i) const;
};

// Tokenizing reader over the record format. Blank lines and comments are
// skipped; indentation is insignificant.
class DocParser {
public:
  explicit DocParser(std::string_view text);

  bool eof() const { return pos_ >= lines_.size(); }
  const DocLine& peek() const;
  DocLine next();
  // Consumes a line and requires its head to equal `head`.
  DocLine expect(std::string_view head);
  int line_number() const;

private:
  std::vector<DocLine> lines_;
  std::size_t pos_ = 0;
};

}  // namespace scenegen
