#include "scenegen/document.hpp"

#include <charconv>
#include <sstream>

#include "scenegen/errors.hpp"

namespace scenegen {

std::string format_number(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, ptr);
}

double parse_number(std::string_view token, int line) {
  double v = 0.0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last) {
    throw ParseError("not a number: '" + std::string(token) + "'", line);
  }
  return v;
}

std::int64_t parse_int(std::string_view token, int line) {
  std::int64_t v = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last) {
    throw ParseError("not an integer: '" + std::string(token) + "'", line);
  }
  return v;
}

namespace {
constexpr char kB64Alphabet[] =
    "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";

int b64_value(char c) {
  if (c >= 'A' && c <= 'Z') return c - 'A';
  if (c >= 'a' && c <= 'z') return c - 'a' + 26;
  if (c >= '0' && c <= '9') return c - '0' + 52;
  if (c == '+') return 62;
  if (c == '/') return 63;
  return -1;
}
}  // namespace

std::string base64_encode(const unsigned char* data, std::size_t len) {
  std::string out;
  out.reserve((len + 2) / 3 * 4);
  for (std::size_t i = 0; i < len; i += 3) {
    unsigned int chunk = static_cast<unsigned int>(data[i]) << 16;
    if (i + 1 < len) chunk |= static_cast<unsigned int>(data[i + 1]) << 8;
    if (i + 2 < len) chunk |= static_cast<unsigned int>(data[i + 2]);
    out.push_back(kB64Alphabet[(chunk >> 18) & 0x3F]);
    out.push_back(kB64Alphabet[(chunk >> 12) & 0x3F]);
    out.push_back(i + 1 < len ? kB64Alphabet[(chunk >> 6) & 0x3F] : '=');
    out.push_back(i + 2 < len ? kB64Alphabet[chunk & 0x3F] : '=');
  }
  return out;
}

std::vector<unsigned char> base64_decode(std::string_view text, int line) {
  if (text.size() % 4 != 0) {
    throw ParseError("base64 payload length not a multiple of 4", line);
  }
  std::vector<unsigned char> out;
  out.reserve(text.size() / 4 * 3);
  for (std::size_t i = 0; i < text.size(); i += 4) {
    int vals[4];
    int pad = 0;
    for (int j = 0; j < 4; ++j) {
      const char c = text[i + j];
      if (c == '=') {
        vals[j] = 0;
        ++pad;
      } else {
        vals[j] = b64_value(c);
        if (vals[j] < 0 || pad > 0) {
          throw ParseError("invalid base64 payload", line);
        }
      }
    }
    const unsigned int chunk = (static_cast<unsigned int>(vals[0]) << 18) |
                               (static_cast<unsigned int>(vals[1]) << 12) |
                               (static_cast<unsigned int>(vals[2]) << 6) |
                               static_cast<unsigned int>(vals[3]);
    out.push_back(static_cast<unsigned char>((chunk >> 16) & 0xFF));
    if (pad < 2) out.push_back(static_cast<unsigned char>((chunk >> 8) & 0xFF));
    if (pad < 1) out.push_back(static_cast<unsigned char>(chunk & 0xFF));
  }
  return out;
}

void DocWriter::indent() {
  for (int i = 0; i < depth_; ++i) out_ += "  ";
}

void DocWriter::comment(std::string_view text) {
  indent();
  out_ += "# ";
  out_ += text;
  out_ += '\n';
}

void DocWriter::begin(std::string_view kind, std::string_view name) {
  indent();
  out_ += kind;
  if (!name.empty()) {
    out_ += ' ';
    out_ += name;
  }
  out_ += '\n';
  ++depth_;
}

void DocWriter::end() {
  --depth_;
  indent();
  out_ += "end\n";
}

void DocWriter::field(std::string_view key, std::string_view value) {
  indent();
  out_ += key;
  out_ += ' ';
  out_ += value;
  out_ += '\n';
}

void DocWriter::field(std::string_view key, double value) {
  field(key, format_number(value));
}

void DocWriter::field(std::string_view key, std::int64_t value) {
  field(key, std::to_string(value));
}

void DocWriter::field(std::string_view key, std::initializer_list<double> values) {
  std::string joined;
  for (double v : values) {
    if (!joined.empty()) joined += ' ';
    joined += format_number(v);
  }
  field(key, joined);
}

void DocWriter::raw_line(std::string_view text) {
  indent();
  out_ += text;
  out_ += '\n';
}

const std::string& DocLine::arg(std::size_t i) const {
  if (i >= args.size()) {
    throw ParseError("missing argument for '" + head + "'", number, head);
  }
  return args[i];
}

double DocLine::num(std::size_t i) const { return parse_number(arg(i), number); }

DocParser::DocParser(std::string_view text) {
  int number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    std::string_view raw = text.substr(
        start, nl == std::string_view::npos ? text.size() - start : nl - start);
    ++number;
    start = nl == std::string_view::npos ? text.size() + 1 : nl + 1;

    std::size_t begin = raw.find_first_not_of(" \t\r");
    if (begin == std::string_view::npos) continue;
    std::size_t finish = raw.find_last_not_of(" \t\r");
    std::string_view body = raw.substr(begin, finish - begin + 1);
    if (body.empty() || body[0] == '#') continue;

    DocLine line;
    line.number = number;
    std::size_t sp = body.find(' ');
    if (sp == std::string_view::npos) {
      line.head = std::string(body);
    } else {
      line.head = std::string(body.substr(0, sp));
      std::size_t rest_begin = body.find_first_not_of(' ', sp);
      line.rest = rest_begin == std::string_view::npos
                      ? std::string()
                      : std::string(body.substr(rest_begin));
      std::istringstream iss{line.rest};
      std::string tok;
      while (iss >> tok) line.args.push_back(tok);
    }
    lines_.push_back(std::move(line));
  }
}

const DocLine& DocParser::peek() const {
  if (eof()) throw ParseError("unexpected end of document", line_number());
  return lines_[pos_];
}

DocLine DocParser::next() {
  if (eof()) throw ParseError("unexpected end of document", line_number());
  return lines_[pos_++];
}

DocLine DocParser::expect(std::string_view head) {
  DocLine line = next();
  if (line.head != head) {
    throw ParseError("expected '" + std::string(head) + "', found '" + line.head + "'",
                     line.number, line.head);
  }
  return line;
}

int DocParser::line_number() const {
  if (lines_.empty()) return 0;
  if (pos_ >= lines_.size()) return lines_.back().number;
  return lines_[pos_].number;
}

}  // namespace scenegen
