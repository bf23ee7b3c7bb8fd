#include <mzvkit/indices.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

namespace mzvkit {

int MultiIndex::weight() const { return std::accumulate(parts.begin(), parts.end(), 0); }

bool MultiIndex::admissible() const {
  if (parts.empty() || parts.back() < 2) return false;
  if (sign != 1 && sign != -1) return false;
  return std::all_of(parts.begin(), parts.end(), [](int k) { return k >= 1; });
}

std::string MultiIndex::to_string() const {
  std::ostringstream os;
  os << 'z' << (strict ? "" : "s") << (sign < 0 ? "a" : "") << '(';
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) os << ',';
    os << parts[i];
  }
  os << ')';
  return os.str();
}

MultiIndex make_index(std::vector<int> parts, bool strict, int sign) {
  MultiIndex k{std::move(parts), strict, sign};
  if (!k.admissible()) throw DomainError("inadmissible index " + k.to_string());
  return k;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string text) : s_(std::move(text)) {}

  MultiIndex run() {
    MultiIndex k;
    std::size_t open = s_.find('(');
    if (open == std::string::npos) fail("expected '('");
    const std::string prefix = s_.substr(0, open);
    if (prefix == "z") {
    } else if (prefix == "zs") {
      k.strict = false;
    } else if (prefix == "za") {
      k.sign = -1;
    } else if (prefix == "zsa") {
      k.strict = false;
      k.sign = -1;
    } else {
      fail("unknown prefix '" + prefix + "'");
    }
    pos_ = open + 1;
    for (;;) {
      entry(k.parts);
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      if (peek() == ')') {
        ++pos_;
        break;
      }
      fail("expected ',' or ')'");
    }
    if (pos_ != s_.size()) fail("trailing characters");
    if (k.parts.empty()) fail("empty index");
    if (std::any_of(k.parts.begin(), k.parts.end(), [](int v) { return v < 1; })) {
      fail("exponents must be positive");
    }
    if (k.parts.back() < 2) fail("last exponent must be at least 2");
    return k;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("cannot parse index '" + s_ + "': " + what);
  }

  int integer() {
    const char* first = s_.data() + pos_;
    const char* last = s_.data() + s_.size();
    int v = 0;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr == first) fail("expected an integer");
    pos_ += static_cast<std::size_t>(ptr - first);
    return v;
  }

  void entry(std::vector<int>& out) {
    if (peek() != '{') {
      out.push_back(integer());
      return;
    }
    ++pos_;
    const int a = integer();
    if (peek() != '}') fail("expected '}'");
    ++pos_;
    if (peek() != '^') fail("expected '^'");
    ++pos_;
    const int n = integer();
    if (n < 0 || n > 64) fail("repetition count out of range");
    out.insert(out.end(), static_cast<std::size_t>(n), a);
  }

  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiIndex parse_index(std::string_view text) {
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  }
  return Parser(std::move(compact)).run();
}

MultiIndex dual_index(const MultiIndex& k) {
  if (!k.strict || k.sign != 1 || !k.admissible()) {
    throw DomainError("dual_index needs an admissible strict index with sign +1");
  }
  std::vector<bool> word;
  for (int part : k.parts) {
    word.push_back(true);
    word.insert(word.end(), static_cast<std::size_t>(part - 1), false);
  }
  std::reverse(word.begin(), word.end());
  word.flip();
  // The complemented reversed word again starts with 1 because k_n >= 2.
  MultiIndex d;
  for (bool bit : word) {
    if (bit) {
      d.parts.push_back(1);
    } else {
      ++d.parts.back();
    }
  }
  return d;
}

void HurwitzIndex::validate() const {
  if (parts.empty() || parts.back() < 2 ||
      std::any_of(parts.begin(), parts.end(), [](int v) { return v < 1; })) {
    throw DomainError("inadmissible Hurwitz index");
  }
  if (alpha <= 0) throw DomainError("Hurwitz shift must be positive");
}

}  // namespace mzvkit
