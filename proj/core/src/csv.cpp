#include "nldg/csv.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <stdexcept>
#include <unistd.h>

namespace nldg {

std::string format_error(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

std::string format_order(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

std::string format_sig(double v, int n) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", n, v);
  return buf;
}

namespace {

// product of factors separated by '*' or '/', each a number or "pi" or "<number>pi"
class ExprParser {
 public:
  explicit ExprParser(const std::string& s) : s_(s) {}

  double parse() {
    skip();
    double sign = 1.0;
    if (peek() == '-' || peek() == '+') sign = get() == '-' ? -1.0 : 1.0;
    double v = factor();
    for (;;) {
      skip();
      char c = peek();
      if (c == '*') {
        get();
        v *= factor();
      } else if (c == '/') {
        get();
        double d = factor();
        if (d == 0.0) fail("division by zero");
        v /= d;
      } else {
        break;
      }
    }
    skip();
    if (pos_ != s_.size()) fail("trailing characters");
    return sign * v;
  }

 private:
  double factor() {
    skip();
    double v = 1.0;
    bool any = false;
    if (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.') {
      size_t used = 0;
      try {
        v = std::stod(s_.substr(pos_), &used);
      } catch (const std::exception&) {
        fail("bad number");
      }
      pos_ += used;
      any = true;
    }
    skip();
    if (s_.compare(pos_, 2, "pi") == 0) {
      pos_ += 2;
      v *= std::numbers::pi;
      any = true;
    }
    if (!any) fail("expected a number or pi");
    return v;
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char get() { return s_[pos_++]; }
  [[noreturn]] void fail(const char* why) const {
    throw std::invalid_argument("cannot parse '" + s_ + "': " + why);
  }

  std::string s_;
  size_t pos_ = 0;
};

}  // namespace

double parse_real_expr(const std::string& s) { return ExprParser(s).parse(); }

void write_file_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  fs::path target(path);
  fs::path dir = target.has_parent_path() ? target.parent_path() : fs::path(".");
  fs::path tmp = dir / ("." + target.filename().string() + ".tmp" + std::to_string(::getpid()));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open '" + tmp.string() + "' for writing");
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("write failed for '" + tmp.string() + "'");
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw std::runtime_error("cannot rename onto '" + path + "': " + ec.message());
  }
}

}  // namespace nldg
