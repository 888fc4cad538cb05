#include "json_writer.hpp"

#include <cmath>
#include <cstdio>

namespace fbh::cli {

std::string format_double(double x) {
  if (!std::isfinite(x)) return "null";
  if (x == 0.0) return std::signbit(x) ? "-0" : "0";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void JsonWriter::separate() {
  if (after_key_) {
    after_key_ = false;
    return;
  }
  if (first_.empty()) return;
  if (!first_.back()) buf_ += ',';
  first_.back() = false;
}

JsonWriter& JsonWriter::begin_object() {
  separate();
  buf_ += '{';
  first_.push_back(true);
  return *this;
}

JsonWriter& JsonWriter::end_object() {
  first_.pop_back();
  buf_ += '}';
  return *this;
}

JsonWriter& JsonWriter::begin_array() {
  separate();
  buf_ += '[';
  first_.push_back(true);
  return *this;
}

JsonWriter& JsonWriter::end_array() {
  first_.pop_back();
  buf_ += ']';
  return *this;
}

JsonWriter& JsonWriter::key(std::string_view k) {
  separate();
  write_string(k);
  buf_ += ':';
  after_key_ = true;
  return *this;
}

JsonWriter& JsonWriter::value(double x) {
  separate();
  buf_ += format_double(x);
  return *this;
}

JsonWriter& JsonWriter::value(int x) { return value(static_cast<long long>(x)); }

JsonWriter& JsonWriter::value(long long x) {
  separate();
  buf_ += std::to_string(x);
  return *this;
}

JsonWriter& JsonWriter::value(unsigned long long x) {
  separate();
  buf_ += std::to_string(x);
  return *this;
}

JsonWriter& JsonWriter::value(bool x) {
  separate();
  buf_ += x ? "true" : "false";
  return *this;
}

JsonWriter& JsonWriter::value(std::string_view s) {
  separate();
  write_string(s);
  return *this;
}

void JsonWriter::write_string(std::string_view s) {
  buf_ += '"';
  for (char c : s) {
    switch (c) {
      case '"': buf_ += "\\\""; break;
      case '\\': buf_ += "\\\\"; break;
      case '\n': buf_ += "\\n"; break;
      case '\t': buf_ += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char esc[8];
          std::snprintf(esc, sizeof esc, "\\u%04x", c);
          buf_ += esc;
        } else {
          buf_ += c;
        }
    }
  }
  buf_ += '"';
}

JsonWriter& JsonWriter::value(Complex z) {
  begin_array();
  value(z.real());
  value(z.imag());
  return end_array();
}

JsonWriter& JsonWriter::value(std::optional<double> x) {
  return x ? value(*x) : null();
}

JsonWriter& JsonWriter::value(std::span<const double> xs) {
  begin_array();
  for (double x : xs) value(x);
  return end_array();
}

JsonWriter& JsonWriter::null() {
  separate();
  buf_ += "null";
  return *this;
}

}  // namespace fbh::cli
