#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fbh/types.hpp"

namespace fbh::cli {

/// Streaming JSON with keys in call order and doubles printed with 17
/// significant digits; non-finite values become null.
class JsonWriter {
 public:
  JsonWriter& begin_object();
  JsonWriter& end_object();
  JsonWriter& begin_array();
  JsonWriter& end_array();
  JsonWriter& key(std::string_view k);

  JsonWriter& value(double x);
  JsonWriter& value(int x);
  JsonWriter& value(long long x);
  JsonWriter& value(unsigned long long x);
  JsonWriter& value(bool x);
  JsonWriter& value(std::string_view s);
  JsonWriter& value(const char* s) { return value(std::string_view(s)); }
  JsonWriter& value(Complex z);
  JsonWriter& value(std::optional<double> x);
  JsonWriter& value(std::span<const double> xs);
  JsonWriter& null();

  template <class T>
  JsonWriter& field(std::string_view k, const T& v) {
    key(k);
    return value(v);
  }

  /// The document followed by a newline.
  std::string str() const { return buf_ + "\n"; }

 private:
  void separate();
  void write_string(std::string_view s);

  std::string buf_;
  std::vector<bool> first_;  // per open container: no element written yet
  bool after_key_ = false;
};

std::string format_double(double x);

}  // namespace fbh::cli
