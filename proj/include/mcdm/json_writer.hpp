#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace mcdm {

// Streaming pretty-printer for the result documents. Reals are always written
// with exactly six decimals ("-0.000000" is folded to "0.000000"), so output
// bytes depend only on the values.
class JsonWriter {
 public:
  JsonWriter& begin_object();
  JsonWriter& end_object();
  JsonWriter& begin_array();
  JsonWriter& end_array();
  JsonWriter& key(std::string_view k);

  JsonWriter& value(std::string_view s);
  JsonWriter& value(const char* s) { return value(std::string_view(s)); }
  JsonWriter& value(double x);
  JsonWriter& value(int x);
  JsonWriter& value(std::size_t x);
  JsonWriter& value(bool b);

  // Key/value shorthands.
  template <typename T>
  JsonWriter& field(std::string_view k, const T& v) {
    key(k);
    return value(v);
  }

  [[nodiscard]] std::string str() const { return out_ + "\n"; }

 private:
  void before_value();
  void newline();

  struct Frame {
    bool is_object;
    bool empty = true;
  };
  std::string out_;
  std::vector<Frame> stack_;
  bool after_key_ = false;
};

std::string format_real(double x);

}  // namespace mcdm
