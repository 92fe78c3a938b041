#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace trinet::cli {

/// 17 significant digits, lowercase scientific notation ("%.16e").
std::string format_double(double v);

/// Streaming writer for compact JSON. Keys appear in insertion order.
class JsonWriter {
public:
  JsonWriter &begin_object();
  JsonWriter &end_object();
  JsonWriter &begin_array();
  JsonWriter &end_array();
  JsonWriter &key(std::string_view name);
  JsonWriter &value(double v);
  JsonWriter &value(int v);
  JsonWriter &value(bool v);
  JsonWriter &value(std::string_view v);
  JsonWriter &value(const char *v) { return value(std::string_view(v)); }

  template <typename T> JsonWriter &field(std::string_view name, const T &v) {
    key(name);
    return value(v);
  }

  const std::string &str() const { return out_; }

private:
  void separate();
  void write_string(std::string_view v);

  std::string out_;
  std::vector<bool> first_; // per open container: no element written yet
  bool after_key_ = false;
};

std::string join_csv(const std::vector<std::string> &fields);

} // namespace trinet::cli
