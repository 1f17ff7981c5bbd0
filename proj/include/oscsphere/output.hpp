#pragma once

#include <string>
#include <vector>

namespace oscsphere::output {

// Decimal rendering at 17 significant digits, used everywhere numbers are
// printed so repeated invocations serialize byte-identically.
std::string format_double(double x);

// Ordered JSON document builder. Values are emitted in insertion order with
// two-space indentation and LF line endings.
class JsonWriter {
 public:
  std::string str() const;

  void begin_object();
  void end_object();
  void begin_array();
  void end_array();
  void key(const std::string& name);
  void value_string(const std::string& v);
  void value_number(double v);
  void value_int(long long v);
  void value_bool(bool v);
  void value_raw(const std::string& text);

 private:
  void prepare_slot();
  void indent();
  std::string out_;
  std::vector<bool> has_items_;
  bool pending_key_ = false;
};

std::string escape_json(const std::string& s);

// CSV with a header row, comma separators, LF line endings.
std::string to_csv(const std::vector<std::string>& header,
                   const std::vector<std::vector<std::string>>& rows);

}  // namespace oscsphere::output
