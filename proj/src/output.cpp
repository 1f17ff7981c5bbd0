#include "oscsphere/output.hpp"

#include <cmath>
#include <cstdio>

namespace oscsphere::output {

std::string format_double(double x) {
  if (!std::isfinite(x)) {
    if (std::isnan(x)) return "nan";
    return x > 0 ? "inf" : "-inf";
  }
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string escape_json(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\b': out += "\\b"; break;
      case '\f': out += "\\f"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

std::string JsonWriter::str() const { return out_ + "\n"; }

void JsonWriter::prepare_slot() {
  if (pending_key_) {
    pending_key_ = false;
    return;
  }
  if (!has_items_.empty()) {
    if (has_items_.back()) out_ += ',';
    has_items_.back() = true;
    out_ += '\n';
    indent();
  }
}

void JsonWriter::indent() {
  out_.append(2 * has_items_.size(), ' ');
}

void JsonWriter::begin_object() {
  prepare_slot();
  out_ += '{';
  has_items_.push_back(false);
}

void JsonWriter::end_object() {
  bool had = has_items_.back();
  has_items_.pop_back();
  if (had) {
    out_ += '\n';
    indent();
  }
  out_ += '}';
}

void JsonWriter::begin_array() {
  prepare_slot();
  out_ += '[';
  has_items_.push_back(false);
}

void JsonWriter::end_array() {
  bool had = has_items_.back();
  has_items_.pop_back();
  if (had) {
    out_ += '\n';
    indent();
  }
  out_ += ']';
}

void JsonWriter::key(const std::string& name) {
  if (has_items_.back()) out_ += ',';
  has_items_.back() = true;
  out_ += '\n';
  indent();
  out_ += '"';
  out_ += escape_json(name);
  out_ += "\": ";
  pending_key_ = true;
}

void JsonWriter::value_string(const std::string& v) {
  prepare_slot();
  out_ += '"';
  out_ += escape_json(v);
  out_ += '"';
}

void JsonWriter::value_number(double v) {
  prepare_slot();
  if (std::isfinite(v)) {
    out_ += format_double(v);
  } else {
    out_ += "null";
  }
}

void JsonWriter::value_int(long long v) {
  prepare_slot();
  out_ += std::to_string(v);
}

void JsonWriter::value_bool(bool v) {
  prepare_slot();
  out_ += v ? "true" : "false";
}

void JsonWriter::value_raw(const std::string& text) {
  prepare_slot();
  out_ += text;
}

namespace {

std::string csv_field(const std::string& f) {
  bool quote = f.find_first_of(",\"\n\r") != std::string::npos;
  if (!quote) return f;
  std::string out = "\"";
  for (char c : f) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string to_csv(const std::vector<std::string>& header,
                   const std::vector<std::vector<std::string>>& rows) {
  std::string out;
  for (size_t i = 0; i < header.size(); ++i) {
    if (i) out += ',';
    out += csv_field(header[i]);
  }
  out += '\n';
  for (const auto& row : rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += csv_field(row[i]);
    }
    out += '\n';
  }
  return out;
}

}  // namespace oscsphere::output
