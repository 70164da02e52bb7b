#include "singraph/serialize.hpp"

#include <cmath>
#include <cstdio>

namespace singraph {

std::string json_number(double v) {
  if (!std::isfinite(v)) throw BadArgumentError("JSON cannot carry a non-finite number");
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (const char c : s) {
    switch (c) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\t':
        out += "\\t";
        break;
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

void JsonWriter::comma() {
  if (!needs_comma_.empty()) {
    if (needs_comma_.back()) out_ += ",";
    needs_comma_.back() = 1;
  }
}

JsonWriter& JsonWriter::begin_object() {
  comma();
  out_ += "{";
  needs_comma_.push_back(0);
  return *this;
}

JsonWriter& JsonWriter::end_object() {
  out_ += "}";
  needs_comma_.pop_back();
  return *this;
}

JsonWriter& JsonWriter::begin_array() {
  comma();
  out_ += "[";
  needs_comma_.push_back(0);
  return *this;
}

JsonWriter& JsonWriter::end_array() {
  out_ += "]";
  needs_comma_.pop_back();
  return *this;
}

JsonWriter& JsonWriter::key(const std::string& k) {
  comma();
  out_ += "\"" + json_escape(k) + "\":";
  if (!needs_comma_.empty()) needs_comma_.back() = 0;  // the value follows without a comma
  return *this;
}

JsonWriter& JsonWriter::value(double v) {
  comma();
  out_ += json_number(v);
  return *this;
}

JsonWriter& JsonWriter::value(std::int64_t v) {
  comma();
  out_ += std::to_string(v);
  return *this;
}

JsonWriter& JsonWriter::value(bool v) {
  comma();
  out_ += v ? "true" : "false";
  return *this;
}

JsonWriter& JsonWriter::value(const std::string& v) {
  comma();
  out_ += "\"" + json_escape(v) + "\"";
  return *this;
}

JsonWriter& JsonWriter::null() {
  comma();
  out_ += "null";
  return *this;
}

void append_json(JsonWriter& w, const Spectrum& s) {
  w.begin_object();
  w.key("kind").value(s.exact() ? "exact" : "floating");
  w.key("total_multiplicity").value(s.total_multiplicity());
  w.key("entries").begin_array();
  for (std::size_t i = 0; i < s.entries().size(); ++i) {
    const auto& e = s.entries()[i];
    w.begin_object();
    if (s.exact()) {
      w.key("value").value(s.exact_value(i));
    } else {
      w.key("value").value(e.value);
    }
    w.key("multiplicity").value(e.multiplicity);
    w.end_object();
  }
  w.end_array();
  w.end_object();
}

void append_json(JsonWriter& w, const Coloring& c) {
  w.begin_object();
  w.key("scheme").value(c.scheme);
  w.key("palette").value(static_cast<std::int64_t>(c.palette));
  w.key("colors").begin_array();
  for (const int color : c.colors) w.value(static_cast<std::int64_t>(color));
  w.end_array();
  w.end_object();
}

void append_json(JsonWriter& w, const ChromaticResult& r) {
  w.begin_object();
  w.key("lower").value(r.lower);
  w.key("upper").value(r.upper);
  w.key("exact");
  if (r.exact) {
    w.value(*r.exact);
  } else {
    w.null();
  }
  w.key("budget_exhausted").value(r.budget_exhausted);
  w.key("methods").begin_array();
  for (const auto& m : r.methods) w.value(m);
  w.end_array();
  w.end_object();
}

void append_json(JsonWriter& w, const CountReport& r) {
  w.begin_object();
  w.key("n").value(static_cast<std::int64_t>(r.n));
  w.key("ell").value(static_cast<std::int64_t>(r.ell));
  w.key("q").value(r.q);
  w.key("count").value(r.count);
  w.key("group_order").value(r.group_order);
  w.key("expected_exponent").value(r.expected_exponent);
  w.key("observed_exponent").value(r.observed_exponent);
  w.end_object();
}

void append_json(JsonWriter& w, const MixingReport& r) {
  w.begin_object();
  w.key("group_order").value(r.group_order);
  w.key("d").value(r.d);
  w.key("trials_requested").value(static_cast<std::int64_t>(r.trials_requested));
  w.key("trials_run").value(static_cast<std::int64_t>(r.trials_run));
  w.key("violations").value(static_cast<std::int64_t>(r.violations));
  w.key("subset_size").value(r.subset_size);
  w.key("satisfiable").value(r.satisfiable);
  w.key("seed").value(static_cast<std::int64_t>(r.seed));
  w.end_object();
}

namespace {

template <class T>
std::string wrap(const T& obj) {
  JsonWriter w;
  append_json(w, obj);
  return w.str();
}

}  // namespace

std::string to_json(const Spectrum& s) { return wrap(s); }
std::string to_json(const Coloring& c) { return wrap(c); }
std::string to_json(const ChromaticResult& r) { return wrap(r); }
std::string to_json(const CountReport& r) { return wrap(r); }
std::string to_json(const MixingReport& r) { return wrap(r); }

}  // namespace singraph
