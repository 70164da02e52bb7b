#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "singraph/chromatic.hpp"
#include "singraph/counting.hpp"
#include "singraph/graph.hpp"
#include "singraph/spectral.hpp"

namespace singraph {

// Append-only JSON writer with insertion-order keys. Doubles are emitted as
// %.12g literals so identical runs produce byte-identical output; exact
// integers stay integers.
class JsonWriter {
 public:
  JsonWriter& begin_object();
  JsonWriter& end_object();
  JsonWriter& begin_array();
  JsonWriter& end_array();
  JsonWriter& key(const std::string& k);
  JsonWriter& value(double v);
  JsonWriter& value(std::int64_t v);
  JsonWriter& value(int v) { return value(static_cast<std::int64_t>(v)); }
  JsonWriter& value(bool v);
  JsonWriter& value(const std::string& v);
  JsonWriter& value(const char* v) { return value(std::string(v)); }
  JsonWriter& null();
  const std::string& str() const { return out_; }

 private:
  void comma();
  std::string out_;
  std::vector<char> needs_comma_;  // per nesting level
};

std::string json_number(double v);  // %.12g literal
std::string json_escape(const std::string& s);

std::string to_json(const Spectrum& s);
std::string to_json(const Coloring& c);
std::string to_json(const ChromaticResult& r);
std::string to_json(const CountReport& r);
std::string to_json(const MixingReport& r);

void append_json(JsonWriter& w, const Spectrum& s);
void append_json(JsonWriter& w, const Coloring& c);
void append_json(JsonWriter& w, const ChromaticResult& r);
void append_json(JsonWriter& w, const CountReport& r);
void append_json(JsonWriter& w, const MixingReport& r);

}  // namespace singraph
