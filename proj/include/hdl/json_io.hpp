#ifndef HDL_JSON_IO_HPP
#define HDL_JSON_IO_HPP

#include "hdl/rearrange.hpp"
#include "hdl/symbols.hpp"

#include <string>
#include <variant>
#include <vector>

namespace hdl {

// Shortest fixed-width float form that round-trips doubles: %.17g.
std::string format_g17(double v);

// Deterministic JSON emitter: insertion order preserved, floats at 17
// significant digits, non-finite values as null.  Reports built with it are
// byte-identical across reruns of the same configuration.
class JsonWriter {
public:
    JsonWriter& begin_object();
    JsonWriter& end_object();
    JsonWriter& begin_array();
    JsonWriter& end_array();
    JsonWriter& key(const std::string& k);
    JsonWriter& value(double v);
    JsonWriter& value(int v);
    JsonWriter& value(long long v);
    JsonWriter& value(bool v);
    JsonWriter& value(const std::string& s);
    JsonWriter& value(const char* s);
    JsonWriter& value(const std::vector<double>& xs);

    const std::string& str() const { return out_; }

private:
    void elem_prefix();
    std::string out_;
    std::vector<bool> first_;
    bool pending_key_ = false;
};

using SymbolInput = std::variant<SymbolSeries, LacunarySpec>;

// {"kind":"taylor","coeffs":[[re,im],...]} | {"kind":"lacunary","c":[...]}
SymbolInput parse_symbol_json(const std::string& text);
SymbolInput read_symbol_file(const std::string& path);
std::string symbol_to_json(const SymbolSeries& s);
std::string symbol_to_json(const LacunarySpec& spec);

// {"breakpoints":[...],"values":[...]}
std::string step_to_json(const StepFunction& h);
StepFunction step_from_json(const std::string& text);

// taylor symbol JSON plus a "block_index" field, for exported dyadic blocks
std::string block_to_json(const SymbolSeries& block, int block_index);

} // namespace hdl

#endif
