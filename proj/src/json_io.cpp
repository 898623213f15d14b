#include "hdl/json_io.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace hdl {

std::string format_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void JsonWriter::elem_prefix() {
    if (pending_key_) {
        pending_key_ = false;
        return;
    }
    if (!first_.empty()) {
        if (!first_.back()) out_ += ',';
        first_.back() = false;
    }
}

JsonWriter& JsonWriter::begin_object() {
    elem_prefix();
    out_ += '{';
    first_.push_back(true);
    return *this;
}

JsonWriter& JsonWriter::end_object() {
    out_ += '}';
    first_.pop_back();
    return *this;
}

JsonWriter& JsonWriter::begin_array() {
    elem_prefix();
    out_ += '[';
    first_.push_back(true);
    return *this;
}

JsonWriter& JsonWriter::end_array() {
    out_ += ']';
    first_.pop_back();
    return *this;
}

namespace {

std::string escape(const std::string& s) {
    std::string r;
    r.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
            case '"': r += "\\\""; break;
            case '\\': r += "\\\\"; break;
            case '\n': r += "\\n"; break;
            case '\t': r += "\\t"; break;
            case '\r': r += "\\r"; break;
            default: r += c;
        }
    }
    return r;
}

} // namespace

JsonWriter& JsonWriter::key(const std::string& k) {
    elem_prefix();
    out_ += '"';
    out_ += escape(k);
    out_ += "\":";
    pending_key_ = true;
    return *this;
}

JsonWriter& JsonWriter::value(double v) {
    elem_prefix();
    out_ += std::isfinite(v) ? format_g17(v) : "null";
    return *this;
}

JsonWriter& JsonWriter::value(int v) { return value(static_cast<long long>(v)); }

JsonWriter& JsonWriter::value(long long v) {
    elem_prefix();
    out_ += std::to_string(v);
    return *this;
}

JsonWriter& JsonWriter::value(bool v) {
    elem_prefix();
    out_ += v ? "true" : "false";
    return *this;
}

JsonWriter& JsonWriter::value(const std::string& s) {
    elem_prefix();
    out_ += '"';
    out_ += escape(s);
    out_ += '"';
    return *this;
}

JsonWriter& JsonWriter::value(const char* s) { return value(std::string(s)); }

JsonWriter& JsonWriter::value(const std::vector<double>& xs) {
    begin_array();
    for (double x : xs) value(x);
    return end_array();
}

SymbolInput parse_symbol_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("symbol JSON: parse error: ") + e.what());
    }
    if (!j.is_object() || !j.contains("kind"))
        throw std::invalid_argument("symbol JSON: expected an object with a \"kind\" field");
    const std::string kind = j["kind"].get<std::string>();
    if (kind == "taylor") {
        if (!j.contains("coeffs") || !j["coeffs"].is_array())
            throw std::invalid_argument("symbol JSON: taylor symbols need a \"coeffs\" array");
        std::vector<cplx> c;
        for (const auto& e : j["coeffs"]) {
            if (!e.is_array() || e.size() != 2)
                throw std::invalid_argument("symbol JSON: coeffs entries must be [re, im] pairs");
            c.emplace_back(e[0].get<double>(), e[1].get<double>());
        }
        return SymbolSeries(std::move(c));
    }
    if (kind == "lacunary") {
        if (!j.contains("c") || !j["c"].is_array())
            throw std::invalid_argument("symbol JSON: lacunary symbols need a \"c\" array");
        std::vector<double> c;
        for (const auto& e : j["c"]) c.push_back(e.get<double>());
        return LacunarySpec::from_values(c);
    }
    throw std::invalid_argument("symbol JSON: kind must be \"taylor\" or \"lacunary\"");
}

SymbolInput read_symbol_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open symbol file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_symbol_json(ss.str());
}

std::string symbol_to_json(const SymbolSeries& s) {
    JsonWriter w;
    w.begin_object().key("kind").value("taylor").key("coeffs").begin_array();
    for (const cplx& c : s.coeffs)
        w.begin_array().value(c.real()).value(c.imag()).end_array();
    w.end_array().end_object();
    return w.str();
}

std::string symbol_to_json(const LacunarySpec& spec) {
    JsonWriter w;
    w.begin_object().key("kind").value("lacunary").key("c").begin_array();
    for (const ScaledReal& c : spec.c) w.value(c.value());
    w.end_array().end_object();
    return w.str();
}

std::string block_to_json(const SymbolSeries& block, int block_index) {
    JsonWriter w;
    w.begin_object().key("kind").value("taylor").key("block_index").value(block_index);
    w.key("coeffs").begin_array();
    for (const cplx& c : block.coeffs) w.begin_array().value(c.real()).value(c.imag()).end_array();
    w.end_array().end_object();
    return w.str();
}

std::string step_to_json(const StepFunction& h) {
    JsonWriter w;
    w.begin_object().key("breakpoints").value(h.bk).key("values").value(h.val).end_object();
    return w.str();
}

StepFunction step_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("step JSON: parse error: ") + e.what());
    }
    std::vector<double> bk = j.at("breakpoints").get<std::vector<double>>();
    std::vector<double> val = j.at("values").get<std::vector<double>>();
    return StepFunction(std::move(bk), std::move(val));
}

} // namespace hdl
