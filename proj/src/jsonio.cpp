#include "segcap/jsonio.hpp"

#include <cstdio>
#include <fstream>

#include "json.hpp"
#include "segcap/errors.hpp"

namespace segcap {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

JsonNode JsonNode::object() {
    JsonNode n;
    n.v_ = Object{};
    return n;
}
JsonNode JsonNode::array() {
    JsonNode n;
    n.v_ = Array{};
    return n;
}
JsonNode JsonNode::str(std::string s) {
    JsonNode n;
    n.v_ = std::move(s);
    return n;
}
JsonNode JsonNode::num(double v) {
    JsonNode n;
    n.v_ = v;
    return n;
}
JsonNode JsonNode::integer(long long v) {
    JsonNode n;
    n.v_ = v;
    return n;
}
JsonNode JsonNode::boolean(bool v) {
    JsonNode n;
    n.v_ = v;
    return n;
}

JsonNode& JsonNode::set(const std::string& key, JsonNode v) {
    auto* obj = std::get_if<Object>(&v_);
    if (!obj) throw Error(errc::bad_arguments, "set() on a non-object node");
    obj->emplace_back(key, std::move(v));
    return *this;
}

JsonNode& JsonNode::push(JsonNode v) {
    auto* arr = std::get_if<Array>(&v_);
    if (!arr) throw Error(errc::bad_arguments, "push() on a non-array node");
    arr->push_back(std::move(v));
    return *this;
}

JsonNode JsonNode::num_array(const std::vector<double>& v) {
    JsonNode a = array();
    for (double x : v) a.push(num(x));
    return a;
}
JsonNode JsonNode::num_array(const Eigen::VectorXd& v) {
    JsonNode a = array();
    for (Eigen::Index i = 0; i < v.size(); ++i) a.push(num(v[i]));
    return a;
}
JsonNode JsonNode::int_array(const std::vector<int>& v) {
    JsonNode a = array();
    for (int x : v) a.push(integer(x));
    return a;
}
JsonNode JsonNode::num_matrix(const Eigen::MatrixXd& m) {
    JsonNode a = array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        JsonNode row = array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push(num(m(i, j)));
        a.push(std::move(row));
    }
    return a;
}

namespace {
void write_escaped(std::string& out, const std::string& s) {
    out += '"';
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default: out += c;
        }
    }
    out += '"';
}
} // namespace

void JsonNode::write(std::string& out, int indent, int depth) const {
    const std::string pad(static_cast<std::size_t>(indent) * depth, ' ');
    const std::string pad_in(static_cast<std::size_t>(indent) * (depth + 1), ' ');
    if (const auto* obj = std::get_if<Object>(&v_)) {
        if (obj->empty()) {
            out += "{}";
            return;
        }
        out += "{\n";
        for (std::size_t i = 0; i < obj->size(); ++i) {
            out += pad_in;
            write_escaped(out, (*obj)[i].first);
            out += ": ";
            (*obj)[i].second.write(out, indent, depth + 1);
            if (i + 1 < obj->size()) out += ',';
            out += '\n';
        }
        out += pad + "}";
    } else if (const auto* arr = std::get_if<Array>(&v_)) {
        if (arr->empty()) {
            out += "[]";
            return;
        }
        out += "[\n";
        for (std::size_t i = 0; i < arr->size(); ++i) {
            out += pad_in;
            (*arr)[i].write(out, indent, depth + 1);
            if (i + 1 < arr->size()) out += ',';
            out += '\n';
        }
        out += pad + "]";
    } else if (const auto* s = std::get_if<std::string>(&v_)) {
        write_escaped(out, *s);
    } else if (const auto* d = std::get_if<double>(&v_)) {
        out += format_double(*d);
    } else if (const auto* i = std::get_if<long long>(&v_)) {
        out += std::to_string(*i);
    } else if (const auto* b = std::get_if<bool>(&v_)) {
        out += *b ? "true" : "false";
    } else {
        out += "null";
    }
}

std::string JsonNode::dump(int indent) const {
    std::string out;
    write(out, indent, 0);
    out += '\n';
    return out;
}

std::vector<double> read_endpoints_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(errc::io_error, "cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw Error(errc::bad_input_json, e.what());
    }
    if (!j.is_object() || !j.contains("endpoints") ||
        !j["endpoints"].is_array())
        throw Error(errc::bad_input_json,
                    "expected an object with an \"endpoints\" array");
    std::vector<double> e;
    for (const auto& v : j["endpoints"]) {
        if (!v.is_number())
            throw Error(errc::bad_input_json, "endpoints must be numbers");
        e.push_back(v.get<double>());
    }
    return e;
}

} // namespace segcap
