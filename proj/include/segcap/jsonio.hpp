#pragma once

#include <Eigen/Dense>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace segcap {

// Prints doubles with 17 significant digits: enough to round-trip, and the
// same bytes on every run for the same bits.
std::string format_double(double v);

// Minimal JSON value with insertion-ordered objects, so reports serialize
// byte-identically.  Output only; parsing is delegated to the vendored
// library (see read_endpoints_file).
class JsonNode {
public:
    static JsonNode object();
    static JsonNode array();
    static JsonNode str(std::string s);
    static JsonNode num(double v);
    static JsonNode integer(long long v);
    static JsonNode boolean(bool v);

    JsonNode& set(const std::string& key, JsonNode v); // object insert
    JsonNode& push(JsonNode v);                        // array append

    static JsonNode num_array(const std::vector<double>& v);
    static JsonNode num_array(const Eigen::VectorXd& v);
    static JsonNode int_array(const std::vector<int>& v);
    static JsonNode num_matrix(const Eigen::MatrixXd& m);

    std::string dump(int indent = 2) const;

private:
    struct ObjectTag {};
    struct ArrayTag {};
    using Object = std::vector<std::pair<std::string, JsonNode>>;
    using Array = std::vector<JsonNode>;
    std::variant<std::monostate, Object, Array, std::string, double, long long,
                 bool>
        v_;
    void write(std::string& out, int indent, int depth) const;
};

// Parses {"endpoints": [numbers...]} with the vendored JSON library.
std::vector<double> read_endpoints_file(const std::string& path);

} // namespace segcap
