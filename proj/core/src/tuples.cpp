#include "dtuple/tuples.hpp"

#include <algorithm>

#include <json.hpp>

namespace dtuple {

VerifyReport verify(const Int& n, std::vector<Int> elements) {
    if (n == 0) throw input_error("verify: n must be nonzero");
    if (elements.empty()) throw input_error("verify: element list is empty");
    for (const Int& e : elements) {
        if (e < 1) throw input_error("verify: elements must be positive");
    }
    std::sort(elements.begin(), elements.end());
    if (std::adjacent_find(elements.begin(), elements.end()) != elements.end())
        throw input_error("verify: duplicate element");

    VerifyReport report;
    report.tuple = DTuple{n, std::move(elements)};
    const auto& elems = report.tuple.elements;
    report.valid = true;
    for (std::size_t i = 0; i + 1 < elems.size(); ++i) {
        for (std::size_t j = i + 1; j < elems.size(); ++j) {
            if (auto root = square_witness(elems[i] * elems[j] + n)) {
                report.witnesses.push_back({i, j, *root});
            } else if (report.valid) {
                report.valid = false;
                report.first_failure = {i, j};
            }
        }
    }
    return report;
}

std::optional<Int> compatible(const Int& a, const Int& b, const Int& n) {
    if (a < 1 || b < 1) throw input_error("compatible: elements must be positive");
    if (a == b) throw input_error("compatible: elements must be distinct");
    if (n == 0) throw input_error("compatible: n must be nonzero");
    return square_witness(a * b + n);
}

PairExtension pair_regular_extension(const Int& a, const Int& c, const Int& n) {
    if (a < 1 || c < 1) throw input_error("pair_regular_extension: elements must be positive");
    if (!(a < c)) throw input_error("pair_regular_extension: requires a < c");
    if (n == 0) throw input_error("pair_regular_extension: n must be nonzero");
    auto s = square_witness(a * c + n);
    if (!s) throw input_error("pair_regular_extension: pair is not compatible (ac + n not a square)");
    PairExtension ext;
    ext.d = a + c + 2 * *s;
    ext.root_a = a + *s;
    ext.root_c = c + *s;
    return ext;
}

std::string to_json_string(const DTuple& t) {
    // Composed by hand so arbitrarily large integers serialize exactly.
    std::string out = "{\"n\":" + t.n.get_str() + ",\"elements\":[";
    for (std::size_t i = 0; i < t.elements.size(); ++i) {
        if (i) out += ',';
        out += t.elements[i].get_str();
    }
    out += "]}";
    return out;
}

DTuple dtuple_from_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw input_error(std::string("dtuple_from_json: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("elements") ||
        !doc["n"].is_number_integer() || !doc["elements"].is_array())
        throw input_error("dtuple_from_json: expected {\"n\": int, \"elements\": [int,...]}");
    DTuple t;
    t.n = Int(doc["n"].get<long>());
    for (const auto& e : doc["elements"]) {
        if (!e.is_number_integer())
            throw input_error("dtuple_from_json: elements must be integers");
        t.elements.emplace_back(e.get<long>());
    }
    return t;
}

}  // namespace dtuple
