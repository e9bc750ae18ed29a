#include "infopower/documents.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "infopower/errors.hpp"

namespace infopower {

using nlohmann::json;

std::string format_double(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

namespace {

void append_complex(std::string& out, const std::complex<double>& z) {
    out += '[';
    out += format_double(z.real());
    out += ',';
    out += format_double(z.imag());
    out += ']';
}

void append_matrix(std::string& out, const ComplexMatrix& m) {
    out += '[';
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        if (r) out += ',';
        out += '[';
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            if (c) out += ',';
            append_complex(out, m(r, c));
        }
        out += ']';
    }
    out += ']';
}

void append_vector(std::string& out, const ComplexVector& v) {
    out += '[';
    for (Eigen::Index k = 0; k < v.size(); ++k) {
        if (k) out += ',';
        append_complex(out, v(k));
    }
    out += ']';
}

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
}

std::complex<double> complex_from(const json& pair) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number())
        throw ParseError("complex entries must be [re, im] number pairs");
    return {pair[0].get<double>(), pair[1].get<double>()};
}

ComplexMatrix matrix_from(const json& rows, Eigen::Index dim) {
    if (!rows.is_array() || static_cast<Eigen::Index>(rows.size()) != dim)
        throw ParseError("matrix must have 'dim' rows");
    ComplexMatrix m(dim, dim);
    for (Eigen::Index r = 0; r < dim; ++r) {
        const json& row = rows[static_cast<std::size_t>(r)];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != dim)
            throw ParseError("matrix rows must have 'dim' entries");
        for (Eigen::Index c = 0; c < dim; ++c)
            m(r, c) = complex_from(row[static_cast<std::size_t>(c)]);
    }
    return m;
}

ComplexVector vector_from(const json& entries, Eigen::Index dim) {
    if (!entries.is_array() || static_cast<Eigen::Index>(entries.size()) != dim)
        throw ParseError("vector must have 'dim' entries");
    ComplexVector v(dim);
    for (Eigen::Index k = 0; k < dim; ++k)
        v(k) = complex_from(entries[static_cast<std::size_t>(k)]);
    return v;
}

Eigen::Index dim_from(const json& doc) {
    if (!doc.is_object() || !doc.contains("dim") || !doc["dim"].is_number_integer())
        throw ParseError("document must carry an integer 'dim'");
    const auto dim = doc["dim"].get<Eigen::Index>();
    if (dim < 1) throw ParseError("'dim' must be positive");
    return dim;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path.string());
    out << text;
}

}  // namespace

std::string povm_to_json(const Povm& povm, const std::string& name) {
    std::string out = "{\n  \"type\": \"povm\",\n";
    if (!name.empty()) out += "  \"name\": " + json(name).dump() + ",\n";
    out += "  \"dim\": " + std::to_string(povm.dim()) + ",\n";
    out += "  \"tolerance\": " + format_double(kDefaultTol) + ",\n";
    out += "  \"elements\": [\n";
    for (std::size_t j = 0; j < povm.size(); ++j) {
        out += "    ";
        append_matrix(out, povm.element(j));
        if (j + 1 < povm.size()) out += ',';
        out += '\n';
    }
    out += "  ]\n}\n";
    return out;
}

void write_povm_document(const std::filesystem::path& path, const Povm& povm,
                         const std::string& name) {
    write_file(path, povm_to_json(povm, name));
}

Povm povm_from_json(const std::string& text) {
    const json doc = parse_json(text);
    const Eigen::Index dim = dim_from(doc);
    if (!doc.contains("elements") || !doc["elements"].is_array() || doc["elements"].empty())
        throw ParseError("POVM document needs a nonempty 'elements' array");
    double tol = kDefaultTol;
    if (doc.contains("tolerance")) {
        if (!doc["tolerance"].is_number()) throw ParseError("'tolerance' must be a number");
        tol = doc["tolerance"].get<double>();
    }
    std::vector<ComplexMatrix> elements;
    elements.reserve(doc["elements"].size());
    for (const json& rows : doc["elements"]) elements.push_back(matrix_from(rows, dim));
    return validate_povm(std::move(elements), tol);
}

Povm read_povm_document(const std::filesystem::path& path) {
    return povm_from_json(read_file(path));
}

std::string ensemble_to_json(const PureEnsemble& ensemble) {
    std::string out = "{\n  \"type\": \"ensemble\",\n";
    out += "  \"dim\": " + std::to_string(ensemble.dim()) + ",\n";
    out += "  \"states\": [\n";
    for (std::size_t i = 0; i < ensemble.size(); ++i) {
        out += "    {\"prior\": " + format_double(ensemble.weight(i)) + ", \"vector\": ";
        append_vector(out, ensemble.normalized_state(i));
        out += '}';
        if (i + 1 < ensemble.size()) out += ',';
        out += '\n';
    }
    out += "  ]\n}\n";
    return out;
}

std::string ensemble_to_json(const Ensemble& ensemble) {
    std::string out = "{\n  \"type\": \"ensemble\",\n";
    out += "  \"dim\": " + std::to_string(ensemble.dim()) + ",\n";
    out += "  \"states\": [\n";
    for (std::size_t i = 0; i < ensemble.size(); ++i) {
        out += "    {\"prior\": " + format_double(ensemble.prior(i)) + ", \"matrix\": ";
        append_matrix(out, ensemble.state(i).matrix());
        out += '}';
        if (i + 1 < ensemble.size()) out += ',';
        out += '\n';
    }
    out += "  ]\n}\n";
    return out;
}

void write_ensemble_document(const std::filesystem::path& path, const PureEnsemble& ensemble) {
    write_file(path, ensemble_to_json(ensemble));
}

void write_ensemble_document(const std::filesystem::path& path, const Ensemble& ensemble) {
    write_file(path, ensemble_to_json(ensemble));
}

namespace {

const json& states_array(const json& doc) {
    if (!doc.contains("states") || !doc["states"].is_array() || doc["states"].empty())
        throw ParseError("ensemble document needs a nonempty 'states' array");
    return doc["states"];
}

double prior_from(const json& state) {
    if (!state.is_object() || !state.contains("prior") || !state["prior"].is_number())
        throw ParseError("each state needs a numeric 'prior'");
    return state["prior"].get<double>();
}

}  // namespace

Ensemble ensemble_from_json(const std::string& text) {
    const json doc = parse_json(text);
    const Eigen::Index dim = dim_from(doc);
    std::vector<std::pair<double, DensityMatrix>> items;
    for (const json& state : states_array(doc)) {
        const double prior = prior_from(state);
        if (state.contains("vector"))
            items.emplace_back(prior, DensityMatrix::pure(vector_from(state["vector"], dim)));
        else if (state.contains("matrix"))
            items.emplace_back(prior, DensityMatrix(matrix_from(state["matrix"], dim)));
        else
            throw ParseError("each state needs a 'vector' or 'matrix' entry");
    }
    return validate_ensemble(std::move(items));
}

Ensemble read_ensemble_document(const std::filesystem::path& path) {
    return ensemble_from_json(read_file(path));
}

PureEnsemble pure_ensemble_from_json(const std::string& text) {
    const json doc = parse_json(text);
    const Eigen::Index dim = dim_from(doc);
    std::vector<ComplexVector> states;
    std::vector<double> priors;
    for (const json& state : states_array(doc)) {
        if (!state.contains("vector"))
            throw ParseError("pure ensemble documents must use 'vector' states");
        priors.push_back(prior_from(state));
        states.push_back(vector_from(state["vector"], dim));
    }
    return PureEnsemble::from_states(states, priors);
}

PureEnsemble read_pure_ensemble_document(const std::filesystem::path& path) {
    return pure_ensemble_from_json(read_file(path));
}

DensityMatrix read_state_document(const std::filesystem::path& path) {
    const json doc = parse_json(read_file(path));
    const Eigen::Index dim = dim_from(doc);
    if (!doc.contains("matrix")) throw ParseError("state document needs a 'matrix' entry");
    return DensityMatrix(matrix_from(doc["matrix"], dim));
}

}  // namespace infopower
