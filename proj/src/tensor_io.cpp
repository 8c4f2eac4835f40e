#include "ttensor/tensor_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace ttensor {

namespace {

Shape read_dims(const nlohmann::json& j) {
    const nlohmann::json& d = j.at("dims");
    if (!d.is_array() || d.size() != 3) throw TensorFileError("dims must be an array of three integers");
    std::size_t v[3];
    for (std::size_t i = 0; i < 3; ++i) {
        if (!d[i].is_number_unsigned() || d[i].get<std::size_t>() == 0) {
            throw TensorFileError("dims must be positive integers");
        }
        v[i] = d[i].get<std::size_t>();
    }
    return {v[0], v[1], v[2]};
}

std::vector<double> read_values(const nlohmann::json& j, const char* key, std::size_t expected) {
    const nlohmann::json& d = j.at(key);
    if (!d.is_array()) throw TensorFileError(std::string(key) + " must be an array");
    if (d.size() != expected) {
        throw TensorFileError(std::string(key) + " has " + std::to_string(d.size()) + " values, expected " +
                              std::to_string(expected));
    }
    std::vector<double> out;
    out.reserve(expected);
    for (const nlohmann::json& v : d) {
        if (!v.is_number()) throw TensorFileError(std::string(key) + " must hold only numbers");
        out.push_back(v.get<double>());
        if (!std::isfinite(out.back())) throw TensorFileError(std::string(key) + " holds a non-finite value");
    }
    return out;
}

nlohmann::json dims_json(const Shape& s) { return nlohmann::json::array({s.n1, s.n2, s.n3}); }

void write_json(const std::filesystem::path& path, const nlohmann::json& j) {
    std::ofstream out(path);
    if (!out) throw TensorFileError("cannot open " + path.string() + " for writing");
    out << j.dump() << '\n';
    if (!out) throw TensorFileError("failed writing " + path.string());
}

}  // namespace

AnyTensor tensor_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw TensorFileError("tensor file must hold a JSON object");
    static const std::set<std::string> known{"dims", "data", "data_re", "data_im"};
    for (const auto& [key, value] : j.items()) {
        if (!known.count(key)) throw TensorFileError("unknown key '" + key + "'");
    }
    if (!j.contains("dims")) throw TensorFileError("missing key 'dims'");
    const Shape s = read_dims(j);
    const bool real = j.contains("data");
    const bool complex = j.contains("data_re") || j.contains("data_im");
    if (real == complex) throw TensorFileError("expected either 'data' or both 'data_re' and 'data_im'");
    if (real) return Tensor3(s.n1, s.n2, s.n3, read_values(j, "data", s.size()));
    if (!j.contains("data_re") || !j.contains("data_im")) {
        throw TensorFileError("complex tensors need both 'data_re' and 'data_im'");
    }
    const std::vector<double> re = read_values(j, "data_re", s.size());
    const std::vector<double> im = read_values(j, "data_im", s.size());
    std::vector<Complex> entries(s.size());
    for (std::size_t i = 0; i < entries.size(); ++i) entries[i] = Complex(re[i], im[i]);
    return ComplexTensor3(s.n1, s.n2, s.n3, std::move(entries));
}

nlohmann::json to_json(const Tensor3& a) {
    nlohmann::json j;
    j["dims"] = dims_json(a.shape());
    j["data"] = std::vector<double>(a.entries().begin(), a.entries().end());
    return j;
}

nlohmann::json to_json(const ComplexTensor3& a) {
    std::vector<double> re, im;
    re.reserve(a.size());
    im.reserve(a.size());
    for (const Complex& z : a.entries()) {
        re.push_back(z.real());
        im.push_back(z.imag());
    }
    nlohmann::json j;
    j["dims"] = dims_json(a.shape());
    j["data_re"] = std::move(re);
    j["data_im"] = std::move(im);
    return j;
}

AnyTensor read_tensor_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw TensorFileError("cannot open " + path.string());
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw TensorFileError(path.string() + ": " + e.what());
    }
    try {
        return tensor_from_json(j);
    } catch (const TensorFileError& e) {
        throw TensorFileError(path.string() + ": " + e.what());
    } catch (const nlohmann::json::exception& e) {
        throw TensorFileError(path.string() + ": " + e.what());
    }
}

Tensor3 read_real_tensor_file(const std::filesystem::path& path) {
    AnyTensor t = read_tensor_file(path);
    if (auto* real = std::get_if<Tensor3>(&t)) return std::move(*real);
    throw TensorFileError(path.string() + ": expected a real tensor");
}

void write_tensor_file(const std::filesystem::path& path, const Tensor3& a) { write_json(path, to_json(a)); }

void write_tensor_file(const std::filesystem::path& path, const ComplexTensor3& a) {
    write_json(path, to_json(a));
}

}  // namespace ttensor
