#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <variant>

#include <json.hpp>

#include "ttensor/tensor3.hpp"

namespace ttensor {

class TensorFileError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using AnyTensor = std::variant<Tensor3, ComplexTensor3>;

/// Tensor file: {"dims": [n1, n2, n3], "data": [...]} for real tensors or
/// {"dims": [...], "data_re": [...], "data_im": [...]} for complex ones, data
/// in slice-major layout. Unknown keys are rejected.
AnyTensor tensor_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Tensor3& a);
nlohmann::json to_json(const ComplexTensor3& a);

AnyTensor read_tensor_file(const std::filesystem::path& path);
/// Reads a file that must hold a real tensor.
Tensor3 read_real_tensor_file(const std::filesystem::path& path);
void write_tensor_file(const std::filesystem::path& path, const Tensor3& a);
void write_tensor_file(const std::filesystem::path& path, const ComplexTensor3& a);

}  // namespace ttensor
