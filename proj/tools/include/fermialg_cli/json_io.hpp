// Copyright 2026 The fermialg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FERMIALG_CLI_JSON_IO_HPP
#define FERMIALG_CLI_JSON_IO_HPP

#include <filesystem>
#include <string>

#include "fermialg/errors.hpp"
#include "fermialg/lie.hpp"
#include "fermialg/sparse_operator.hpp"
#include "fermialg/spectral.hpp"
#include "fermialg/tangle.hpp"
#include "json.hpp"

namespace fermialg::cli {

using Json = nlohmann::ordered_json;

/// A file could not be read or written.
struct IoError : Error {
    using Error::Error;
};

/// Integral values become JSON integers; -0.0 becomes 0.
Json number(double x);
Json complex_pair(Complex z);

Json to_json(const SparseOperator& op);
Json to_json(const DenseVector& psi);
Json to_json(const SpectrumResult& spectrum);
Json to_json(const LieReport& report);
Json to_json(const TangleResult& result);

/// Throws ParseError on schema violations.
DenseVector state_from_json(const Json& j);
SparseOperator operator_from_json(const Json& j);

/// Compact serialization with a trailing newline.
std::string dump(const Json& j);

Json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace fermialg::cli

#endif
