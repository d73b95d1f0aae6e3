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

#include "fermialg_cli/json_io.hpp"

#include <bit>
#include <cmath>
#include <fstream>
#include <sstream>

namespace fermialg::cli {

Json number(double x) {
    if (x == 0.0) {
        return 0;
    }
    if (std::isfinite(x) && x == std::trunc(x) && std::abs(x) < 9007199254740992.0) {
        return static_cast<std::int64_t>(x);
    }
    return x;
}

Json complex_pair(Complex z) {
    return Json::array({number(z.real()), number(z.imag())});
}

Json to_json(const SparseOperator& op) {
    Json entries = Json::array();
    for (const Entry& e : op.entries()) {
        entries.push_back(Json::array({e.row, e.col, number(e.value.real()), number(e.value.imag())}));
    }
    Json j;
    j["dim"] = op.dim();
    j["entries"] = std::move(entries);
    return j;
}

Json to_json(const DenseVector& psi) {
    Json amplitudes = Json::array();
    for (Complex z : psi.amplitudes) {
        amplitudes.push_back(complex_pair(z));
    }
    Json j;
    j["dim"] = psi.dim();
    j["amplitudes"] = std::move(amplitudes);
    return j;
}

Json to_json(const SpectrumResult& spectrum) {
    Json spaces = Json::array();
    for (const Eigenspace& space : spectrum.spaces) {
        Json vectors = Json::array();
        for (const DenseVector& v : space.basis) {
            vectors.push_back(to_json(v)["amplitudes"]);
        }
        Json s;
        s["value"] = number(space.value);
        s["multiplicity"] = space.multiplicity();
        s["vectors"] = std::move(vectors);
        spaces.push_back(std::move(s));
    }
    Json j;
    j["dim"] = spectrum.dim;
    j["provenance"] = spectrum.provenance == SpectrumProvenance::analytic ? "analytic" : "numeric";
    j["eigenspaces"] = std::move(spaces);
    return j;
}

Json to_json(const LieReport& report) {
    Json residuals = Json::object();
    for (const auto& [name, value] : report.residuals) {
        residuals[name] = number(value);
    }
    Json j;
    j["dimension"] = report.dimension;
    j["semisimple"] = report.semisimple;
    j["signature"] = Json::array({report.signature.positive, report.signature.negative, report.signature.zero});
    j["center_dim"] = report.center_dim;
    j["tag"] = to_string(report.tag);
    j["residuals"] = std::move(residuals);
    return j;
}

Json to_json(const TangleResult& result) {
    Json j;
    j["n"] = result.n;
    j["tangle"] = number(result.value);
    j["method"] = result.method == TangleMethod::direct ? "direct" : "factorized";
    return j;
}

namespace {

double real_field(const Json& x, const char* what) {
    if (!x.is_number()) {
        throw ParseError(std::string("expected a number in ") + what);
    }
    return x.get<double>();
}

std::size_t dim_field(const Json& j) {
    if (!j.is_object() || !j.contains("dim") || !j["dim"].is_number_unsigned()) {
        throw ParseError("missing or invalid \"dim\"");
    }
    const auto dim = j["dim"].get<std::uint64_t>();
    if (dim == 0 || !std::has_single_bit(dim)) {
        throw ParseError("\"dim\" must be a power of two");
    }
    return dim;
}

}  // namespace

DenseVector state_from_json(const Json& j) {
    const std::size_t dim = dim_field(j);
    if (!j.contains("amplitudes") || !j["amplitudes"].is_array() || j["amplitudes"].size() != dim) {
        throw ParseError("\"amplitudes\" must be an array of length dim");
    }
    DenseVector psi(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        const Json& a = j["amplitudes"][i];
        if (!a.is_array() || a.size() != 2) {
            throw ParseError("amplitudes are [re, im] pairs");
        }
        psi[i] = Complex{real_field(a[0], "amplitude"), real_field(a[1], "amplitude")};
    }
    return psi;
}

SparseOperator operator_from_json(const Json& j) {
    const std::size_t dim = dim_field(j);
    if (!j.contains("entries") || !j["entries"].is_array()) {
        throw ParseError("missing \"entries\"");
    }
    std::vector<Entry> entries;
    for (const Json& e : j["entries"]) {
        if (!e.is_array() || e.size() != 4 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned()) {
            throw ParseError("entries are [row, col, re, im]");
        }
        const auto row = e[0].get<std::uint64_t>();
        const auto col = e[1].get<std::uint64_t>();
        if (row >= dim || col >= dim) {
            throw ParseError("entry index out of range");
        }
        entries.push_back({static_cast<std::uint32_t>(row), static_cast<std::uint32_t>(col),
                           Complex{real_field(e[2], "entry"), real_field(e[3], "entry")}});
    }
    return SparseOperator(dim, std::move(entries));
}

std::string dump(const Json& j) {
    return j.dump() + "\n";
}

Json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open " + path.string());
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
        return Json::parse(buffer.str());
    } catch (const Json::parse_error& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open " + path.string() + " for writing");
    }
    out << text;
    if (!out.flush()) {
        throw IoError("failed writing " + path.string());
    }
}

}  // namespace fermialg::cli
