/*
 * Copyright 2026 The supjcir authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

//! Model file format: a flat key-value document, one `section.key = value`
//! per line, floats as shortest round-trip decimals, `#` comments ignored.
//! Deserialize -> serialize round-trips byte-identically.

#ifndef SUPJCIR_MODEL_IO_HPP
#define SUPJCIR_MODEL_IO_HPP

#include <optional>
#include <string>

#include "supjcir/process.hpp"

namespace supjcir::model_io {

struct Provenance {
    std::optional<double> y;
    std::optional<double> error_metric;
    std::optional<std::string> fingerprint;
};

struct ModelFile {
    process::SupJcirModel model;
    Provenance provenance;
};

//! Shortest decimal that parses back to exactly the same double.
std::string format_double(double v);

std::string serialize_model(const process::SupJcirModel& model, const Provenance& prov = {});

//! Throws ParseError on malformed input, ParameterOutOfRange when a parsed
//! model violates an invariant.
ModelFile parse_model(const std::string& text);

ModelFile load_model(const std::string& path);
void save_model(const std::string& path, const process::SupJcirModel& model,
                const Provenance& prov = {});

//! FNV-1a 64-bit content hash, as fixed-width hex.
std::string fingerprint(const std::string& bytes);

} // namespace supjcir::model_io

#endif
