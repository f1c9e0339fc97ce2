/*
 * Copyright 2026 The hermcodec Authors
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

#pragma once

#include <iosfwd>
#include <string>

#include "hermcodec/code.hpp"

namespace hermcodec {

/// q lines of q^2 space-separated tokens (log index or "-"). Blank lines and
/// lines starting with '#' are skipped. Throws std::invalid_argument on
/// malformed input.
CodewordMatrix parse_codeword(const Field& field, std::istream& in);
CodewordMatrix parse_codeword(const Field& field, const std::string& text);

std::string format_codeword(const Field& field, const CodewordMatrix& c);

/// Single-line form used inside ledger and report records: rows joined by '/'.
std::string format_codeword_inline(const Field& field, const CodewordMatrix& c);

}  // namespace hermcodec
