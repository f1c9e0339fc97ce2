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

#include "hermcodec/text_io.hpp"

#include <istream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace hermcodec {

CodewordMatrix parse_codeword(const Field& field, std::istream& in) {
    const int q = field.q();
    std::vector<Elem> flat;
    std::string line;
    int rows = 0;
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        std::string tok;
        int count = 0;
        while (ls >> tok) {
            flat.push_back(parse_token(field, tok));
            ++count;
        }
        if (count != q * q)
            throw std::invalid_argument("row " + std::to_string(rows) + " has " + std::to_string(count) +
                                        " symbols, expected " + std::to_string(q * q));
        ++rows;
    }
    if (rows != q) throw std::invalid_argument("expected " + std::to_string(q) + " rows, got " + std::to_string(rows));
    return CodewordMatrix(q, std::move(flat));
}

CodewordMatrix parse_codeword(const Field& field, const std::string& text) {
    std::istringstream in(text);
    return parse_codeword(field, in);
}

std::string format_codeword(const Field& field, const CodewordMatrix& c) {
    std::ostringstream os;
    for (int r = 0; r < c.rows(); ++r) {
        for (int j = 0; j < c.columns(); ++j) os << (j ? " " : "") << to_token(field, c.at(r, j));
        os << '\n';
    }
    return os.str();
}

std::string format_codeword_inline(const Field& field, const CodewordMatrix& c) {
    std::ostringstream os;
    for (int r = 0; r < c.rows(); ++r) {
        if (r) os << '/';
        for (int j = 0; j < c.columns(); ++j) os << (j ? " " : "") << to_token(field, c.at(r, j));
    }
    return os.str();
}

}  // namespace hermcodec
