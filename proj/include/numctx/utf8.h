// Copyright 2026 The numctx Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NUMCTX_UTF8_H_
#define NUMCTX_UTF8_H_

#include <string>
#include <string_view>

namespace numctx::utf8 {

// Throws ParseError on malformed input (overlongs, surrogates, truncation).
std::u32string Decode(std::string_view bytes);

std::string Encode(std::u32string_view text);
std::string Encode(char32_t c);

// ASCII-only lowering; other scalars pass through unchanged.
std::u32string Lower(std::u32string_view text);

bool IsSpace(char32_t c);

}  // namespace numctx::utf8

#endif  // NUMCTX_UTF8_H_
