#pragma once

#include <string>
#include <string_view>

namespace gm {

// Content digest in the form "sha256:<64 hex digits>".
std::string sha256_digest(std::string_view bytes);

}  // namespace gm
