#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#ifndef HODGE_FIXTURE_DIR
#error "HODGE_FIXTURE_DIR must be defined by the build"
#endif

namespace testfs {

inline std::string fixture_path(const std::string& relative) {
    return std::string(HODGE_FIXTURE_DIR) + "/" + relative;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

inline std::string read_fixture(const std::string& relative) { return read_file(fixture_path(relative)); }

}  // namespace testfs
