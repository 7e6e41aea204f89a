#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "ttskit/workbench/document.hpp"

inline std::string read_document(const std::string& name) {
    std::ifstream in(std::string(TTSKIT_DOCUMENTS_DIR) + "/" + name);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

template <class T>
T load_document(const std::string& name) {
    return std::get<T>(ttskit::workbench::parse(read_document(name)));
}

inline std::vector<long long> W(std::initializer_list<long long> xs) { return xs; }
