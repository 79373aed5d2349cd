#pragma once
#include <cstdint>
#include <string>

namespace kirillov {

#ifndef KIRILLOV_CORPUS_DIR
#define KIRILLOV_CORPUS_DIR "corpus"
#endif

/// Knobs shared by the CLI and the verification suite.  The seed fully
/// determines every randomized check, so equal configs give byte-identical
/// reports.
struct Config {
    std::uint64_t seed = 24601;
    std::size_t samples = 100;
    std::uint64_t enumeration_bound = 625;
    std::string corpus_dir = KIRILLOV_CORPUS_DIR;
};

} // namespace kirillov
