#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "fibsteg/embed.hpp"

namespace fibsteg {

struct ExperimentConfig {
  std::filesystem::path cover_dir;
  std::filesystem::path secret_dir;
  std::vector<Method> methods{Method::kBinaryLsb, Method::kFibonacciLsb, Method::kMapping};
  std::vector<unsigned> block_sizes{4, 8, 16};
  // Block size used for the "+sisr" payloads in the quality and detector
  // tables.
  unsigned embed_block_size = 4;
  std::uint64_t seed = 0;
  std::filesystem::path out_dir;
};

struct ExperimentOutputs {
  std::filesystem::path reduction_csv;
  std::filesystem::path reduction_summary_csv;
  std::filesystem::path quality_csv;
  std::filesystem::path quality_summary_csv;
  std::filesystem::path detection_csv;
  std::filesystem::path detection_summary_csv;
};

// Checks directories, block sizes and methods. Throws InputError.
void validate(const ExperimentConfig& config);

// PGM files in a directory, sorted by filename.
std::vector<std::filesystem::path> list_pgm(const std::filesystem::path& dir);

// Writes the reduction, quality and detection tables (plus per-method
// summaries) into config.out_dir.
ExperimentOutputs run_experiment(const ExperimentConfig& config);

// Secret image as a raw bit stream: every pixel, d bits, MSB first.
BitStream raw_bits(const GrayImage& img);

}  // namespace fibsteg
