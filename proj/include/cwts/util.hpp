#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace cwts {

inline constexpr const char* kVersion = "0.1.0";

// Dense row-major matrix, rows = time, cols = scale throughout the library.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, T fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::vector<T>& data() { return data_; }
  const std::vector<T>& data() const { return data_; }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using ComplexMatrix = Matrix<std::complex<double>>;
using RealMatrix = Matrix<double>;
using MaskMatrix = Matrix<std::uint8_t>;

// Shortest-round-trip decimal formatting (17 significant digits), locale-free.
std::string format_double(double v);
double parse_double(const std::string& s);  // throws InputError on garbage

// splitmix64 finalizer; used to derive independent per-run RNG seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

std::string sha256_hex(const void* data, std::size_t size);
std::string sha256_hex(const std::string& bytes);

// Empirical quantile of v (type-1: k = ceil(level*M)-1 order statistic).
// Mutates v via nth_element.
double quantile(std::vector<double>& v, double level);

std::string read_file(const std::string& path);               // throws InputError
void write_file(const std::string& path, const std::string& bytes);
void write_file(const std::string& path, const std::vector<std::uint8_t>& bytes);

}  // namespace cwts
