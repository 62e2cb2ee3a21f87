#include <array>
#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>

#include "cviso/errors.hpp"
#include "cviso/fock.hpp"

namespace cviso {

namespace {

static_assert(std::endian::native == std::endian::little,
              "binary Fock fixtures assume a little-endian host");

void put_u64(std::ostream& out, std::uint64_t v) {
  out.write(reinterpret_cast<const char*>(&v), sizeof v);
}

std::uint64_t get_u64(std::istream& in) {
  std::uint64_t v = 0;
  in.read(reinterpret_cast<char*>(&v), sizeof v);
  return v;
}

}  // namespace

void write_fock_binary(const FockOperator& op, std::ostream& out) {
  put_u64(out, op.cutoff());
  put_u64(out, FockOperator::n_modes);
  const auto& m = op.entries();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const std::array<double, 2> pair = {m(i, j).real(), m(i, j).imag()};
      out.write(reinterpret_cast<const char*>(pair.data()), sizeof pair);
    }
  }
  if (!out) throw std::ios_base::failure("failed writing Fock operator");
}

FockOperator read_fock_binary(std::istream& in) {
  const std::uint64_t cutoff = get_u64(in);
  const std::uint64_t n_modes = get_u64(in);
  if (!in) throw std::ios_base::failure("truncated Fock operator header");
  if (n_modes != FockOperator::n_modes) {
    throw DimensionError("Fock fixture has " + std::to_string(n_modes) + " modes, expected 2");
  }
  if (cutoff == 0 || cutoff > 4096) {
    throw DimensionError("Fock fixture has implausible cutoff " + std::to_string(cutoff));
  }
  FockOperator op = FockOperator::zero(cutoff);
  auto& m = op.entries();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      std::array<double, 2> pair{};
      in.read(reinterpret_cast<char*>(pair.data()), sizeof pair);
      m(i, j) = complex(pair[0], pair[1]);
    }
  }
  if (!in) throw std::ios_base::failure("truncated Fock operator payload");
  return op;
}

void save_fock_binary(const FockOperator& op, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::ios_base::failure("cannot open " + path + " for writing");
  write_fock_binary(op, out);
}

FockOperator load_fock_binary(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::ios_base::failure("cannot open " + path + " for reading");
  return read_fock_binary(in);
}

}  // namespace cviso
