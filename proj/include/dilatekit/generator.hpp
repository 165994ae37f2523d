#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dilatekit/dilation.hpp"
#include "dilatekit/random.hpp"

namespace dilatekit {

enum class ContractionKind { generic, strict, unitary, isometry, coisometry, rank_deficient };

const std::vector<ContractionKind>& all_kinds();
std::string_view kind_name(ContractionKind kind) noexcept;
/// Throws std::invalid_argument listing the accepted names.
ContractionKind parse_kind(std::string_view name);

struct GeneratorSpec {
  std::size_t dim_h = 1;
  std::size_t dim_k = 1;
  ContractionKind kind = ContractionKind::generic;
  std::uint64_t seed = 0;

  /// Throws std::invalid_argument when the dimensions do not suit the kind.
  void validate() const;
};

/// Whether kind admits a dim_h x dim_k matrix.
bool kind_accepts(ContractionKind kind, std::size_t dim_h, std::size_t dim_k) noexcept;

/// Haar-distributed n x n unitary: Gram-Schmidt (with one reorthogonalization
/// pass) on a complex Gaussian matrix, which leaves R with a positive diagonal.
ComplexMatrix haar_unitary(std::size_t n, Xoshiro256& rng);

/// Deterministic in spec. Norm contracts per kind:
///   generic         singular values uniform on [0, 1], top one pinned to 1 on half the seeds
///   strict          singular values uniform on [0, 0.9]
///   unitary         Haar unitary (dim_h = dim_k)
///   isometry        first dim_k columns of a Haar unitary (dim_h ≥ dim_k)
///   coisometry      adjoint of an isometry (dim_h ≤ dim_k)
///   rank_deficient  one singular value 0, one 1, rest uniform (min dim ≥ 2)
Contraction gen_contraction(const GeneratorSpec& spec);

}  // namespace dilatekit
