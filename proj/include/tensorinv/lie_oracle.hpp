#pragma once

#include "tensorinv/dimensions.hpp"

namespace tensorinv {

inline constexpr long kDefaultOracleLimit = 4096;
/// Environment variable overriding the tensor-space size cap of the oracle.
inline constexpr const char* kOracleLimitEnv = "TENSORINV_ORACLE_LIMIT";

/// The cap from the environment, or kDefaultOracleLimit if unset or unparsable.
long oracle_limit_from_env();

/// Dimension of the invariant subspace of the tensor space, computed as the
/// joint kernel of the Lie algebra action (split bases, exact rational
/// elimination restricted to the zero-weight space). For O the fixed space of
/// a determinant -1 isometry is intersected in as well.
/// Throws SizeLimitError when (dim V)^(tensor order) exceeds `limit`.
BigInt lie_invariant_dim(const InvariantQuery& query, long limit = kDefaultOracleLimit);

}  // namespace tensorinv
