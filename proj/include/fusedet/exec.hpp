#ifndef FUSEDET_EXEC_HPP
#define FUSEDET_EXEC_HPP

namespace fusedet {

/// Execution policy for the data-parallel kernels. Every kernel produces
/// bit-identical results under both policies; `serial` is the reference
/// implementation the tests compare against.
enum class Exec {
  serial,
  parallel,
};

}  // namespace fusedet

#endif  // FUSEDET_EXEC_HPP
