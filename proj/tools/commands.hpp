#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mcsa/bricks.hpp"

namespace mcsa::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitNegative = 1,  // valid input, negative verdict or table mismatch
  kExitUsage = 2,     // usage or parse error
  kExitSemantic = 3,  // structurally invalid input (non-closed span, no identity)
};

enum class Format { kCsv, kJson, kText };

/// Output sink and global flags shared by every subcommand.
struct Context {
  Format format = Format::kText;
  unsigned jobs = 1;
  std::ostream* out = nullptr;
  std::ostream* err = nullptr;
};

/// Centralizer verification in `courter` defaults to on up to this size.
constexpr std::int64_t kDefaultVerifyLimit = 30;

/// One row of the published stack-construction table.
struct StackTableRow {
  std::int64_t n;
  std::int64_t bound;
  StackSpec spec;
  std::int64_t dim;
};

/// Published reference rows for n = 14..28.
const std::vector<StackTableRow>& reference_stack_table();

struct RigidityExpectation {
  const char* pair;
  std::size_t rank;
  std::size_t unknowns;
};

const std::vector<RigidityExpectation>& reference_rigidity_ranks();

/// `input` is a document path or one of the builtin names e, d, d-appendix.
int cmd_verify(const std::string& input, const Context& ctx);

/// `verify` unset means on for n <= kDefaultVerifyLimit.
int cmd_courter(std::int64_t n, std::optional<bool> verify, const std::optional<std::string>& emit, const Context& ctx);

int cmd_bounds(std::int64_t n_min, std::int64_t n_max, const std::vector<std::size_t>& rs, const Context& ctx);

int cmd_first_exceptional(const std::vector<std::size_t>& rs, std::int64_t cap, const Context& ctx);

int cmd_table1(const Context& ctx);

int cmd_rigidity(const Context& ctx);

/// Builtin algebra by name, or nullopt.
std::optional<MatrixAlgebra> builtin_algebra(const std::string& name);

}  // namespace mcsa::cli
