#ifndef HOMDS_ERRORS_HPP
#define HOMDS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace homds {

/// Machine-readable failure categories. CLI maps these onto exit codes:
/// TooLarge / BudgetExhausted -> 2 (refused), everything else -> 3.
enum class Err {
    NonPrimeP,
    ReducibleModulus,
    DegreeMismatch,
    FieldTooLarge,
    ZeroToNegativePower,
    DivisionByZero,
    NonSquare,
    RankDeficient,
    IndexOutOfRange,
    ImproperConfig,
    NoMutationExists,
    NotGeneric,
    CompletionFailed,
    DuplicatePoints,
    DimensionMismatch,
    LinearlyDependentFamily,
    ZeroAlphaInLinearizedRS,
    DependentInput,
    NTooSmall,
    NotMdsb1,
    Incompatible,
    BadParams,
    TooFewColumns,
    TooLarge,
    BudgetExhausted,
    MalformedInput,
};

const char* err_name(Err e);

class Error : public std::runtime_error {
  public:
    Error(Err kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    Err kind() const { return kind_; }

  private:
    Err kind_;
};

[[noreturn]] inline void raise(Err kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool cond, Err kind, const std::string& what) {
    if (!cond) raise(kind, what);
}

}  // namespace homds

#endif
