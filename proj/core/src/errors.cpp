#include "homds/errors.hpp"

namespace homds {

const char* err_name(Err e) {
    switch (e) {
        case Err::NonPrimeP: return "NonPrimeP";
        case Err::ReducibleModulus: return "ReducibleModulus";
        case Err::DegreeMismatch: return "DegreeMismatch";
        case Err::FieldTooLarge: return "FieldTooLarge";
        case Err::ZeroToNegativePower: return "ZeroToNegativePower";
        case Err::DivisionByZero: return "DivisionByZero";
        case Err::NonSquare: return "NonSquare";
        case Err::RankDeficient: return "RankDeficient";
        case Err::IndexOutOfRange: return "IndexOutOfRange";
        case Err::ImproperConfig: return "ImproperConfig";
        case Err::NoMutationExists: return "NoMutationExists";
        case Err::NotGeneric: return "NotGeneric";
        case Err::CompletionFailed: return "CompletionFailed";
        case Err::DuplicatePoints: return "DuplicatePoints";
        case Err::DimensionMismatch: return "DimensionMismatch";
        case Err::LinearlyDependentFamily: return "LinearlyDependentFamily";
        case Err::ZeroAlphaInLinearizedRS: return "ZeroAlphaInLinearizedRS";
        case Err::DependentInput: return "DependentInput";
        case Err::NTooSmall: return "NTooSmall";
        case Err::NotMdsb1: return "NotMdsb1";
        case Err::Incompatible: return "Incompatible";
        case Err::BadParams: return "BadParams";
        case Err::TooFewColumns: return "TooFewColumns";
        case Err::TooLarge: return "TooLarge";
        case Err::BudgetExhausted: return "BudgetExhausted";
        case Err::MalformedInput: return "MalformedInput";
    }
    return "Unknown";
}

}  // namespace homds
