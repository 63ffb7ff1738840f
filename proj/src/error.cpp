#include "matreg/error.hpp"

namespace matreg {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::EmptyFamily: return "EmptyFamily";
    case ErrorKind::UnequalCardinality: return "UnequalCardinality";
    case ErrorKind::ExchangeViolation: return "ExchangeViolation";
    case ErrorKind::NotAntichain: return "NotAntichain";
    case ErrorKind::InvalidRank: return "InvalidRank";
    case ErrorKind::EmptySubset: return "EmptySubset";
    case ErrorKind::DependentFace: return "DependentFace";
    case ErrorKind::LoopElement: return "LoopElement";
    case ErrorKind::StarMatroid: return "StarMatroid";
    case ErrorKind::ZeroRank: return "ZeroRank";
    case ErrorKind::NoEdges: return "NoEdges";
    case ErrorKind::Inapplicable: return "Inapplicable";
    case ErrorKind::FaceNotInComplex: return "FaceNotInComplex";
    case ErrorKind::VoidComplex: return "VoidComplex";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::FreeMatroid: return "FreeMatroid";
    case ErrorKind::ZeroIdeal: return "ZeroIdeal";
    case ErrorKind::NegativeSupportNotFace: return "NegativeSupportNotFace";
    case ErrorKind::NoCircuit: return "NoCircuit";
    case ErrorKind::NotCore: return "NotCore";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::BoxTooLarge: return "BoxTooLarge";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownSuite: return "UnknownSuite";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace matreg
