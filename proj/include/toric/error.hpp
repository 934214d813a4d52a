#pragma once

#include <stdexcept>
#include <string>

namespace toric {

// Typed failures surfaced by library operations. The CLI maps codes to
// exit codes (caps -> 65, everything else input-related -> 2).
enum class Errc {
    NotASource,
    NotAcyclic,
    NotAFilter,
    NotAPermutation,
    NotAQuotientPartition,
    IllDefinedQuotient,
    GraphMismatch,
    VertexSetMismatch,
    UnknownVertex,
    LabelCollision,
    MissingCoordinate,
    CapExceeded,
    BadInput,
    ReconciliationFailure,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

inline const char* errc_name(Errc c) {
    switch (c) {
    case Errc::NotASource: return "NotASource";
    case Errc::NotAcyclic: return "NotAcyclic";
    case Errc::NotAFilter: return "NotAFilter";
    case Errc::NotAPermutation: return "NotAPermutation";
    case Errc::NotAQuotientPartition: return "NotAQuotientPartition";
    case Errc::IllDefinedQuotient: return "IllDefinedQuotient";
    case Errc::GraphMismatch: return "GraphMismatch";
    case Errc::VertexSetMismatch: return "VertexSetMismatch";
    case Errc::UnknownVertex: return "UnknownVertex";
    case Errc::LabelCollision: return "LabelCollision";
    case Errc::MissingCoordinate: return "MissingCoordinate";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::BadInput: return "BadInput";
    case Errc::ReconciliationFailure: return "ReconciliationFailure";
    }
    return "Unknown";
}

[[noreturn]] inline void fail(Errc code, const std::string& what) {
    throw Error(code, what);
}

} // namespace toric
