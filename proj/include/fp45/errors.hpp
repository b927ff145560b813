#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fp45 {

// Every failure mode the library reports deliberately. Kinds are part of the
// public contract: callers (CLI, batch runner, tests) switch on them.
enum class ErrorKind {
    MultiEdge,              // duplicate edge between the same pair of vertices
    Loop,                   // self-loop
    NonPlanar,              // no genus-0 embedding / rotation fails Euler check
    InconsistentRotation,   // rotation lists disagree with the edge set
    NotConnected,           // operation requires a connected graph
    NotATriangle,           // face-local query on a non-3-face
    NotInClass,             // graph has a 4-cycle or 5-cycle (or is non-planar)
    PartialAssignment,      // total verification called on a partial partition
    TooLarge,               // instance exceeds a documented solver/format cap
    ParseError,             // malformed input stream (offset says where)
    RoleBindingFailure,     // witness lacks a role the caller asked for
    NoTemplateApplied,      // no extension template produced a valid partition
    InternalInconsistency,  // a proved-impossible situation was observed
};

inline const char* to_string(ErrorKind k) {
    switch (k) {
        case ErrorKind::MultiEdge: return "MultiEdge";
        case ErrorKind::Loop: return "Loop";
        case ErrorKind::NonPlanar: return "NonPlanar";
        case ErrorKind::InconsistentRotation: return "InconsistentRotation";
        case ErrorKind::NotConnected: return "NotConnected";
        case ErrorKind::NotATriangle: return "NotATriangle";
        case ErrorKind::NotInClass: return "NotInClass";
        case ErrorKind::PartialAssignment: return "PartialAssignment";
        case ErrorKind::TooLarge: return "TooLarge";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::RoleBindingFailure: return "RoleBindingFailure";
        case ErrorKind::NoTemplateApplied: return "NoTemplateApplied";
        case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message),
          kind_(kind) {}

    // ParseError variant carrying the byte offset of the offending input.
    Error(ErrorKind kind, std::string message, std::size_t offset)
        : std::runtime_error(std::string(to_string(kind)) + " at byte " +
                             std::to_string(offset) + ": " + message),
          kind_(kind),
          offset_(offset) {}

    ErrorKind kind() const noexcept { return kind_; }
    std::size_t offset() const noexcept { return offset_; }

private:
    ErrorKind kind_;
    std::size_t offset_ = 0;
};

}  // namespace fp45
