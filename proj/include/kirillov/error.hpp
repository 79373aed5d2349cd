#pragma once
#include <stdexcept>
#include <string>

namespace kirillov {

/// Base for every error this library raises deliberately.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Mixing elements of distinct prime fields (or F_p with Q) in one operation.
struct FieldMismatch : Error {
    explicit FieldMismatch(const std::string& what) : Error(what) {}
};

/// 1/n! requested in F_p with n >= p; signals nilpotency class outside the
/// supported regime (class must stay below p).
struct FactorialNotInvertible : Error {
    explicit FactorialNotInvertible(const std::string& what) : Error(what) {}
};

/// Operands with incompatible shapes or ambient dimensions.
struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

/// Structure-constant data that fails validation (Jacobi, nilpotency, bounds).
struct InvalidAlgebra : Error {
    explicit InvalidAlgebra(const std::string& what) : Error(what) {}
};

/// Quotient requested by a subspace that is not an ideal.
struct NotAnIdeal : Error {
    explicit NotAnIdeal(const std::string& what) : Error(what) {}
};

struct NotStrictlyUpperTriangular : Error {
    explicit NotStrictlyUpperTriangular(const std::string& what) : Error(what) {}
};

struct NotUnipotent : Error {
    explicit NotUnipotent(const std::string& what) : Error(what) {}
};

/// Exhaustive maximality certification asked for outside the finite small-dim range.
struct ExhaustiveTooLarge : Error {
    explicit ExhaustiveTooLarge(const std::string& what) : Error(what) {}
};

/// A stabilizer/orbit set identity failed; carries the witness element.
struct IdentityViolation : Error {
    explicit IdentityViolation(const std::string& what) : Error(what) {}
};

/// Full enumeration requested on a backend that cannot provide it (e.g. Q).
struct BackendUnsupported : Error {
    explicit BackendUnsupported(const std::string& what) : Error(what) {}
};

/// p^dim exceeds the configured enumeration bound.
struct EnumerationTooLarge : Error {
    explicit EnumerationTooLarge(const std::string& what) : Error(what) {}
};

/// Induction attempted from a vector set that is not multiplicatively closed.
struct NotASubgroup : Error {
    explicit NotASubgroup(const std::string& what) : Error(what) {}
};

/// Class functions built over different group tables combined in one expression.
struct TableMismatch : Error {
    explicit TableMismatch(const std::string& what) : Error(what) {}
};

/// One of the audit clauses failed; message names the clause and the witness.
struct AuditFailure : Error {
    explicit AuditFailure(const std::string& what) : Error(what) {}
};

/// Malformed input files or unparsable scalar literals.
struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

} // namespace kirillov
