from typing import List, Optional, Any, Dict

INPUT_ERROR = 2
CHECK_FAILURE = 1

class BraidedDoubleException(Exception):
    """Base exception class for braided-double computations"""
    def __init__(
        self,
        message: str,
        exit_code: int = INPUT_ERROR,
        error_code: str = "BRAIDED_DOUBLE_ERROR",
        details: Optional[Dict[str, Any]] = None
    ):
        self.message = message
        self.exit_code = exit_code
        self.error_code = error_code
        self.details = details or {}
        super().__init__(self.message)

    def to_dict(self) -> Dict[str, Any]:
        """Convert exception to dictionary format"""
        return {
            "error": {
                "code": self.error_code,
                "message": self.message,
                "exit_code": self.exit_code,
                "details": self.details
            }
        }

class FieldMismatchError(BraidedDoubleException):
    """Raised when two operands live over different fields"""
    def __init__(self, left: str, right: str, operation: str = ""):
        super().__init__(
            message=f"Field mismatch in {operation or 'operation'}: {left} vs {right}",
            error_code="FIELD_MISMATCH",
            details={"left": left, "right": right, "operation": operation}
        )

class ShapeMismatchError(BraidedDoubleException):
    """Raised when matrix shapes do not compose"""
    def __init__(self, operation: str, left: tuple, right: tuple):
        super().__init__(
            message=f"Shape mismatch in {operation}: {left} vs {right}",
            exit_code=CHECK_FAILURE,
            error_code="SHAPE_MISMATCH",
            details={"operation": operation, "left": list(left), "right": list(right)}
        )

class GroupOverflowError(BraidedDoubleException):
    """Raised when a generated group exceeds the configured order cap"""
    def __init__(self, cap: int):
        super().__init__(
            message=f"Group closure exceeded the cap of {cap} elements",
            error_code="GROUP_OVERFLOW",
            details={"cap": cap}
        )

class MatrixSizeExceededError(BraidedDoubleException):
    """Raised when an assembled operator would exceed the column cap"""
    def __init__(self, columns: int, limit: int, what: str):
        super().__init__(
            message=f"{what} needs {columns} columns, limit is {limit}",
            error_code="MATRIX_SIZE_EXCEEDED",
            details={"columns": columns, "limit": limit, "operator": what}
        )

class TruncationExceededError(BraidedDoubleException):
    """Raised when a word or product leaves the computed truncation"""
    def __init__(self, degree: int, truncation: int):
        super().__init__(
            message=f"Degree {degree} exceeds truncation {truncation}",
            error_code="TRUNCATION_EXCEEDED",
            details={"degree": degree, "truncation": truncation}
        )

class InvalidStructureError(BraidedDoubleException):
    """Raised when a module, grading or quasicoaction fails its axioms"""
    def __init__(self, structure: str, reason: str, witness: Optional[Dict[str, Any]] = None):
        super().__init__(
            message=f"Invalid {structure}: {reason}",
            error_code="INVALID_STRUCTURE",
            details={"structure": structure, "reason": reason, "witness": witness or {}}
        )

class NonEquivariantMapError(BraidedDoubleException):
    """Raised when a subquotient map is not a G-module map"""
    def __init__(self, name: str, element: str):
        super().__init__(
            message=f"Map {name} does not commute with the action of {element}",
            error_code="NON_EQUIVARIANT_MAP",
            details={"map": name, "element": element}
        )

class BraidEquationError(BraidedDoubleException):
    """Raised when a matrix is required to be a braiding but is not"""
    def __init__(self, reason: str = "Psi12 Psi23 Psi12 != Psi23 Psi12 Psi23"):
        super().__init__(
            message=f"Braid equation failed: {reason}",
            error_code="BRAID_EQUATION_FAILED",
            details={"reason": reason}
        )

class CompatibilityError(BraidedDoubleException):
    """Raised when two braidings are not compatible"""
    def __init__(self, first: int, second: int):
        super().__init__(
            message=f"Braidings {first} and {second} are not compatible",
            exit_code=CHECK_FAILURE,
            error_code="COMPATIBILITY_FAILED",
            details={"pair": [first, second]}
        )

class GenericityInstabilityError(BraidedDoubleException):
    """Raised when random specializations disagree on a kernel"""
    def __init__(self, degree: int, dimensions: List[int]):
        super().__init__(
            message=f"Kernels disagree across specializations in degree {degree}",
            exit_code=CHECK_FAILURE,
            error_code="GENERICITY_INSTABILITY",
            details={"degree": degree, "kernel_dimensions": dimensions}
        )

class OracleCapExceededError(BraidedDoubleException):
    """Raised when the permutation-sum oracle is asked for too large a degree"""
    def __init__(self, degree: int, cap: int):
        super().__init__(
            message=f"Oracle degree {degree} exceeds cap {cap}",
            error_code="ORACLE_CAP_EXCEEDED",
            details={"degree": degree, "cap": cap}
        )

class MissingClassParameterError(BraidedDoubleException):
    """Raised when a reflection class has no parameter c"""
    def __init__(self, class_label: str):
        super().__init__(
            message=f"No parameter c given for the reflection class of {class_label}",
            error_code="MISSING_CLASS_PARAMETER",
            details={"class": class_label}
        )

class TriangularityError(BraidedDoubleException):
    """Raised when relation spaces fail to span a triangular ideal"""
    def __init__(self, side: str, degree: int):
        super().__init__(
            message=f"Relations on the {side} side are not triangular in degree {degree}",
            exit_code=CHECK_FAILURE,
            error_code="TRIANGULARITY_VIOLATION",
            details={"side": side, "degree": degree}
        )

class DivisionRemainderError(BraidedDoubleException):
    """Raised when a divided difference leaves a remainder"""
    def __init__(self, element: str, remainder: str):
        super().__init__(
            message=f"Divided difference by the root of {element} is not exact",
            exit_code=CHECK_FAILURE,
            error_code="DIVISION_REMAINDER",
            details={"element": element, "remainder": remainder}
        )

class DegenerateParameterError(BraidedDoubleException):
    """Raised when a parameter makes a construction degenerate"""
    def __init__(self, parameter: str, reason: str):
        super().__init__(
            message=f"Degenerate parameter {parameter}: {reason}",
            exit_code=CHECK_FAILURE,
            error_code="DEGENERATE_PARAMETER",
            details={"parameter": parameter, "reason": reason}
        )

class ConfigurationError(BraidedDoubleException):
    """Raised when there's a configuration error"""
    def __init__(self, parameter: str, reason: str):
        super().__init__(
            message=f"Configuration error: {parameter}",
            error_code="CONFIGURATION_ERROR",
            details={
                "parameter": parameter,
                "reason": reason
            }
        )

class UnknownCommandError(BraidedDoubleException):
    """Raised when the requested command is not registered"""
    def __init__(self, command: str, available: List[str]):
        super().__init__(
            message=f"Unknown command: {command}",
            error_code="UNKNOWN_COMMAND",
            details={"command": command, "available": available}
        )

class ValidationError(BraidedDoubleException):
    """Raised when run configuration validation fails"""
    def __init__(self, errors: List[Dict[str, Any]]):
        super().__init__(
            message="Run configuration validation failed",
            error_code="VALIDATION_ERROR",
            details={"errors": errors}
        )
