class ProxAlgError(Exception):
    """Base exception for proxalg"""
    pass

class SpaceError(ProxAlgError):
    """Error building or querying a described space"""
    pass

class MissingPoint(SpaceError):
    """A grid cell has no description"""
    pass

class DuplicatePoint(SpaceError):
    """A grid cell was described more than once"""
    pass

class LengthMismatch(SpaceError):
    """A feature vector does not have the space's probe count"""
    pass

class PointOutOfRange(SpaceError):
    """A point does not lie on the space's grid"""
    pass

class InvalidDescription(SpaceError):
    """A feature vector component is not an integer"""
    pass

class SpaceMismatch(SpaceError):
    """Regions from different spaces were combined"""
    pass

class OperationError(ProxAlgError):
    """Error in binary operation or structure analysis"""
    pass

class OpDomainError(OperationError):
    """A binary operation is undefined for a pair of points"""

    def __init__(self, message: str, pair: tuple | None = None):
        super().__init__(message)
        self.pair = pair

class NotSubset(OperationError):
    """Candidate subgroup is not contained in the group"""
    pass

class GNotGroup(OperationError):
    """Region is not a descriptive approximately group"""
    pass

class AuditError(ProxAlgError):
    """Error while auditing claims"""
    pass

class SpaceTooLarge(AuditError):
    """Space has too many points for exhaustive subset enumeration"""
    pass

class ParseError(ProxAlgError):
    """Malformed input file or argument"""

    def __init__(self, message: str, line: int | None = None, source: str = "<input>"):
        self.line = line
        self.source = source
        location = f"{source}:{line}" if line is not None else source
        super().__init__(f"{location}: {message}")

class ConfigurationError(ProxAlgError):
    """Configuration or environment error"""
    pass

class PipelineError(ProxAlgError):
    """Error in pipeline execution"""
    pass

class ProcessorError(PipelineError):
    """Error during processor execution"""
    pass
