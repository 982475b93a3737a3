"""Exception hierarchy for digraph-workbench"""


class WorkbenchError(Exception):
    """Base class for every error raised by the workbench"""


class PermutationError(WorkbenchError):
    """Invalid permutation data or incompatible permutation sizes"""


class DigraphError(WorkbenchError):
    """A digraph violates regularity, looplessness or a size constraint"""


class NotStronglyConnectedError(DigraphError):
    """Raised when a distance is requested between mutually unreachable vertices"""

    def __init__(self, source, target):
        super().__init__(f"vertex {target} is unreachable from vertex {source}")
        self.source = source
        self.target = target


class GroupoidError(WorkbenchError):
    """A groupoid table fails a required property"""


class CddError(WorkbenchError):
    """Invalid cyclic difference or generalized cyclic difference parameters"""

    def __init__(self, message, vertex=None):
        super().__init__(message)
        self.vertex = vertex


class CoverGroupError(WorkbenchError):
    """Invalid covering-group or coset-digraph input"""


class FormatError(WorkbenchError):
    """A workbench file could not be parsed"""

    def __init__(self, source, line, message):
        super().__init__(f"{source}:{line}: {message}")
        self.source = source
        self.line = line


class SearchError(WorkbenchError):
    """Invalid search specification"""
