from __future__ import annotations


class EgobotError(Exception):
    """Root of every error raised by egobot."""


class EdgeListError(EgobotError, ValueError):
    def __init__(self, message: str, *, path: str | None = None, line: int | None = None):
        where = ""
        if path is not None:
            where = f"{path}:"
        if line is not None:
            where = f"{where}{line}: "
        elif where:
            where = f"{where} "
        super().__init__(f"{where}{message}")
        self.path = path
        self.line = line


class UnknownNodeError(EgobotError, KeyError):
    def __init__(self, node_id: str):
        super().__init__(node_id)
        self.node_id = node_id

    def __str__(self) -> str:
        return f"Unknown node id: {self.node_id!r}"


class UndefinedMeasureError(EgobotError, ValueError):
    pass


class DegenerateEgoError(UndefinedMeasureError):
    def __init__(self, ego_id: str, size: int, minimum: int = 3):
        super().__init__(f"Ego {ego_id!r} has a degenerate network: {size} node(s), need >= {minimum}")
        self.ego_id = ego_id
        self.size = size
        self.minimum = minimum

    def __reduce__(self):
        return (type(self), (self.ego_id, self.size, self.minimum))


class ConfigError(EgobotError, ValueError):
    pass


class ClusteringError(EgobotError, ValueError):
    pass
