class VertexStateError(ValueError):
    """Operation on a vertex that is not alive (or already removed)."""


class SideMismatchError(ValueError):
    """Vertices given to one operation are on the wrong sides."""


class StoreInvariantError(ValueError):
    pass
