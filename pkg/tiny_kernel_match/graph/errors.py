class GraphParseError(ValueError):
    """ 图文件解析错误, 带文件路径和行号
    """

    def __init__(self, path: str, line_no: int, message: str):
        self.path = str(path)
        self.line_no = line_no
        self.message = message
        super().__init__(f"{self.path}:{line_no}: {message}")


class MalformedHeaderError(GraphParseError):
    """Header or size line does not follow the declared format."""


class IndexOutOfBoundsError(GraphParseError):
    """Entry index outside the declared dimensions."""


class TruncatedEntriesError(GraphParseError):
    """File ended before the declared number of entries was read."""


class InvalidTokenError(GraphParseError):
    """Non-numeric or missing token on an entry line."""


class NegativeIdError(GraphParseError):
    """Negative vertex id in an edge list."""


class GraphInvariantError(ValueError):
    pass


class VertexRangeError(ValueError):
    pass
