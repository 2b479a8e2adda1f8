class ReconstructionError(RuntimeError):
    """ 匹配树损坏: 某条合并记录两侧的超点都已被匹配
    """


class OracleLimitError(ValueError):
    pass
