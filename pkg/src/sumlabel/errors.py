class SumLabelError(ValueError):
    """Base class for every error raised by sumlabel."""


class GroundSetError(SumLabelError):
    pass


class LabelingError(SumLabelError):
    pass


class GraphError(SumLabelError):
    pass


class EnumerationLimitError(SumLabelError):
    pass


class InadmissibleTopologyError(SumLabelError):
    def __init__(self, message, uncovered=None):
        super().__init__(message)
        self.uncovered = uncovered
