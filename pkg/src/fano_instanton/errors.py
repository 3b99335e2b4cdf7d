from __future__ import annotations


class FanoError(Exception):
    """Base class for input-level failures (bad charge, bad presentation, ...)."""


class NotAdmissible(FanoError):
    pass


class DefectViolation(FanoError):
    pass


class NegativeEntry(FanoError):
    def __init__(self, p: int, q: int, value: int):
        super().__init__(f"e^({p},{q}) = {value} < 0")
        self.p, self.q, self.value = p, q, value


class NegativeMultiplicity(FanoError):
    def __init__(self, term: str, value: int):
        super().__init__(f"multiplicity of {term} is {value} < 0")
        self.term, self.value = term, value


class RankMismatch(FanoError):
    pass


class NotSurjective(FanoError):
    def __init__(self, witness, message: str = ""):
        super().__init__(message or f"entries vanish simultaneously at {witness}")
        self.witness = witness


class Destabilized(FanoError):
    def __init__(self, twist, dim: int):
        super().__init__(f"h^0(E({twist})) = {dim} > 0 in the destabilizing region")
        self.twist, self.dim = twist, dim


class SpecialLine(FanoError):
    pass


class NonFiniteRegion(RuntimeError):
    """The analytic bounding of a candidate region failed (hard defect)."""


class ConsistencyFailure(RuntimeError):
    """Two independent computation routes disagree (hard defect)."""


class CapTooSmall(UserWarning):
    pass
